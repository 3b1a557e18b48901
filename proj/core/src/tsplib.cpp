#include "tsphyb/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace tsphyb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

template <typename T>
std::optional<T> to_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// "KEY : VALUE", "KEY: VALUE" or a bare section keyword.
struct HeaderLine {
  std::string key;
  std::string_view value;
};

HeaderLine split_header(std::string_view line) {
  HeaderLine h;
  const auto colon = line.find(':');
  std::string_view key = colon == std::string_view::npos ? line : line.substr(0, colon);
  key = trim(key);
  h.key.assign(key);
  std::transform(h.key.begin(), h.key.end(), h.key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (colon != std::string_view::npos) h.value = trim(line.substr(colon + 1));
  return h;
}

bool is_section_keyword(const std::string& key) {
  return key.ends_with("_SECTION") || key == "EOF";
}

Metric metric_from_string(std::string_view type) {
  if (type == "EUC_2D") return Metric::euc_2d;
  if (type == "CEIL_2D") return Metric::ceil_2d;
  if (type == "GEO") return Metric::geo;
  if (type == "ATT") return Metric::att;
  throw UnsupportedMetricError(std::string(type));
}

std::int64_t nint(double x) { return static_cast<std::int64_t>(x + 0.5); }

// TSPLIB95 GEO: coordinates are DDD.MM (degrees, minutes); the integer part is
// truncated, not rounded.
double geo_radians(double v) {
  constexpr double pi = 3.141592;
  const auto deg = static_cast<double>(static_cast<std::int64_t>(v));
  const double min = v - deg;
  return pi * (deg + 5.0 * min / 3.0) / 180.0;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

UnsupportedMetricError::UnsupportedMetricError(const std::string& type)
    : std::runtime_error("unsupported EDGE_WEIGHT_TYPE '" + type +
                         "' (supported: EUC_2D, CEIL_2D, GEO, ATT)") {}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::euc_2d: return "EUC_2D";
    case Metric::ceil_2d: return "CEIL_2D";
    case Metric::geo: return "GEO";
    case Metric::att: return "ATT";
  }
  return "?";
}

std::int64_t edge_weight(const Coord& a, const Coord& b, Metric metric) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  switch (metric) {
    case Metric::euc_2d:
      return nint(std::sqrt(dx * dx + dy * dy));
    case Metric::ceil_2d:
      return static_cast<std::int64_t>(std::ceil(std::sqrt(dx * dx + dy * dy)));
    case Metric::att: {
      const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
      const std::int64_t t = nint(r);
      return static_cast<double>(t) < r ? t + 1 : t;
    }
    case Metric::geo: {
      constexpr double earth_radius = 6378.388;
      const double lat_a = geo_radians(a.x), lon_a = geo_radians(a.y);
      const double lat_b = geo_radians(b.x), lon_b = geo_radians(b.y);
      const double q1 = std::cos(lon_a - lon_b);
      const double q2 = std::cos(lat_a - lat_b);
      const double q3 = std::cos(lat_a + lat_b);
      return static_cast<std::int64_t>(
          earth_radius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0);
    }
  }
  return 0;
}

NeighborLists build_neighbors(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  NeighborLists lists(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = lists[i];
    row.reserve(n > 0 ? n - 1 : 0);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) row.push_back(static_cast<int>(j));
    std::stable_sort(row.begin(), row.end(), [&](int a, int b) {
      return dist(i, static_cast<std::size_t>(a)) < dist(i, static_cast<std::size_t>(b));
    });
  }
  return lists;
}

Instance::Instance(std::string name, Metric metric, std::vector<Coord> coords)
    : name_(std::move(name)), metric_(metric), coords_(std::move(coords)),
      dist_(coords_.size()) {
  const std::size_t n = coords_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto w = edge_weight(coords_[i], coords_[j], metric_);
      dist_.at(i, j) = w;
      dist_.at(j, i) = w;
    }
  neighbors_ = build_neighbors(dist_);
}

Instance parse_instance(std::string_view text) {
  const auto lines = split_lines(text);
  std::string name;
  std::optional<std::size_t> dimension;
  std::optional<Metric> metric;
  std::vector<Coord> coords;
  std::vector<bool> seen;
  std::size_t read = 0;
  bool have_section = false;

  std::size_t ln = 0;
  while (ln < lines.size()) {
    const auto line = trim(lines[ln]);
    ++ln;
    if (line.empty()) continue;
    const auto h = split_header(line);
    if (h.key == "EOF") break;
    if (h.key == "NAME") {
      name.assign(h.value);
    } else if (h.key == "TYPE") {
      if (h.value != "TSP") throw ParseError("unsupported TYPE '" + std::string(h.value) + "'", ln);
    } else if (h.key == "DIMENSION") {
      const auto d = to_number<std::size_t>(h.value);
      if (!d || *d == 0) throw ParseError("invalid DIMENSION '" + std::string(h.value) + "'", ln);
      dimension = *d;
    } else if (h.key == "EDGE_WEIGHT_TYPE") {
      metric = metric_from_string(h.value);
    } else if (h.key == "NODE_COORD_SECTION") {
      if (!dimension) throw ParseError("NODE_COORD_SECTION before DIMENSION", ln);
      have_section = true;
      coords.assign(*dimension, Coord{});
      seen.assign(*dimension, false);
      while (ln < lines.size()) {
        const auto row = trim(lines[ln]);
        if (row.empty()) {
          ++ln;
          continue;
        }
        const auto first = split_header(row);
        if (is_section_keyword(first.key) || std::isalpha(static_cast<unsigned char>(row[0])))
          break;
        ++ln;
        const auto tok = split_ws(row);
        if (tok.size() < 3) throw ParseError("expected 'id x y'", ln);
        const auto id = to_number<std::size_t>(tok[0]);
        const auto x = to_number<double>(tok[1]);
        const auto y = to_number<double>(tok[2]);
        if (!id || !x || !y) throw ParseError("malformed coordinate line", ln);
        if (*id < 1 || *id > *dimension)
          throw ParseError("node id " + std::to_string(*id) + " outside 1.." +
                               std::to_string(*dimension),
                           ln);
        if (seen[*id - 1]) throw ParseError("duplicate node id " + std::to_string(*id), ln);
        seen[*id - 1] = true;
        coords[*id - 1] = Coord{*x, *y};
        ++read;
      }
      if (read != *dimension)
        throw ParseError("DIMENSION is " + std::to_string(*dimension) + " but " +
                             std::to_string(read) + " coordinates were read",
                         std::min(ln + 1, lines.size()));
    } else if (h.key.ends_with("_SECTION")) {
      throw ParseError("unsupported section " + h.key, ln);
    }
    // Other keywords (COMMENT, CAPACITY, DISPLAY_DATA_TYPE, ...) are ignored.
  }

  if (!dimension) throw ParseError("missing DIMENSION", 0);
  if (!metric) throw ParseError("missing EDGE_WEIGHT_TYPE", 0);
  if (!have_section) throw ParseError("missing NODE_COORD_SECTION", 0);
  return Instance(std::move(name), *metric, std::move(coords));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

Instance load_instance(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return parse_instance(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

std::string to_tsplib(const Instance& inst) {
  auto shortest = [](double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  };
  std::string out;
  out += "NAME : " + inst.name() + "\n";
  out += "TYPE : TSP\n";
  out += "DIMENSION : " + std::to_string(inst.size()) + "\n";
  out += "EDGE_WEIGHT_TYPE : " + std::string(to_string(inst.metric())) + "\n";
  out += "NODE_COORD_SECTION\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& c = inst.coords()[i];
    out += std::to_string(i + 1) + " " + shortest(c.x) + " " + shortest(c.y) + "\n";
  }
  out += "EOF\n";
  return out;
}

std::vector<int> parse_tour(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<std::size_t> dimension;
  std::vector<int> tour;
  bool in_section = false;
  bool done = false;
  for (std::size_t ln = 1; ln <= lines.size() && !done; ++ln) {
    const auto line = trim(lines[ln - 1]);
    if (line.empty()) continue;
    if (!in_section) {
      const auto h = split_header(line);
      if (h.key == "EOF") break;
      if (h.key == "DIMENSION") {
        dimension = to_number<std::size_t>(h.value);
        if (!dimension) throw ParseError("invalid DIMENSION", ln);
      } else if (h.key == "TOUR_SECTION") {
        in_section = true;
      }
      continue;
    }
    for (auto tok : split_ws(line)) {
      if (tok == "-1" || tok == "EOF") {
        done = true;
        break;
      }
      const auto id = to_number<int>(tok);
      if (!id || *id < 1) throw ParseError("invalid tour entry '" + std::string(tok) + "'", ln);
      tour.push_back(*id - 1);
    }
  }
  if (!in_section) throw ParseError("missing TOUR_SECTION", 0);
  if (dimension && *dimension != tour.size())
    throw ParseError("tour has " + std::to_string(tour.size()) + " entries, DIMENSION is " +
                         std::to_string(*dimension),
                     0);
  std::vector<int> sorted = tour;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k)) throw ParseError("tour is not a permutation", 0);
  return tour;
}

std::vector<int> load_tour(const std::filesystem::path& path) {
  return parse_tour(read_text_file(path));
}

}  // namespace tsphyb
