#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tsphyb/bench.hpp"

namespace tsphyb {

namespace {

using nlohmann::json;

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json run_to_json(const RunResult& r) {
  return {{"index", r.index},         {"seed", r.seed},           {"best_bu", r.best_bu},
          {"best_au", r.best_au},     {"ofc_at_best", r.ofc_at_best}, {"ofc_used", r.ofc_used},
          {"final_trace", r.final_trace}, {"tour", r.tour}};
}

RunResult run_from_json(const json& j) {
  RunResult r;
  j.at("index").get_to(r.index);
  j.at("seed").get_to(r.seed);
  j.at("best_bu").get_to(r.best_bu);
  j.at("best_au").get_to(r.best_au);
  j.at("ofc_at_best").get_to(r.ofc_at_best);
  j.at("ofc_used").get_to(r.ofc_used);
  j.at("final_trace").get_to(r.final_trace);
  j.at("tour").get_to(r.tour);
  return r;
}

std::string fmt(double v, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

std::string csv_row(const RunReport& r) {
  std::string row = csv_field(r.instance) + "," + std::to_string(r.n) + ",";
  row += r.best_ref ? std::to_string(*r.best_ref) : "";
  row += "," + std::to_string(r.best_bu) + ",";
  row += r.best_ref ? format_error(r.best_bu, *r.best_ref) : "";
  row += "," + std::to_string(r.best_au) + ",";
  row += r.best_ref ? format_error(r.best_au, *r.best_ref) : "";
  row += "," + csv_field(r.hybridization()) + "," + std::to_string(r.ofc_best) + "," +
         std::to_string(r.ofc_limit);
  return row;
}

std::string to_csv(const std::vector<RunReport>& reports) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : reports) out += csv_row(r) + '\n';
  return out;
}

std::string to_json(const std::vector<RunReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json runs = json::array();
    for (const auto& run : r.runs) runs.push_back(run_to_json(run));
    arr.push_back({{"instance", r.instance},
                   {"n", r.n},
                   {"mh", r.mh},
                   {"pipeline", r.pipeline},
                   {"ofc_limit", r.ofc_limit},
                   {"best_ref", r.best_ref ? json(*r.best_ref) : json(nullptr)},
                   {"aggregates",
                    {{"best_bu", r.best_bu},
                     {"best_au", r.best_au},
                     {"worst_au", r.worst_au},
                     {"median_au", r.median_au},
                     {"amplitude", r.amplitude},
                     {"ofc_best", r.ofc_best},
                     {"mean_ofc_percent", r.mean_ofc_percent},
                     {"settled_fraction", r.settled_fraction}}},
                   {"runs", runs}});
  }
  return json{{"reports", arr}}.dump(2) + "\n";
}

std::vector<RunReport> reports_from_json(std::string_view text) {
  std::vector<RunReport> out;
  try {
    const json doc = json::parse(text);
    for (const auto& j : doc.at("reports")) {
      RunReport r;
      j.at("instance").get_to(r.instance);
      j.at("n").get_to(r.n);
      j.at("mh").get_to(r.mh);
      j.at("pipeline").get_to(r.pipeline);
      j.at("ofc_limit").get_to(r.ofc_limit);
      if (!j.at("best_ref").is_null()) r.best_ref = j.at("best_ref").get<std::int64_t>();
      const auto& a = j.at("aggregates");
      a.at("best_bu").get_to(r.best_bu);
      a.at("best_au").get_to(r.best_au);
      a.at("worst_au").get_to(r.worst_au);
      a.at("median_au").get_to(r.median_au);
      a.at("amplitude").get_to(r.amplitude);
      a.at("ofc_best").get_to(r.ofc_best);
      a.at("mean_ofc_percent").get_to(r.mean_ofc_percent);
      a.at("settled_fraction").get_to(r.settled_fraction);
      for (const auto& run : j.at("runs")) r.runs.push_back(run_from_json(run));
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

std::string render_route_svg(std::span<const int> order, const Instance& inst) {
  constexpr double kSize = 800.0, kMargin = 20.0;
  const auto coords = inst.coords();
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!coords.empty()) {
    const auto [xa, xb] = std::minmax_element(coords.begin(), coords.end(),
                                              [](auto& a, auto& b) { return a.x < b.x; });
    const auto [ya, yb] = std::minmax_element(coords.begin(), coords.end(),
                                              [](auto& a, auto& b) { return a.y < b.y; });
    x0 = xa->x, x1 = xb->x, y0 = ya->y, y1 = yb->y;
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double scale = (kSize - 2 * kMargin) / span;
  auto px = [&](const Coord& c) { return fmt(kMargin + (c.x - x0) * scale, "%.2f"); };
  auto py = [&](const Coord& c) { return fmt(kSize - kMargin - (c.y - y0) * scale, "%.2f"); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
    << kSize + 30 << "\" viewBox=\"0 0 " << kSize << " " << kSize + 30 << "\">\n";
  if (!inst.planar())
    s << "<!-- GEO coordinates drawn as planar (latitude, longitude) pairs; this is not a map "
         "projection -->\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<path fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1.5\" d=\"";
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& c = inst.coord(order[k]);
    s << (k == 0 ? "M" : " L") << px(c) << "," << py(c);
  }
  if (!order.empty()) s << " Z";
  s << "\"/>\n";
  for (int city : order) {
    const auto& c = inst.coord(city);
    s << "<circle cx=\"" << px(c) << "\" cy=\"" << py(c) << "\" r=\"3\" fill=\"#c00000\"/>\n";
  }
  std::string name;
  for (char ch : inst.name()) {
    if (ch == '<') name += "&lt;";
    else if (ch == '>') name += "&gt;";
    else if (ch == '&') name += "&amp;";
    else name += ch;
  }
  s << "<text x=\"" << kMargin << "\" y=\"" << kSize + 20 << "\" font-family=\"monospace\" "
    << "font-size=\"14\">" << name << " length " << closed_length(order, inst) << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

}  // namespace tsphyb
