#include "tsphyb/hybrid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "tsphyb/repair.hpp"
#include "tsphyb/sisr.hpp"

namespace tsphyb {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool eat(std::string_view& s, std::string_view prefix) {
  if (!s.starts_with(prefix)) return false;
  s.remove_prefix(prefix.size());
  return true;
}

std::optional<int> eat_int(std::string_view& s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p == s.data()) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(p - s.data()));
  return v;
}

bool eat_rep(std::string_view& s) { return eat(s, "REP") || eat(s, "POR"); }

[[noreturn]] void unknown(std::string_view name) {
  std::string msg = "unknown pipeline '" + std::string(name) + "'; valid names:";
  for (const auto& p : pipeline_menu()) msg += " " + p.name();
  throw ConfigError(msg);
}

}  // namespace

std::string PipelineSpec::name() const {
  switch (family) {
    case PipelineFamily::tsp_mh: return "TSP-MH";
    case PipelineFamily::three_opt: return "3OPT" + std::to_string(rep_percent) + "Rep";
    case PipelineFamily::sisr: return "SISR" + std::to_string(subtours) + "tours";
    case PipelineFamily::sisr_three_opt: return "SISR3OPT" + std::to_string(rep_percent) + "Rep";
    case PipelineFamily::uncross:
      return "UNCROSS" + std::to_string(prob_percent) + "Prob" + std::to_string(rep_percent) +
             "Rep";
  }
  return {};
}

const std::vector<PipelineSpec>& pipeline_menu() {
  static const std::vector<PipelineSpec> menu = [] {
    std::vector<PipelineSpec> m;
    m.push_back({PipelineFamily::tsp_mh, 0, 0, 0});
    for (int y : {50, 100, 200}) m.push_back({PipelineFamily::three_opt, 0, 0, y});
    for (int x : {1, 2, 3, 4}) m.push_back({PipelineFamily::sisr, x, 0, 0});
    for (int y : {1, 5, 10}) m.push_back({PipelineFamily::sisr_three_opt, 0, 0, y});
    for (int x : {20, 50, 100})
      for (int y : {1, 5, 10}) m.push_back({PipelineFamily::uncross, 0, x, y});
    return m;
  }();
  return menu;
}

PipelineSpec parse_pipeline_spec(std::string_view name) {
  const std::string u = upper(name);
  std::string_view s = u;
  PipelineSpec spec;
  bool ok = false;
  if (s == "TSP-MH") {
    ok = true;
  } else if (eat(s, "3OPT")) {
    spec.family = PipelineFamily::three_opt;
    auto y = eat_int(s);
    ok = y && eat_rep(s) && s.empty();
    spec.rep_percent = y.value_or(0);
  } else if (eat(s, "SISR3OPT")) {
    spec.family = PipelineFamily::sisr_three_opt;
    auto y = eat_int(s);
    ok = y && eat_rep(s) && s.empty();
    spec.rep_percent = y.value_or(0);
  } else if (eat(s, "SISR")) {
    spec.family = PipelineFamily::sisr;
    auto x = eat_int(s);
    ok = x && eat(s, "TOURS") && s.empty();
    spec.subtours = x.value_or(0);
  } else if (eat(s, "UNCROSS")) {
    spec.family = PipelineFamily::uncross;
    auto x = eat_int(s);
    const bool mid = x && eat(s, "PROB");
    auto y = mid ? eat_int(s) : std::nullopt;
    ok = y && eat_rep(s) && s.empty();
    spec.prob_percent = x.value_or(0);
    spec.rep_percent = y.value_or(0);
  }
  const auto& menu = pipeline_menu();
  if (!ok || std::find(menu.begin(), menu.end(), spec) == menu.end()) unknown(name);
  return spec;
}

HybridPipeline::HybridPipeline(PipelineSpec spec, std::size_t n, OfcPolicy policy)
    : spec_(spec), n_(n), policy_(policy) {
  switch (spec_.family) {
    case PipelineFamily::tsp_mh: break;
    case PipelineFamily::three_opt:
      repetitions_ = resolve_percent(spec_.rep_percent, n);
      break;
    case PipelineFamily::sisr:
      subtours_ = spec_.subtours;
      if (static_cast<std::size_t>(subtours_) > n / 2)
        throw ConfigError(spec_.name() + ": needs at least " + std::to_string(2 * subtours_) +
                          " cities, instance has " + std::to_string(n));
      break;
    case PipelineFamily::sisr_three_opt:
      subtours_ = 1;
      repetitions_ = resolve_percent(spec_.rep_percent, n);
      break;
    case PipelineFamily::uncross:
      subtours_ = 1;
      probability_ = spec_.prob_percent / 100.0;
      repetitions_ = resolve_percent(spec_.rep_percent, n);
      break;
  }
  if (subtours_ > 0 && n < 2) throw ConfigError(spec_.name() + ": instance too small");
}

std::int64_t HybridPipeline::cost() const noexcept {
  return 1 + (policy_ == OfcPolicy::per_operator ? repetitions_ : 0);
}

std::vector<int> HybridPipeline::transform(std::span<const int> decoded, const Instance& inst,
                                           Rng& rng, PipelineStats* stats) const {
  std::vector<int> order = subtours_ > 0 ? sisr(decoded, subtours_, inst, rng)
                                         : repair_tour(decoded, rng);
  switch (spec_.family) {
    case PipelineFamily::three_opt:
    case PipelineFamily::sisr_three_opt:
      three_opt_repeat(order, inst, repetitions_, rng, stats ? &stats->kopt : nullptr);
      break;
    case PipelineFamily::uncross:
      uncross_prob_operator(order, inst, probability_, repetitions_, rng,
                            stats ? &stats->uncross : nullptr);
      break;
    default: break;
  }
  if (stats) ++stats->applications;
  return order;
}

std::optional<Tour> HybridPipeline::apply(std::span<const int> decoded, const Instance& inst,
                                          Budget& budget, Rng& rng, PipelineStats* stats) const {
  if (budget.remaining() < cost()) return std::nullopt;
  std::vector<int> order = transform(decoded, inst, rng, stats);
  for (std::int64_t k = 1; k < cost(); ++k) budget.try_consume();
  const auto len = tour_length(order, inst, budget);
  return Tour(std::move(order), len);
}

HybridPipeline parse_pipeline_name(std::string_view name, std::size_t n, OfcPolicy policy) {
  return HybridPipeline(parse_pipeline_spec(name), n, policy);
}

}  // namespace tsphyb
