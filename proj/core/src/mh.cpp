#include "tsphyb/mh.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

namespace tsphyb {

const std::vector<MhKind>& all_mh_kinds() {
  static const std::vector<MhKind> kinds{MhKind::bh,  MhKind::ea, MhKind::gsa, MhKind::mvs,
                                         MhKind::pso, MhKind::sa, MhKind::sca, MhKind::vs};
  return kinds;
}

std::string_view to_string(MhKind kind) {
  switch (kind) {
    case MhKind::bh: return "BH";
    case MhKind::ea: return "EA";
    case MhKind::gsa: return "GSA";
    case MhKind::mvs: return "MVS";
    case MhKind::pso: return "PSO";
    case MhKind::sa: return "SA";
    case MhKind::sca: return "SCA";
    case MhKind::vs: return "VS";
  }
  return "?";
}

MhKind parse_mh_kind(std::string_view name) {
  std::string u(name);
  for (char& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (MhKind k : all_mh_kinds())
    if (to_string(k) == u) return k;
  std::string msg = "unknown metaheuristic '" + std::string(name) + "'; valid names:";
  for (MhKind k : all_mh_kinds()) msg += " " + std::string(to_string(k));
  throw ConfigError(msg);
}

double sa_temperature(const MhParams& p, std::int64_t stage) {
  return std::max(p.sa_tf, p.sa_t0 * std::pow(p.sa_cooling, static_cast<double>(stage)));
}

std::int64_t sa_stage_count(const MhParams& p) {
  return static_cast<std::int64_t>(std::ceil(std::log(p.sa_tf / p.sa_t0) / std::log(p.sa_cooling)));
}

double vs_radius(double sigma0, double x, std::int64_t t, std::int64_t horizon) {
  const double a = std::max(1e-10, 1.0 - static_cast<double>(t) / static_cast<double>(horizon));
  return sigma0 / x * boost::math::gamma_p_inv(a, x);
}

Metaheuristic::Metaheuristic(const MhConfig& cfg, const Instance& inst,
                             const HybridPipeline& pipeline, Budget& budget, Rng& rng)
    : cfg_(cfg), inst_(inst), pipeline_(pipeline), budget_(budget), rng_(rng) {
  if (cfg_.population < 1) throw ConfigError("population must be at least 1");
  if (pipeline_.cities() != inst_.size())
    throw ConfigError("pipeline resolved for " + std::to_string(pipeline_.cities()) +
                      " cities, instance has " + std::to_string(inst_.size()));
  const std::int64_t per_gen = cfg_.population * pipeline_.cost();
  horizon_ = std::max<std::int64_t>(1, (budget_.limit() - per_gen) / per_gen);
  state_.positions.assign(pop(), TentativeVector(n(), 1.0));
  state_.fitness.assign(pop(), std::numeric_limits<std::int64_t>::max());
}

void Metaheuristic::seed_population() {
  for (std::size_t i = 0; i < pop(); ++i) {
    random_position(state_.positions[i]);
    if (evaluate_member(i) < 0) return;
  }
}

void Metaheuristic::initialize() {
  if (state_.initialized) return;
  state_.initialized = true;
  seed_population();
  if (!state_.stopped) on_initialized();
  if (budget_.remaining() < pipeline_.cost()) state_.stopped = true;
}

bool Metaheuristic::step() {
  if (!state_.initialized) initialize();
  if (state_.stopped) return false;
  generation();
  if (state_.stopped) return false;
  ++state_.generation;
  if (budget_.remaining() < pipeline_.cost()) state_.stopped = true;
  return !state_.stopped;
}

void Metaheuristic::run() {
  initialize();
  while (step()) {
  }
}

std::int64_t Metaheuristic::account(Tour tour) {
  const std::int64_t len = tour.length();
  if (state_.incumbent.empty() || len < state_.incumbent.length()) {
    state_.incumbent = std::move(tour);
    budget_.mark_best();
    state_.incumbent_ofc = budget_.used();
  }
  return len;
}

std::int64_t Metaheuristic::evaluate(TentativeVector& pos) {
  const auto decoded = decode(pos);
  auto tour = pipeline_.apply(decoded, inst_, budget_, rng_, &stats_);
  if (!tour) {
    state_.stopped = true;
    return -1;
  }
  encode_into(tour->order(), pos);
  return account(std::move(*tour));
}

std::int64_t Metaheuristic::evaluate_member(std::size_t i) {
  const std::int64_t f = evaluate(state_.positions[i]);
  if (f >= 0) state_.fitness[i] = f;
  return f;
}

std::int64_t Metaheuristic::evaluate_order(std::vector<int>& order) {
  auto tour = pipeline_.apply(order, inst_, budget_, rng_, &stats_);
  if (!tour) {
    state_.stopped = true;
    return -1;
  }
  order = tour->order();
  return account(std::move(*tour));
}

void Metaheuristic::random_position(TentativeVector& pos) {
  const double hi = static_cast<double>(n());
  for (double& x : pos) x = rng_.uniform(1.0, hi);
}

std::size_t Metaheuristic::best_index() const {
  return static_cast<std::size_t>(
      std::min_element(state_.fitness.begin(), state_.fitness.end()) - state_.fitness.begin());
}

double Metaheuristic::progress() const {
  return std::min(1.0, static_cast<double>(state_.generation) / static_cast<double>(horizon_));
}

}  // namespace tsphyb
