#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "tsphyb/mh.hpp"

namespace tsphyb {

namespace {

constexpr std::int64_t kUnknown = std::numeric_limits<std::int64_t>::max();

double distance(const TentativeVector& a, const TentativeVector& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

class Pso final : public Metaheuristic {
 public:
  using Metaheuristic::Metaheuristic;

 private:
  void on_initialized() override {
    vel_.assign(pop(), TentativeVector(n(), 0.0));
    pbest_ = state_.positions;
    pbest_fit_ = state_.fitness;
    const auto b = best_index();
    gbest_ = pbest_[b];
    gbest_fit_ = pbest_fit_[b];
  }

  void generation() override {
    const auto& p = cfg_.params;
    const double vmax = static_cast<double>(n()) - 1.0;
    for (std::size_t i = 0; i < pop(); ++i) {
      auto& x = state_.positions[i];
      auto& v = vel_[i];
      for (std::size_t d = 0; d < n(); ++d) {
        v[d] = p.pso_inertia * v[d] + p.pso_c1 * rng_.uniform() * (pbest_[i][d] - x[d]) +
               p.pso_c2 * rng_.uniform() * (gbest_[d] - x[d]);
        v[d] = std::clamp(v[d], -vmax, vmax);
        x[d] += v[d];
      }
      clamp_to_box(x);
      const auto f = evaluate_member(i);
      if (f < 0) return;
      if (f < pbest_fit_[i]) {
        pbest_fit_[i] = f;
        pbest_[i] = x;
      }
      if (f < gbest_fit_) {
        gbest_fit_ = f;
        gbest_ = x;
      }
    }
  }

  std::vector<TentativeVector> vel_, pbest_;
  std::vector<std::int64_t> pbest_fit_;
  TentativeVector gbest_;
  std::int64_t gbest_fit_ = kUnknown;
};

class Sca final : public Metaheuristic {
 public:
  using Metaheuristic::Metaheuristic;

 private:
  void on_initialized() override {
    const auto b = best_index();
    dest_ = state_.positions[b];
    dest_fit_ = state_.fitness[b];
  }

  void generation() override {
    const double a = cfg_.params.sca_a;
    const double r1 = a - a * progress();
    for (std::size_t i = 0; i < pop(); ++i) {
      auto& x = state_.positions[i];
      for (std::size_t d = 0; d < n(); ++d) {
        const double r2 = rng_.uniform(0.0, 2.0 * std::numbers::pi);
        const double r3 = rng_.uniform(0.0, 2.0);
        const double r4 = rng_.uniform();
        const double gap = std::abs(r3 * dest_[d] - x[d]);
        x[d] += r1 * (r4 < 0.5 ? std::sin(r2) : std::cos(r2)) * gap;
      }
      clamp_to_box(x);
      const auto f = evaluate_member(i);
      if (f < 0) return;
      if (f < dest_fit_) {
        dest_fit_ = f;
        dest_ = x;
      }
    }
  }

  TentativeVector dest_;
  std::int64_t dest_fit_ = kUnknown;
};

class Gsa final : public Metaheuristic {
 public:
  using Metaheuristic::Metaheuristic;

 private:
  void on_initialized() override { vel_.assign(pop(), TentativeVector(n(), 0.0)); }

  void generation() override {
    const auto& p = cfg_.params;
    const double g = p.gsa_g0 * std::exp(-p.gsa_alpha * progress());
    const auto& fit = state_.fitness;
    const auto [lo, hi] = std::minmax_element(fit.begin(), fit.end());
    std::vector<double> mass(pop(), 1.0);
    if (*hi > *lo)
      for (std::size_t i = 0; i < pop(); ++i)
        mass[i] = static_cast<double>(*hi - fit[i]) / static_cast<double>(*hi - *lo);
    const double total = std::accumulate(mass.begin(), mass.end(), 0.0);
    for (double& m : mass) m = total > 0.0 ? m / total : 1.0 / static_cast<double>(pop());

    std::vector<std::size_t> rank(pop());
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(),
                     [&](std::size_t a, std::size_t b) { return fit[a] < fit[b]; });
    rank.resize(std::min<std::size_t>(rank.size(), static_cast<std::size_t>(p.gsa_kbest)));

    // Accelerations use the positions at the start of the generation.
    const auto start = state_.positions;
    std::vector<double> acc(n());
    for (std::size_t i = 0; i < pop(); ++i) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (std::size_t j : rank) {
        if (j == i) continue;
        const double scale = rng_.uniform() * g * mass[j] / (distance(start[i], start[j]) + 1e-10);
        for (std::size_t d = 0; d < n(); ++d) acc[d] += scale * (start[j][d] - start[i][d]);
      }
      auto& x = state_.positions[i];
      auto& v = vel_[i];
      for (std::size_t d = 0; d < n(); ++d) {
        v[d] = rng_.uniform() * v[d] + acc[d];
        x[d] += v[d];
      }
      clamp_to_box(x);
      if (evaluate_member(i) < 0) return;
    }
  }

  std::vector<TentativeVector> vel_;
};

class Bh final : public Metaheuristic {
 public:
  using Metaheuristic::Metaheuristic;

 private:
  void on_initialized() override {
    const auto b = best_index();
    hole_ = state_.positions[b];
    hole_fit_ = state_.fitness[b];
  }

  void generation() override {
    for (std::size_t i = 0; i < pop(); ++i) {
      auto& x = state_.positions[i];
      for (std::size_t d = 0; d < n(); ++d) x[d] += rng_.uniform() * (hole_[d] - x[d]);
      clamp_to_box(x);
      const auto f = evaluate_member(i);
      if (f < 0) return;
      if (f < hole_fit_) {
        std::swap(hole_, x);
        std::swap(hole_fit_, state_.fitness[i]);
      }
    }
    double total = static_cast<double>(hole_fit_);
    for (auto f : state_.fitness) total += static_cast<double>(f);
    const double horizon = static_cast<double>(hole_fit_) / total;
    for (std::size_t i = 0; i < pop(); ++i)
      if (distance(hole_, state_.positions[i]) < horizon) {
        random_position(state_.positions[i]);
        state_.fitness[i] = kUnknown;
      }
  }

  TentativeVector hole_;
  std::int64_t hole_fit_ = kUnknown;
};

class Ea final : public Metaheuristic {
 public:
  using Metaheuristic::Metaheuristic;

 private:
  void seed_population() override {
    std::vector<int> order(n());
    for (std::size_t i = 0; i < pop(); ++i) {
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng_.engine());
      const auto f = evaluate_order(order);
      if (f < 0) return;
      encode_into(order, state_.positions[i]);
      state_.fitness[i] = f;
    }
  }

  std::size_t tournament() {
    const auto a = static_cast<std::size_t>(rng_.uniform_int(0, cfg_.population - 1));
    const auto b = static_cast<std::size_t>(rng_.uniform_int(0, cfg_.population - 1));
    return state_.fitness[b] < state_.fitness[a] ? b : a;
  }

  void generation() override {
    const int last = static_cast<int>(n()) - 1;
    std::vector<std::pair<std::int64_t, std::vector<int>>> kids;
    for (std::size_t k = 0; k < pop(); ++k) {
      auto child = decode(state_.positions[tournament()]);
      for (int s = 0; s < cfg_.params.ea_swaps && last > 0; ++s)
        std::swap(child[static_cast<std::size_t>(rng_.uniform_int(0, last))],
                  child[static_cast<std::size_t>(rng_.uniform_int(0, last))]);
      const auto f = evaluate_order(child);
      if (f < 0) break;
      kids.emplace_back(f, std::move(child));
    }
    std::stable_sort(kids.begin(), kids.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::size_t> old(pop());
    std::iota(old.begin(), old.end(), 0);
    std::stable_sort(old.begin(), old.end(), [&](std::size_t a, std::size_t b) {
      return state_.fitness[a] < state_.fitness[b];
    });
    const std::size_t elites = std::min<std::size_t>(pop(), static_cast<std::size_t>(cfg_.params.ea_elites));
    std::vector<TentativeVector> next;
    std::vector<std::int64_t> next_fit;
    for (std::size_t e = 0; e < elites; ++e) {
      next.push_back(state_.positions[old[e]]);
      next_fit.push_back(state_.fitness[old[e]]);
    }
    for (std::size_t k = 0; k < kids.size() && next.size() < pop(); ++k) {
      next.push_back(encode(kids[k].second));
      next_fit.push_back(kids[k].first);
    }
    // A truncated generation keeps the best survivors of the old one.
    for (std::size_t e = elites; next.size() < pop(); ++e) {
      next.push_back(state_.positions[old[e]]);
      next_fit.push_back(state_.fitness[old[e]]);
    }
    state_.positions = std::move(next);
    state_.fitness = std::move(next_fit);
  }
};

class Sa final : public Metaheuristic {
 public:
  using Metaheuristic::Metaheuristic;

  double temperature() const {
    return sa_temperature(cfg_.params, state_.generation / stage_length_);
  }

 private:
  void on_initialized() override {
    const auto b = best_index();
    current_ = state_.positions[b];
    current_fit_ = state_.fitness[b];
    const auto stages = std::max<std::int64_t>(1, sa_stage_count(cfg_.params));
    stage_length_ = std::max<std::int64_t>(1, (horizon_ + stages - 1) / stages);
  }

  void generation() override {
    const double t = temperature();
    const double sigma = (static_cast<double>(n()) - 1.0) / 2.0 * t / cfg_.params.sa_t0;
    std::size_t best = pop();
    for (std::size_t k = 0; k < pop(); ++k) {
      auto& x = state_.positions[k];
      for (std::size_t d = 0; d < n(); ++d)
        x[d] = sigma > 0.0 ? current_[d] + rng_.normal(0.0, sigma) : current_[d];
      clamp_to_box(x);
      if (evaluate_member(k) < 0) break;
      if (best == pop() || state_.fitness[k] < state_.fitness[best]) best = k;
    }
    if (best == pop()) return;
    const auto delta = static_cast<double>(state_.fitness[best] - current_fit_);
    if (delta <= 0.0 || rng_.uniform() < std::exp(-delta / t)) {
      current_ = state_.positions[best];
      current_fit_ = state_.fitness[best];
    }
  }

  TentativeVector current_;
  std::int64_t current_fit_ = kUnknown;
  std::int64_t stage_length_ = 1;
};

/// Gaussian sample around `center`; coordinates leaving the box are redrawn
/// uniformly inside it.
void vortex_candidate(const TentativeVector& center, double radius, TentativeVector& out,
                      Rng& rng) {
  const double hi = static_cast<double>(center.size());
  for (std::size_t d = 0; d < center.size(); ++d) {
    double v = radius > 0.0 ? center[d] + rng.normal(0.0, radius) : center[d];
    if (v < 1.0 || v > hi) v = rng.uniform(1.0, hi);
    out[d] = v;
  }
}

class Vs final : public Metaheuristic {
 public:
  using Metaheuristic::Metaheuristic;

 private:
  void on_initialized() override {
    const auto b = best_index();
    center_ = state_.positions[b];
    center_fit_ = state_.fitness[b];
  }

  void generation() override {
    const double sigma0 = (static_cast<double>(n()) - 1.0) / 2.0;
    const double r = vs_radius(sigma0, cfg_.params.vs_x, state_.generation, horizon_);
    for (std::size_t k = 0; k < pop(); ++k) {
      vortex_candidate(center_, r, state_.positions[k], rng_);
      const auto f = evaluate_member(k);
      if (f < 0) return;
      if (f <= center_fit_) {
        center_fit_ = f;
        center_ = state_.positions[k];
      }
    }
  }

  TentativeVector center_;
  std::int64_t center_fit_ = kUnknown;
};

class Mvs final : public Metaheuristic {
 public:
  using Metaheuristic::Metaheuristic;

 private:
  void on_initialized() override {
    const std::size_t c =
        std::max<std::size_t>(1, std::min(pop(), static_cast<std::size_t>(cfg_.params.mvs_centers)));
    centers_.assign(state_.positions.begin(), state_.positions.begin() + static_cast<long>(c));
    center_fit_.assign(state_.fitness.begin(), state_.fitness.begin() + static_cast<long>(c));
    pin_best();
  }

  void pin_best() {
    centers_[0] = encode(state_.incumbent.order());
    center_fit_[0] = state_.incumbent.length();
  }

  void generation() override {
    const double sigma0 = (static_cast<double>(n()) - 1.0) / 2.0;
    const double r = vs_radius(sigma0, cfg_.params.vs_x, state_.generation, horizon_);
    for (std::size_t k = 0; k < pop(); ++k) {
      const std::size_t c = k % centers_.size();
      vortex_candidate(centers_[c], r, state_.positions[k], rng_);
      const auto f = evaluate_member(k);
      if (f < 0) break;
      if (f < center_fit_[c]) {
        center_fit_[c] = f;
        centers_[c] = state_.positions[k];
      }
    }
    pin_best();
  }

  std::vector<TentativeVector> centers_;
  std::vector<std::int64_t> center_fit_;
};

}  // namespace

std::unique_ptr<Metaheuristic> make_metaheuristic(const MhConfig& cfg, const Instance& inst,
                                                  const HybridPipeline& pipeline, Budget& budget,
                                                  Rng& rng) {
  const auto& p = cfg.params;
  if (p.ea_swaps < 0 || p.ea_elites < 0 || p.gsa_kbest < 1 || p.mvs_centers < 1 ||
      !(p.sa_t0 > p.sa_tf && p.sa_tf > 0.0) || !(p.sa_cooling > 0.0 && p.sa_cooling < 1.0) ||
      !(p.vs_x > 0.0 && p.vs_x < 1.0))
    throw ConfigError("metaheuristic parameters out of range");
  switch (cfg.kind) {
    case MhKind::bh: return std::make_unique<Bh>(cfg, inst, pipeline, budget, rng);
    case MhKind::ea: return std::make_unique<Ea>(cfg, inst, pipeline, budget, rng);
    case MhKind::gsa: return std::make_unique<Gsa>(cfg, inst, pipeline, budget, rng);
    case MhKind::mvs: return std::make_unique<Mvs>(cfg, inst, pipeline, budget, rng);
    case MhKind::pso: return std::make_unique<Pso>(cfg, inst, pipeline, budget, rng);
    case MhKind::sa: return std::make_unique<Sa>(cfg, inst, pipeline, budget, rng);
    case MhKind::sca: return std::make_unique<Sca>(cfg, inst, pipeline, budget, rng);
    case MhKind::vs: return std::make_unique<Vs>(cfg, inst, pipeline, budget, rng);
  }
  throw ConfigError("unknown metaheuristic kind");
}

}  // namespace tsphyb
