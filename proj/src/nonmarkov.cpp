#include "spinchain/nonmarkov.hpp"

#include <cmath>
#include <stdexcept>

#include "spinchain/util.hpp"

namespace spinchain {

namespace {

// Bisection root of df between brackets where it changes sign.
double refine_root(const CoefficientEvaluator& eval, double lo, double hi) {
  double flo = eval.df(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = eval.df(mid);
    if ((flo <= 0 && fm <= 0) || (flo > 0 && fm > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<FluxWindow> find_windows(const CoefficientEvaluator& eval,
                                     double horizon, double dt,
                                     const PairDifference& pd) {
  auto dist = [&](double t) {
    return evolved_pair_distance(eval.f(t), pd);
  };
  std::vector<FluxWindow> wins;
  double open_at = -1.0;
  double prev_t = 0.0;
  double prev_df = eval.df(0.0);
  if (prev_df > 0.0) open_at = 0.0;
  for (double t = dt; t <= horizon + dt * 0.5; t += dt) {
    const double tc = std::min(t, horizon);
    const double d = eval.df(tc);
    if (prev_df <= 0.0 && d > 0.0) {
      open_at = refine_root(eval, prev_t, tc);
    } else if (prev_df > 0.0 && d <= 0.0 && open_at >= 0.0) {
      const double b = refine_root(eval, prev_t, tc);
      FluxWindow w{open_at, b, dist(open_at), dist(b)};
      if (w.increment() > 0.0) wins.push_back(w);
      open_at = -1.0;
    }
    prev_t = tc;
    prev_df = d;
    if (tc >= horizon) break;
  }
  if (open_at >= 0.0) {
    FluxWindow w{open_at, horizon, dist(open_at), dist(horizon)};
    if (w.increment() > 0.0) wins.push_back(w);
  }
  return wins;
}

// sum of increments with windows clipped at the cutoff
double window_sum(const CoefficientEvaluator& eval,
                  const std::vector<FluxWindow>& wins,
                  const PairDifference& pd, double cutoff) {
  double total = 0.0;
  for (const auto& w : wins) {
    if (w.a >= cutoff) break;
    if (w.b <= cutoff) {
      total += w.increment();
    } else {
      const double d_cut = evolved_pair_distance(eval.f(cutoff), pd);
      total += std::max(0.0, d_cut - w.d_a);
    }
  }
  return total;
}

}  // namespace

FluxProfile flux(const CoefficientEvaluator& eval, const QubitState& s1,
                 const QubitState& s2, double horizon, double dt) {
  const PairDifference pd = pair_difference(s1, s2);
  FluxProfile prof;
  prof.times = time_grid(horizon, dt);
  prof.d_values.reserve(prof.times.size());
  prof.sigma.reserve(prof.times.size());
  for (double t : prof.times) {
    const double f = eval.f(t);
    const double df = eval.df(t);
    const double d = evolved_pair_distance(f, pd);
    prof.d_values.push_back(d);
    const double num = 0.5 * (2.0 * pd.p * pd.p * f + std::norm(pd.c)) * df;
    if (d <= 0.0) {
      prof.sigma.push_back(num == 0.0 ? 0.0
                                      : (num > 0 ? HUGE_VAL : -HUGE_VAL));
    } else {
      prof.sigma.push_back(num / d);
    }
  }
  prof.windows = find_windows(eval, horizon, dt, pd);
  return prof;
}

MeasureResult blp_measure(const CoefficientEvaluator& eval, double horizon,
                          std::optional<PairDifference> pair, double dt) {
  if (!(horizon > 0)) throw std::invalid_argument("blp_measure: empty grid");
  MeasureResult r;
  r.horizon = horizon;
  r.pair = pair.value_or(PairDifference{0.0, {1.0, 0.0}});
  r.windows = find_windows(eval, horizon, dt, r.pair);
  r.value = window_sum(eval, r.windows, r.pair, horizon);
  const double v2 = window_sum(eval, r.windows, r.pair, horizon / 2.0);
  const double v4 = window_sum(eval, r.windows, r.pair, horizon / 4.0);
  r.diverging = r.value > 1.05 * v2 && v2 > 1.05 * v4 && v4 > 0.0;
  return r;
}

OptimalPairReport verify_optimal_pair(const CoefficientEvaluator& eval,
                                      double horizon, int n_random_pairs,
                                      std::uint64_t seed, double dt) {
  OptimalPairReport rep;
  rep.n_pairs = n_random_pairs;
  rep.equatorial_value = blp_measure(eval, horizon, std::nullopt, dt).value;
  Rng rng(seed);
  rep.max_sampled_value = 0.0;
  for (int i = 0; i < n_random_pairs; ++i) {
    const QubitState a = random_pure_state(rng);
    const QubitState b = random_pure_state(rng);
    const double v =
        blp_measure(eval, horizon, pair_difference(a, b), dt).value;
    if (v > rep.max_sampled_value) {
      rep.max_sampled_value = v;
      rep.worst_a = a;
      rep.worst_b = b;
    }
  }
  rep.optimal_confirmed =
      rep.max_sampled_value <= rep.equatorial_value + 1e-9;
  return rep;
}

std::vector<SweepRow> sweep_measure(int n_sites, double h0,
                                    const std::vector<double>& h_values,
                                    const std::vector<double>& j0_values,
                                    double horizon, int threads, double dt) {
  std::vector<SweepRow> rows(h_values.size() * j0_values.size());
  parallel_for(rows.size(), threads, [&](std::size_t idx) {
    const std::size_t ih = idx / j0_values.size();
    const std::size_t ij = idx % j0_values.size();
    const double h = h_values[ih];
    const double j0 = j0_values[ij];
    CoefficientEvaluator eval(ChainSpec::uniform(n_sites, 1.0, j0, h, h0));
    const MeasureResult m = blp_measure(eval, horizon, std::nullopt, dt);
    rows[idx] = SweepRow{h, j0, m.value, m.diverging, horizon};
  });
  return rows;
}

}  // namespace spinchain
