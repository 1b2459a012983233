#pragma once

#include <optional>
#include <vector>

#include "spinchain/dynamics.hpp"

namespace spinchain {

// Interval of strictly positive information flux, endpoints refined by
// bisection on f'(t) to 1e-10 in t.
struct FluxWindow {
  double a = 0.0;
  double b = 0.0;
  double d_a = 0.0;   // trace distance at the endpoints
  double d_b = 0.0;
  double increment() const { return d_b - d_a; }
};

struct FluxProfile {
  std::vector<double> times;
  std::vector<double> d_values;
  std::vector<double> sigma;     // +-inf sentinel where D vanishes with f' != 0
  std::vector<FluxWindow> windows;
};

struct MeasureResult {
  double value = 0.0;
  double horizon = 0.0;
  bool diverging = false;
  PairDifference pair{0.0, {1.0, 0.0}};
  std::vector<FluxWindow> windows;
};

// Flux sigma = (2 p^2 f + |c|^2) f' / (2 D) for an XX spec.
FluxProfile flux(const CoefficientEvaluator& eval, const QubitState& s1,
                 const QubitState& s2, double horizon,
                 double dt = kDefaultTimeStep);

// BLP measure: sum of trace-distance increments over positive-flux windows.
// The measure is assembled from D at refined window endpoints, never by
// integrating sigma (which is singular where D -> 0). The diverging flag is
// set when the horizon-truncated value grows more than 5% per doubling
// across horizon/4 -> horizon/2 -> horizon.
MeasureResult blp_measure(const CoefficientEvaluator& eval, double horizon,
                          std::optional<PairDifference> pair = std::nullopt,
                          double dt = kDefaultTimeStep);

struct OptimalPairReport {
  double equatorial_value = 0.0;
  double max_sampled_value = 0.0;
  int n_pairs = 0;
  bool optimal_confirmed = false;  // no sample exceeds equatorial by > 1e-9
  QubitState worst_a, worst_b;
};

OptimalPairReport verify_optimal_pair(const CoefficientEvaluator& eval,
                                      double horizon, int n_random_pairs,
                                      std::uint64_t seed,
                                      double dt = kDefaultTimeStep);

struct SweepRow {
  double h_over_j;
  double j0_over_j;
  double measure;
  bool diverging;
  double horizon;
};

// Uniform XX template with h0 fixed; embarrassingly parallel over the
// (h, J0) grid, results in deterministic parameter order.
std::vector<SweepRow> sweep_measure(int n_sites, double h0,
                                    const std::vector<double>& h_values,
                                    const std::vector<double>& j0_values,
                                    double horizon, int threads = 0,
                                    double dt = kDefaultTimeStep);

}  // namespace spinchain
