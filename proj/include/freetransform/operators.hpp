#pragma once

#include <span>
#include <vector>

#include "freetransform/evaluator.hpp"
#include "freetransform/measures.hpp"
#include "freetransform/types.hpp"

namespace freetransform {

/// Default finite-difference step relative to t.
inline constexpr double kRelativeStep = 1e-3;

/// Richardson-extrapolated central difference (4 D_{h/2} - D_h) / 3 with
/// D_h = (V(t+h) - V(t-h)) / (2h). Error O(h^4). Throws StepError unless
/// t - 2h > 0 and h > 0.
Complex derivative_t(const TransformEvaluator& v, double t, double h);

/// t -> 2 V(t) - t V'(t); maps the k-times s-selfdecomposable class onto
/// the (k-1)-times one. The step is rel_step * t.
TransformEvaluator apply_bigD(TransformEvaluator v, double rel_step = kRelativeStep);

/// t -> V(t) - t V'(t); maps L_k onto L_{k-1}.
TransformEvaluator apply_smallD(TransformEvaluator v, double rel_step = kRelativeStep);

/// n-fold application of apply_bigD / apply_smallD. Nesting amplifies
/// rounding by roughly 3/rel_step per level, so powers above 2 want a
/// coarser step than the default.
TransformEvaluator apply_bigD_power(TransformEvaluator v, int n, double rel_step);
TransformEvaluator apply_smallD_power(TransformEvaluator v, int n, double rel_step);

/// Relative step that balances truncation against rounding for an n-fold
/// operator power.
double nested_relative_step(int n);

struct LimitRow {
  int k = 0;
  Complex value;
  double deviation = 0.0;
};

struct LimitReport {
  Complex limit;
  std::vector<LimitRow> rows;
  /// deviation[i] / deviation[i+1] for consecutive rows.
  std::vector<double> ratios;
  bool decreasing = false;
  /// Every ratio between rows whose k differ by a factor 10 lies in [5, 20].
  bool rate_ok = false;
};

/// Evaluates transform_Ubk(k, tr, t) for each k and measures the distance to
/// voiculescu_direct(a, m, t). Throws InvalidInput unless ks is strictly
/// increasing with k >= 1.
LimitReport corollary2_limit_check(const LevyTriple& tr, double t, std::span<const int> ks);

}  // namespace freetransform
