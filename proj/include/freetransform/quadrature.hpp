#pragma once

#include <functional>

#include "freetransform/types.hpp"

namespace freetransform {

/// Integrand of a real variable with complex values.
using Integrand = std::function<Complex(double)>;

struct IntegrationResult {
  Complex value;
  double error_estimate = 0.0;
  int evaluations = 0;
  int panels = 0;
};

/// Tolerance used by the quadrature oracles that check closed forms.
inline constexpr double kOracleTol = 1e-10;
/// Tolerance used when evaluating the classical-to-free Laplace map.
inline constexpr double kLaplaceTol = 1e-8;
/// Panel budget of the adaptive driver.
inline constexpr int kMaxPanels = 10000;

/// Convergence is declared once the summed panel error is at most
/// max(abs_tol, rel_tol * |value|).
struct QuadratureOptions {
  double abs_tol = kOracleTol;
  double rel_tol = 0.0;
  int max_panels = kMaxPanels;
};

/// Mapping of (0, inf) onto (0, 1) used by integrate_semi_infinite.
enum class HalfLineMap {
  /// u = -log v; natural for exponentially decaying integrands.
  Log,
  /// u = v / (1 - v); required for algebraic tails such as 1/u^2.
  Rational,
};

/// Adaptive Gauss-Kronrod (10/21 point) integration over (lo, hi). The rule
/// is open, so endpoint singularities are never evaluated. Panels are
/// bisected worst-first; the final value is a pairwise sum over panels
/// ordered by position, so repeated calls are bit-identical.
///
/// Throws MaxSubdivisionError when the panel budget runs out,
/// NonFiniteError when f returns NaN/Inf and InvalidInput on bad bounds or
/// tolerances.
IntegrationResult integrate_finite(const Integrand& f, double lo, double hi, double tol);
IntegrationResult integrate_finite(const Integrand& f, double lo, double hi,
                                   const QuadratureOptions& opts);

/// Integral of f over (0, inf) through the substitution selected by `map`.
IntegrationResult integrate_semi_infinite(const Integrand& f, double tol,
                                          HalfLineMap map = HalfLineMap::Log);
IntegrationResult integrate_semi_infinite(const Integrand& f, const QuadratureOptions& opts,
                                          HalfLineMap map = HalfLineMap::Log);

/// int_0^inf g(u) exp(-t u) du for t > 0, computed with v = exp(-t u) so the
/// exponential weight is absorbed by the substitution.
Complex laplace_transform(const std::function<Complex(double)>& g, double t, double tol);
IntegrationResult laplace_transform_result(const std::function<Complex(double)>& g, double t,
                                           double tol);

}  // namespace freetransform
