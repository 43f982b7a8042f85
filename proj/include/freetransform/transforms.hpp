#pragma once

#include <functional>
#include <span>
#include <vector>

#include "freetransform/evaluator.hpp"
#include "freetransform/kernels.hpp"
#include "freetransform/measures.hpp"
#include "freetransform/quadrature.hpp"
#include "freetransform/types.hpp"

namespace freetransform {

/// V(it) at a point t > 0.
struct TransformValue {
  double t = 0.0;
  Complex value;
};

/// Parameters (c, G) of an L_infinity transform. G lives on (-2, 0) u (0, 2]
/// with strictly positive masses; the constructor throws InvalidInput
/// otherwise.
class LInfSpec {
 public:
  LInfSpec(double shift, FiniteMeasure g);

  double shift() const { return shift_; }
  const FiniteMeasure& measure() const { return g_; }

 private:
  double shift_;
  FiniteMeasure g_;
};

/// log of the characteristic function of the triple at real t.
Complex logphi(const LevyTriple& tr, double t);

/// a + sum_j m_j (1 + i t x_j) / (i t - x_j); the atom at 0 contributes m/(it).
TransformValue voiculescu_direct(double a, const FiniteMeasure& m, double t);

/// voiculescu_direct on (drift, triple_to_finite_measure(tr)).
TransformValue voiculescu_of(const LevyTriple& tr, double t);

/// Classical-to-free identification
///   V(it) = i t^2 int_0^inf log phi(-u) e^{-t u} du
/// with log phi given either as a triple or as an arbitrary function.
TransformValue voiculescu_via_laplace(const LevyTriple& tr, double t, double tol = kLaplaceTol);
TransformValue voiculescu_via_laplace(const std::function<Complex(double)>& log_cf, double t,
                                      double tol = kLaplaceTol);

/// log phi_rho(v) of the random integral rho = I(h, r)(mu), by quadrature of
///   int log phi_mu(sign h(s) v) sign dr(s).
Complex integrated_logphi(const KernelFamily& fam, const LevyTriple& tr, double v,
                          double tol = kOracleTol);

/// Free counterpart of the random integral of `tr` under `fam`:
///   a c + sign sigma^2 d / (it) + sum_j w_j sign x_j [g(i x_j / t) - sign c / (1 + x_j^2)].
TransformValue theorem1_transform(const KernelFamily& fam, const LevyTriple& tr, double t);

/// Same transform written against the finite measure m of the triple; the
/// integrand at x = 0 is sign d / (it).
TransformValue theorem1_transform_measure(const KernelFamily& fam, double a,
                                          const FiniteMeasure& m, double t);

/// Same transform by quadrature of the scaling representation
///   int h(s) V_mu(it / h(s)) dr(s)          (reflected mu for decreasing r).
TransformValue kernel_transform_via_scaling(const KernelFamily& fam, const LevyTriple& tr, double t,
                                    double tol = kOracleTol);

/// k-times s-selfdecomposable class:
///   a/2^k + sigma^2/(3^k it) + sum w x [Phi(x/(it), k, 2) - 1/((1+x^2) 2^k)].
/// k = 0 gives the whole free-ID class (Phi(z, 0, 2) = 1/(1-z)).
TransformValue transform_Uk_s(int k, const LevyTriple& tr, double t);
TransformValue transform_Uk_s_measure(int k, double a, const FiniteMeasure& m, double t);

/// Beta-type class:
///   k a/(k+1) + k sigma^2/((k+2) it) + sum w [k it Phi(x/(it), 1, k) - it - k x/((k+1)(1+x^2))].
TransformValue transform_Ubk(int k, const LevyTriple& tr, double t);
TransformValue transform_Ubk_measure(int k, double a, const FiniteMeasure& m, double t);

/// Urbanik class L_k:
///   a + sigma^2/(2^{k+1} it) + sum w [it Li_{k+1}(x/(it)) - x/(1+x^2)].
/// For |x| > t the polylog is continued through Li_s(z) = z Phi(z, s, 1).
TransformValue transform_Lk(int k, const LevyTriple& tr, double t);

/// Finite measure m = log^{k+1}(1 + |x|^{2/(k+1)}) M plus m({0}) = sigma^2.
FiniteMeasure lk_finite_measure(const LevyTriple& tr, int k);

/// L_k transform against the measure produced by lk_finite_measure; the
/// integrand at x = 0 is 1/(2^{k+1} it).
TransformValue transform_Lk_measure(int k, double a, const FiniteMeasure& m, double t);

/// (Gamma(|x|+1) i e^{i pi x/2} + x) t^{1-|x|} / (1 - |x|), with its
/// removable values i pi/2 -+ gamma at x = +-1. Within 1e-4 of +-1 a
/// second-order expansion around the limit is used.
Complex linf_integrand(double x, double t);

/// Unguarded formula; DomainError at |x| = 1.
Complex linf_integrand_direct(double x, double t);

/// Limit of the integrand at x = +1 or x = -1.
Complex linf_limit(int sign);

/// c - sum_j G_j linf_integrand(x_j, t).
TransformValue transform_Linf(const LInfSpec& spec, double t);

/// c + (1/2) int_R (1 + i t x)/(i t - x) dx/(1 + x^2), integrated over
/// x = tan(theta); the only non-atomic measure handled by the library.
TransformValue cauchy_half_transform(double c, double t, double tol = kOracleTol);

/// c V(t / c).
TransformValue scale_transform(double c, const TransformEvaluator& v, double t);
TransformEvaluator scaled(double c, TransformEvaluator v);

/// V1(t) + V2(t).
TransformValue add_transforms(const TransformEvaluator& v1, const TransformEvaluator& v2,
                              double t);

struct Theorem2Row {
  double t = 0.0;
  Complex decomposed;   // transform_Lk(0, w) + V_w
  Complex composite;    // change-of-kernel formula with the concatenated kernel
  Complex via_scaling;  // quadrature of the scaling representation + V_w
};

struct Theorem2Report {
  std::vector<Theorem2Row> rows;
  double log_moment = 0.0;
  /// max |decomposed - composite|; both are finite sums.
  double max_deviation = 0.0;
  /// max |decomposed - via_scaling|; limited by quadrature.
  double max_quadrature_deviation = 0.0;
};

/// Checks V of w * I(w) = V of I(w) + V of w on the grid, where I is the
/// L_0 random integral (h = e^{-s}, r(s) = s on (0, inf)).
Theorem2Report theorem2_check(const LevyTriple& omega, std::span<const double> t_grid);

}  // namespace freetransform
