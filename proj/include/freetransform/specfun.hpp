#pragma once

#include "freetransform/types.hpp"

namespace freetransform {

/// |z| at and below which the power series are summed directly; above it the
/// integral representation (or an identity reducing to it) takes over.
inline constexpr double kSeriesRadius = 0.5;
/// Relative accuracy requested from the quadrature branch of lerch_phi.
inline constexpr double kLerchRelTol = 1e-13;
/// Series terms beyond this count raise ConvergenceError.
inline constexpr long kMaxSeriesTerms = 1000000;

/// Hurwitz-Lerch transcendent Phi(z, s, v) = sum_{n>=0} z^n / (v+n)^s for
/// integer s >= 1 and real v > 0, continued off the cut [1, inf) through
///
///   Phi(z, s, v) = 1/Gamma(s) int_0^inf u^{s-1} e^{-v u} / (1 - z e^{-u}) du.
///
/// The series is used for |z| <= 1/2, the integral otherwise. Throws
/// DomainError for z in [1, inf), s < 1 or v <= 0.
Complex lerch_phi(Complex z, int s, double v);

/// Direct series branch; requires |z| < 1.
Complex lerch_phi_series(Complex z, int s, double v);
/// Quadrature branch; `rel_tol` is passed to the adaptive integrator.
Complex lerch_phi_integral(Complex z, int s, double v, double rel_tol = kLerchRelTol);

/// Polylogarithm Li_s(z) = sum_{n>=1} z^n / n^s on the closed unit disc
/// (z = 1 excluded when s = 1). Uses Li_s(z) = z Phi(z, s, 1) for |z| > 1/2.
/// Throws DomainError for |z| > 1 or (s, z) = (1, 1).
Complex polylog(int s, Complex z);

/// 2F1(1, k+1; k+2; -z) for k >= 1 and z off (-inf, -1], from
///   (k+1) sum_{n>=0} (-z)^n / (k+n+1)            for |z| <= 1/2,
///   (k+1) (-z)^{-1} [Phi(-z, 1, k) - 1/k]         otherwise.
Complex hyp2f1_special(int k, Complex z);

/// Gamma function for x > 0; DomainError otherwise.
double gamma_fn(double x);

/// Euler-Mascheroni constant.
double euler_gamma();

}  // namespace freetransform
