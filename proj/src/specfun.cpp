#include "freetransform/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "freetransform/quadrature.hpp"

namespace freetransform {
namespace {

constexpr double kTermTol = 1e-15;
// Above this |arg z| the pole of the integrand is far enough from the real
// axis for plain adaptive quadrature.
constexpr double kNearCutArg = 0.5;

bool on_lerch_cut(Complex z) { return z.imag() == 0.0 && z.real() >= 1.0; }

void check_order(int s, double v, const char* where) {
  if (s < 1) throw DomainError(std::string(where) + ": order s must be >= 1");
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(where) + ": v must be > 0");
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// sum_{n >= first} z^n / (v + n)^s, truncated on the relative term test.
Complex power_series(Complex z, int s, double v, int first) {
  Complex acc = 0.0;
  Complex zn = std::pow(z, first);
  for (long n = first; n < kMaxSeriesTerms; ++n) {
    const Complex term = zn / std::pow(v + static_cast<double>(n), s);
    acc += term;
    if (std::abs(term) < kTermTol * (1.0 + std::abs(acc))) return acc;
    zn *= z;
    if (zn == 0.0) return acc;
  }
  throw ConvergenceError("power series did not converge within the term budget");
}

// exp(w) - 1 without cancellation for small |w|.
Complex expm1_complex(Complex w) {
  if (std::abs(w) < 1e-5) return w * (1.0 + w * (0.5 + w / 6.0));
  return std::exp(w) - 1.0;
}

// For |z| > 1 close to the cut, 1/(1 - z e^{-u}) has a simple pole at
// u* = log z just off the real axis. Its singular part G(u*)/(u - u*) is
// integrated in closed form over [a, b] around Re u*, and the smooth rest
// by quadrature.
Complex lerch_integral_near_cut(Complex z, int s, double v, double rel_tol) {
  const Complex pole = std::log(z);
  const double center = pole.real();
  const double a = std::max(0.0, center - 1.0);
  const double b = center + 1.0;
  auto weight = [=](Complex u) { return std::pow(u, s - 1) * std::exp(-v * u); };
  auto full = [=](double u) -> Complex {
    return weight(u) / (-expm1_complex(pole - u));
  };
  const Complex residue = weight(pole);
  auto regular = [=](double u) -> Complex {
    const Complex d = u - pole;
    return weight(u) / (-expm1_complex(-d)) - residue / d;
  };
  Complex total = residue * (std::log(b - pole) - std::log(a - pole));
  // The regular part can be much smaller than the closed-form piece; its
  // accuracy is judged against the latter, not against itself.
  QuadratureOptions opts;
  opts.abs_tol = std::max(1e-300, 0.1 * rel_tol * std::abs(total));
  opts.rel_tol = rel_tol;
  try {
    if (a > 0.0) total += integrate_finite(full, 0.0, a, opts).value;
    total += integrate_finite(regular, a, b, opts).value;
    total += integrate_semi_infinite([=](double u) { return full(b + u); }, opts).value;
  } catch (const MaxSubdivisionError& e) {
    throw ConvergenceError(std::string("lerch_phi: integral branch failed: ") + e.what());
  }
  return total / factorial(s - 1);
}

// Integral representation without the cut check, so z = 1 (s >= 2) can be
// used for Li_s(1).
Complex lerch_integral_unchecked(Complex z, int s, double v, double rel_tol) {
  if (std::abs(z) > 1.0 && std::abs(std::arg(z)) < kNearCutArg) {
    return lerch_integral_near_cut(z, s, v, rel_tol);
  }
  const double scale = 1.0 / v;
  const bool unit = (z == Complex(1.0, 0.0));
  auto integrand = [=](double w) -> Complex {
    const double one_minus = 1.0 - w;
    const double u = scale * w / one_minus;
    const double jac = scale / (one_minus * one_minus);
    const double weight = std::pow(u, s - 1) * std::exp(-v * u) * jac;
    if (weight == 0.0) return 0.0;
    const Complex denom = unit ? Complex(-std::expm1(-u), 0.0) : 1.0 - z * std::exp(-u);
    return weight / denom;
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-300;
  opts.rel_tol = rel_tol;
  try {
    const IntegrationResult r = integrate_finite(integrand, 0.0, 1.0, opts);
    return r.value / factorial(s - 1);
  } catch (const MaxSubdivisionError& e) {
    throw ConvergenceError(std::string("lerch_phi: integral branch failed: ") + e.what());
  }
}

}  // namespace

Complex lerch_phi_series(Complex z, int s, double v) {
  check_order(s, v, "lerch_phi_series");
  if (!(std::abs(z) < 1.0)) throw DomainError("lerch_phi_series: requires |z| < 1");
  return power_series(z, s, v, 0);
}

Complex lerch_phi_integral(Complex z, int s, double v, double rel_tol) {
  check_order(s, v, "lerch_phi_integral");
  if (on_lerch_cut(z)) throw DomainError("lerch_phi: z lies on the cut [1, inf)");
  return lerch_integral_unchecked(z, s, v, rel_tol);
}

Complex lerch_phi(Complex z, int s, double v) {
  check_order(s, v, "lerch_phi");
  if (!is_finite(z)) throw DomainError("lerch_phi: non-finite argument");
  if (on_lerch_cut(z)) throw DomainError("lerch_phi: z lies on the cut [1, inf)");
  if (std::abs(z) <= kSeriesRadius) return power_series(z, s, v, 0);
  return require_finite(lerch_integral_unchecked(z, s, v, kLerchRelTol), "lerch_phi");
}

Complex polylog(int s, Complex z) {
  if (s < 1) throw DomainError("polylog: order s must be >= 1");
  if (!is_finite(z)) throw DomainError("polylog: non-finite argument");
  const double r = std::abs(z);
  if (r > 1.0) throw DomainError("polylog: |z| > 1 is outside the supported disc");
  if (s == 1 && z == Complex(1.0, 0.0)) throw DomainError("polylog: Li_1 diverges at z = 1");
  if (z == 0.0) return 0.0;
  if (r <= kSeriesRadius) return power_series(z, s, 0.0, 1);
  return z * lerch_integral_unchecked(z, s, 1.0, kLerchRelTol);
}

Complex hyp2f1_special(int k, Complex z) {
  if (k < 1) throw DomainError("hyp2f1_special: k must be >= 1");
  if (!is_finite(z)) throw DomainError("hyp2f1_special: non-finite argument");
  if (z.imag() == 0.0 && z.real() <= -1.0) {
    throw DomainError("hyp2f1_special: z lies on the cut (-inf, -1]");
  }
  const double kk = static_cast<double>(k);
  if (std::abs(z) <= kSeriesRadius) {
    return (kk + 1.0) * power_series(-z, 1, kk + 1.0, 0);
  }
  return (kk + 1.0) / (-z) * (lerch_phi(-z, 1, kk) - 1.0 / kk);
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma_fn: requires finite x > 0");
  return std::tgamma(x);
}

double euler_gamma() { return std::numbers::egamma; }

}  // namespace freetransform
