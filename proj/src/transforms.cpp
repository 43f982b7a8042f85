#include "freetransform/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "freetransform/specfun.hpp"

namespace freetransform {
namespace {

constexpr double kPi = std::numbers::pi;
// Radius around |x| = 1 inside which transform_Linf uses the expansion.
constexpr double kLinfExpansionRadius = 1e-4;

void check_t(double t, const char* where) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError(std::string(where) + ": t must be > 0");
}

// exp(i theta) - 1 without cancellation for small theta.
Complex expm1_i(double theta) {
  const double s = std::sin(0.5 * theta);
  return {-2.0 * s * s, std::sin(theta)};
}

// Free-ID kernel (1 + i t x)/(i t - x) of a unit mass of m at x.
Complex id_kernel(double x, double t) {
  const Complex it(0.0, t);
  return (1.0 + it * x) / (it - x);
}

// Li_s(z) on the whole plane minus [1, inf).
Complex polylog_continued(int s, Complex z) {
  if (std::abs(z) <= 1.0) return polylog(s, z);
  return z * lerch_phi(z, s, 1.0);
}

// Derivatives of Gamma(1 + y) at y = 1.
struct GammaJet {
  double g1, g2, g3;
};

GammaJet gamma_jet_at_two() {
  const double psi = 1.0 - std::numbers::egamma;
  const double psi1 = kPi * kPi / 6.0 - 1.0;
  const double zeta3 = 1.2020569031595942854;
  const double psi2 = 2.0 - 2.0 * zeta3;
  return {psi, psi1 + psi * psi, psi2 + 3.0 * psi1 * psi + psi * psi * psi};
}

// Coefficients N_n of N(1 + e) = sum N_n e^n / n!, N(y) = Gamma(y+1) i e^{i pi sigma y/2} + sigma y.
struct NumeratorJet {
  Complex n1, n2, n3;
};

NumeratorJet numerator_jet(int sigma) {
  const GammaJet g = gamma_jet_at_two();
  const Complex e0 = -static_cast<double>(sigma);
  const Complex alpha(0.0, kPi * sigma / 2.0);
  const Complex n1 = g.g1 * e0 + e0 * alpha + static_cast<double>(sigma);
  const Complex n2 = g.g2 * e0 + 2.0 * g.g1 * e0 * alpha + e0 * alpha * alpha;
  const Complex n3 = g.g3 * e0 + 3.0 * g.g2 * e0 * alpha + 3.0 * g.g1 * e0 * alpha * alpha +
                     e0 * alpha * alpha * alpha;
  return {n1, n2, n3};
}

}  // namespace

LInfSpec::LInfSpec(double shift, FiniteMeasure g) : shift_(shift), g_(std::move(g)) {
  if (!std::isfinite(shift_)) throw InvalidInput("LInfSpec: non-finite shift");
  for (const Atom& a : g_.atoms()) {
    if (!(a.x > -2.0 && a.x <= 2.0) || a.x == 0.0) {
      throw InvalidInput("LInfSpec: atom location must lie in (-2, 0) u (0, 2]");
    }
    if (!(a.w > 0.0)) throw InvalidInput("LInfSpec: atom mass must be > 0");
  }
}

Complex logphi(const LevyTriple& tr, double t) {
  Complex total(-0.5 * tr.gauss_var() * t * t, t * tr.drift());
  for (const Atom& a : tr.levy_atoms()) {
    const double tx = t * a.x;
    total += a.w * (expm1_i(tx) - Complex(0.0, tx / (1.0 + a.x * a.x)));
  }
  return total;
}

TransformValue voiculescu_direct(double a, const FiniteMeasure& m, double t) {
  check_t(t, "voiculescu_direct");
  Complex total = a;
  for (const Atom& atom : m.atoms()) total += atom.w * id_kernel(atom.x, t);
  return {t, total};
}

TransformValue voiculescu_of(const LevyTriple& tr, double t) {
  return voiculescu_direct(tr.drift(), triple_to_finite_measure(tr), t);
}

TransformValue voiculescu_via_laplace(const LevyTriple& tr, double t, double tol) {
  return voiculescu_via_laplace([&tr](double v) { return logphi(tr, v); }, t, tol);
}

TransformValue voiculescu_via_laplace(const std::function<Complex(double)>& log_cf, double t,
                                      double tol) {
  check_t(t, "voiculescu_via_laplace");
  const double scale = t * t;
  const Complex inner = laplace_transform([&log_cf](double u) { return log_cf(-u); }, t,
                                          tol / scale);
  return {t, Complex(0.0, scale) * inner};
}

Complex integrated_logphi(const KernelFamily& fam, const LevyTriple& tr, double v, double tol) {
  const double sign = fam.sign();
  return integrate_time_change(
      fam, [&](double h) { return sign * logphi(tr, sign * h * v); }, tol);
}

TransformValue theorem1_transform(const KernelFamily& fam, const LevyTriple& tr, double t) {
  check_t(t, "theorem1_transform");
  const double sign = fam.sign();
  const double c = const_c(fam);
  const double d = const_d(fam);
  const Complex it(0.0, t);
  Complex total = tr.drift() * c + sign * tr.gauss_var() * d / it;
  for (const Atom& a : tr.levy_atoms()) {
    const Complex g = kernel_g(fam, Complex(0.0, a.x / t));
    total += a.w * sign * a.x * (g - sign * c / (1.0 + a.x * a.x));
  }
  return {t, total};
}

TransformValue theorem1_transform_measure(const KernelFamily& fam, double a,
                                          const FiniteMeasure& m, double t) {
  check_t(t, "theorem1_transform_measure");
  const double sign = fam.sign();
  const double c = const_c(fam);
  const Complex it(0.0, t);
  Complex total = a * c;
  for (const Atom& atom : m.atoms()) {
    const double x = atom.x;
    if (x == 0.0) {
      total += atom.w * sign * const_d(fam) / it;
      continue;
    }
    const Complex g = kernel_g(fam, Complex(0.0, x / t));
    total += atom.w * sign * (g - sign * c / (1.0 + x * x)) * (1.0 + x * x) / x;
  }
  return {t, total};
}

TransformValue kernel_transform_via_scaling(const KernelFamily& fam, const LevyTriple& tr, double t,
                                    double tol) {
  check_t(t, "kernel_transform_via_scaling");
  const double sign = fam.sign();
  const LevyTriple base = sign > 0.0 ? tr : reflect_triple(tr);
  const FiniteMeasure m = triple_to_finite_measure(base);
  const double a = base.drift();
  const Complex value = integrate_time_change(
      fam,
      [&](double h) {
        if (!(h > 0.0)) throw DomainError("kernel_transform_via_scaling: requires h > 0");
        return sign * h * voiculescu_direct(a, m, t / h).value;
      },
      tol);
  return {t, value};
}

TransformValue transform_Uk_s(int k, const LevyTriple& tr, double t) {
  check_t(t, "transform_Uk_s");
  if (k < 0) throw DomainError("transform_Uk_s: k must be >= 0");
  const Complex it(0.0, t);
  const double c = std::pow(2.0, -k);
  Complex total = tr.drift() * c + tr.gauss_var() * std::pow(3.0, -k) / it;
  for (const Atom& a : tr.levy_atoms()) {
    const Complex z = a.x / it;
    const Complex phi = k == 0 ? 1.0 / (1.0 - z) : lerch_phi(z, k, 2.0);
    total += a.w * a.x * (phi - c / (1.0 + a.x * a.x));
  }
  return {t, total};
}

TransformValue transform_Uk_s_measure(int k, double a, const FiniteMeasure& m, double t) {
  check_t(t, "transform_Uk_s_measure");
  if (k < 0) throw DomainError("transform_Uk_s_measure: k must be >= 0");
  const Complex it(0.0, t);
  const double c = std::pow(2.0, -k);
  Complex total = a * c;
  for (const Atom& atom : m.atoms()) {
    const double x = atom.x;
    if (x == 0.0) {
      total += atom.w / (std::pow(3.0, k) * it);
      continue;
    }
    const Complex z = x / it;
    const Complex phi = k == 0 ? 1.0 / (1.0 - z) : lerch_phi(z, k, 2.0);
    total += atom.w * (phi - c / (1.0 + x * x)) * (1.0 + x * x) / x;
  }
  return {t, total};
}

TransformValue transform_Ubk(int k, const LevyTriple& tr, double t) {
  check_t(t, "transform_Ubk");
  if (k < 1) throw DomainError("transform_Ubk: k must be >= 1");
  const double kk = k;
  const Complex it(0.0, t);
  Complex total = kk / (kk + 1.0) * tr.drift() + kk / (kk + 2.0) * tr.gauss_var() / it;
  for (const Atom& a : tr.levy_atoms()) {
    const Complex phi = lerch_phi(a.x / it, 1, kk);
    total += a.w * (kk * it * phi - it - kk / (kk + 1.0) * a.x / (1.0 + a.x * a.x));
  }
  return {t, total};
}

TransformValue transform_Ubk_measure(int k, double a, const FiniteMeasure& m, double t) {
  check_t(t, "transform_Ubk_measure");
  if (k < 1) throw DomainError("transform_Ubk_measure: k must be >= 1");
  const double kk = k;
  const Complex it(0.0, t);
  Complex total = kk / (kk + 1.0) * a;
  for (const Atom& atom : m.atoms()) {
    const double x = atom.x;
    if (x == 0.0) {
      total += atom.w * kk / (kk + 2.0) / it;
      continue;
    }
    const Complex phi = lerch_phi(x / it, 1, kk);
    const Complex integrand = kk * it * (phi - 1.0 / kk) - kk / (kk + 1.0) * x / (1.0 + x * x);
    total += atom.w * integrand * (1.0 + x * x) / (x * x);
  }
  return {t, total};
}

TransformValue transform_Lk(int k, const LevyTriple& tr, double t) {
  check_t(t, "transform_Lk");
  if (k < 0) throw DomainError("transform_Lk: k must be >= 0");
  const Complex it(0.0, t);
  Complex total = tr.drift() + tr.gauss_var() * std::pow(2.0, -(k + 1)) / it;
  for (const Atom& a : tr.levy_atoms()) {
    total += a.w * (it * polylog_continued(k + 1, a.x / it) - a.x / (1.0 + a.x * a.x));
  }
  return {t, total};
}

FiniteMeasure lk_finite_measure(const LevyTriple& tr, int k) {
  if (k < 0) throw DomainError("lk_finite_measure: k must be >= 0");
  std::vector<Atom> atoms;
  if (tr.gauss_var() > 0.0) atoms.push_back({0.0, tr.gauss_var()});
  const double p = 2.0 / (k + 1.0);
  for (const Atom& a : tr.levy_atoms()) {
    const double weight = std::pow(std::log1p(std::pow(std::abs(a.x), p)), k + 1);
    atoms.push_back({a.x, weight * a.w});
  }
  return FiniteMeasure(std::move(atoms));
}

TransformValue transform_Lk_measure(int k, double a, const FiniteMeasure& m, double t) {
  check_t(t, "transform_Lk_measure");
  if (k < 0) throw DomainError("transform_Lk_measure: k must be >= 0");
  const Complex it(0.0, t);
  const double p = 2.0 / (k + 1.0);
  Complex total = a;
  for (const Atom& atom : m.atoms()) {
    const double x = atom.x;
    if (x == 0.0) {
      total += atom.w * std::pow(2.0, -(k + 1)) / it;
      continue;
    }
    const double weight = std::pow(std::log1p(std::pow(std::abs(x), p)), k + 1);
    total += atom.w * (it * polylog_continued(k + 1, x / it) - x / (1.0 + x * x)) / weight;
  }
  return {t, total};
}

Complex linf_integrand_direct(double x, double t) {
  check_t(t, "linf_integrand_direct");
  const double y = std::abs(x);
  if (y == 1.0) throw DomainError("linf_integrand_direct: removable point |x| = 1");
  const Complex rot = kI * std::exp(Complex(0.0, kPi * x / 2.0));
  const Complex numerator = gamma_fn(y + 1.0) * rot + x;
  return numerator * std::pow(t, 1.0 - y) / (1.0 - y);
}

Complex linf_limit(int sign) {
  if (sign != 1 && sign != -1) throw InvalidInput("linf_limit: sign must be +1 or -1");
  return {-sign * euler_gamma(), kPi / 2.0};
}

Complex linf_integrand(double x, double t) {
  check_t(t, "linf_integrand");
  if (!(x > -2.0 && x <= 2.0) || x == 0.0) {
    throw DomainError("linf_integrand: x must lie in (-2, 0) u (0, 2]");
  }
  const double e = std::abs(x) - 1.0;
  if (std::abs(e) >= kLinfExpansionRadius) return linf_integrand_direct(x, t);
  const NumeratorJet n = numerator_jet(x > 0.0 ? 1 : -1);
  const double lt = std::log(t);
  return -(n.n1 + e * (n.n2 / 2.0 - n.n1 * lt) +
           e * e * (n.n3 / 6.0 - n.n2 * lt / 2.0 + n.n1 * lt * lt / 2.0));
}

TransformValue transform_Linf(const LInfSpec& spec, double t) {
  check_t(t, "transform_Linf");
  Complex total = spec.shift();
  for (const Atom& a : spec.measure().atoms()) total -= a.w * linf_integrand(a.x, t);
  return {t, total};
}

TransformValue cauchy_half_transform(double c, double t, double tol) {
  check_t(t, "cauchy_half_transform");
  const Complex it(0.0, t);
  // x = tan(theta), dx/(1+x^2) = dtheta
  auto f = [it](double theta) {
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    return (cs + it * sn) / (it * cs - sn);
  };
  const IntegrationResult r = integrate_finite(f, -kPi / 2.0, kPi / 2.0, tol);
  return {t, c + 0.5 * r.value};
}

TransformValue scale_transform(double c, const TransformEvaluator& v, double t) {
  if (!(c > 0.0)) throw DomainError("scale_transform: c must be > 0");
  check_t(t, "scale_transform");
  return {t, c * v(t / c)};
}

TransformEvaluator scaled(double c, TransformEvaluator v) {
  if (!(c > 0.0)) throw DomainError("scaled: c must be > 0");
  std::string label = "T_" + std::to_string(c) + "(" + v.label + ")";
  return {[c, inner = std::move(v)](double t) { return scale_transform(c, inner, t).value; },
          std::move(label)};
}

TransformValue add_transforms(const TransformEvaluator& v1, const TransformEvaluator& v2,
                              double t) {
  check_t(t, "add_transforms");
  return {t, v1(t) + v2(t)};
}

Theorem2Report theorem2_check(const LevyTriple& omega, std::span<const double> t_grid) {
  Theorem2Report report;
  report.log_moment = log_moment(omega, 1);
  const KernelFamily l0 = KernelFamily::lclass(0);
  // w * I(w) is the random integral over the kernel that puts a unit jump
  // with h = 1 in front of the L_0 kernel, so c, d and g add up.
  const double c = 1.0 + const_c(l0);
  const double d = 1.0 + const_d(l0);
  const TransformEvaluator v_integral{[&](double t) { return transform_Lk(0, omega, t).value; },
                                      "L_0"};
  const TransformEvaluator v_omega{[&](double t) { return voiculescu_of(omega, t).value; },
                                   "ID"};
  for (double t : t_grid) {
    check_t(t, "theorem2_check");
    Theorem2Row row;
    row.t = t;
    row.decomposed = add_transforms(v_integral, v_omega, t).value;
    const Complex it(0.0, t);
    Complex composite = omega.drift() * c + omega.gauss_var() * d / it;
    for (const Atom& a : omega.levy_atoms()) {
      const Complex z(0.0, a.x / t);
      const Complex g = 1.0 / (z + 1.0) + kernel_g(l0, z);
      composite += a.w * a.x * (g - c / (1.0 + a.x * a.x));
    }
    row.composite = composite;
    row.via_scaling = kernel_transform_via_scaling(l0, omega, t).value + v_omega(t);
    report.max_deviation = std::max(report.max_deviation, std::abs(row.decomposed - composite));
    report.max_quadrature_deviation =
        std::max(report.max_quadrature_deviation, std::abs(row.decomposed - row.via_scaling));
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace freetransform
