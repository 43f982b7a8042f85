#include "freetransform/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "freetransform/specfun.hpp"

namespace freetransform {
namespace {

// Below this |z| the UBeta and LClass closed forms switch to power series to
// avoid the cancellation in their 1/z prefactor.
constexpr double kRemovableRadius = 1e-3;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// h, dr/ds and the interval of a family's absolutely continuous part.
struct Density {
  std::function<double(double)> h;
  std::function<double(double)> rate;
  double lo;
  double hi;
};

Density builtin_density(const KernelFamily& fam) {
  const int k = fam.k();
  switch (fam.tag()) {
    case FamilyTag::SSelf: {
      const double norm = factorial(k - 1);
      return {[](double s) { return s; },
              [k, norm](double s) { return std::pow(-std::log(s), k - 1) / norm; }, 0.0, 1.0};
    }
    case FamilyTag::UBeta:
      return {[](double s) { return s; },
              [k](double s) { return k * std::pow(s, k - 1); }, 0.0, 1.0};
    case FamilyTag::LClass: {
      const double norm = factorial(k);
      return {[](double s) { return std::exp(-s); },
              [k, norm](double s) { return std::pow(s, k) / norm; }, 0.0,
              std::numeric_limits<double>::infinity()};
    }
    case FamilyTag::Custom:
      break;
  }
  throw InvalidInput("builtin_density: custom family");
}

// int F(h(s)) dr(s) over the family's time change.
Complex stieltjes(const KernelFamily& fam, const std::function<Complex(double)>& F, double tol) {
  Complex total = 0.0;
  Density dens;
  if (fam.tag() == FamilyTag::Custom) {
    const CustomKernel& ck = *fam.custom_kernel();
    for (const Jump& j : ck.jumps) total += F(ck.h(j.s)) * j.dr;
    if (!ck.r_density) return total;
    dens = {ck.h, ck.r_density, ck.lo, ck.hi};
  } else {
    dens = builtin_density(fam);
  }
  auto integrand = [&](double s) -> Complex {
    const double rate = dens.rate(s);
    return rate == 0.0 ? Complex(0.0) : F(dens.h(s)) * rate;
  };
  if (std::isinf(dens.hi)) {
    const double lo = dens.lo;
    total += integrate_semi_infinite([&](double u) { return integrand(lo + u); }, tol).value;
  } else {
    total += integrate_finite(integrand, dens.lo, dens.hi, tol).value;
  }
  return total;
}

void check_builtin_cut(const KernelFamily& fam, Complex z) {
  if (fam.tag() != FamilyTag::Custom && z.imag() == 0.0 && z.real() <= -1.0) {
    throw DomainError("kernel_g: z lies on the cut (-inf, -1] of " + fam.name());
  }
}

}  // namespace

KernelFamily KernelFamily::sself(int k) {
  if (k < 1) throw InvalidInput("SSELF family requires k >= 1");
  return {FamilyTag::SSelf, k, nullptr};
}

KernelFamily KernelFamily::ubeta(int k) {
  if (k < 1) throw InvalidInput("UBETA family requires k >= 1");
  return {FamilyTag::UBeta, k, nullptr};
}

KernelFamily KernelFamily::lclass(int k) {
  if (k < 0) throw InvalidInput("LCLASS family requires k >= 0");
  return {FamilyTag::LClass, k, nullptr};
}

KernelFamily KernelFamily::custom(CustomKernel kernel) {
  if (!kernel.h) throw InvalidInput("custom kernel: h is required");
  if (!kernel.r_density && kernel.jumps.empty()) {
    throw InvalidInput("custom kernel: r needs a density or jumps");
  }
  const double sign = kernel.monotone == Monotone::Up ? 1.0 : -1.0;
  for (const Jump& j : kernel.jumps) {
    if (!std::isfinite(j.dr) || sign * j.dr < 0.0) {
      throw InvalidInput("custom kernel: jump sign contradicts declared monotonicity");
    }
  }
  if (kernel.r_density) {
    if (!(kernel.lo < kernel.hi)) throw InvalidInput("custom kernel: need lo < hi");
    const double span = std::isinf(kernel.hi) ? 8.0 : kernel.hi - kernel.lo;
    for (int i = 1; i <= 7; ++i) {
      const double s = kernel.lo + span * i / 8.0;
      if (sign * kernel.r_density(s) < 0.0) {
        throw InvalidInput("custom kernel: density sign contradicts declared monotonicity");
      }
    }
  }
  return {FamilyTag::Custom, 0, std::make_shared<const CustomKernel>(std::move(kernel))};
}

Monotone KernelFamily::monotone() const {
  return tag_ == FamilyTag::Custom ? custom_->monotone : Monotone::Up;
}

std::string KernelFamily::name() const {
  switch (tag_) {
    case FamilyTag::SSelf:
      return "SSELF(" + std::to_string(k_) + ")";
    case FamilyTag::UBeta:
      return "UBETA(" + std::to_string(k_) + ")";
    case FamilyTag::LClass:
      return "LCLASS(" + std::to_string(k_) + ")";
    case FamilyTag::Custom:
      return "CUSTOM(" + custom_->label + ")";
  }
  return "?";
}

double const_c(const KernelFamily& fam) {
  const double k = fam.k();
  switch (fam.tag()) {
    case FamilyTag::SSelf:
      return std::pow(2.0, -k);
    case FamilyTag::UBeta:
      return k / (k + 1.0);
    case FamilyTag::LClass:
      return 1.0;
    case FamilyTag::Custom:
      break;
  }
  return const_c_quadrature(fam);
}

double const_d(const KernelFamily& fam) {
  const double k = fam.k();
  switch (fam.tag()) {
    case FamilyTag::SSelf:
      return std::pow(3.0, -k);
    case FamilyTag::UBeta:
      return k / (k + 2.0);
    case FamilyTag::LClass:
      return std::pow(2.0, -k - 1.0);
    case FamilyTag::Custom:
      break;
  }
  return const_d_quadrature(fam);
}

double const_c_quadrature(const KernelFamily& fam, double tol) {
  try {
    return stieltjes(fam, [](double h) { return Complex(h); }, tol).real();
  } catch (const MaxSubdivisionError& e) {
    throw ConvergenceError(std::string("const_c: ") + e.what());
  }
}

double const_d_quadrature(const KernelFamily& fam, double tol) {
  try {
    return stieltjes(fam, [](double h) { return Complex(h * h); }, tol).real();
  } catch (const MaxSubdivisionError& e) {
    throw ConvergenceError(std::string("const_d: ") + e.what());
  }
}

Complex kernel_g(const KernelFamily& fam, Complex z) {
  if (!is_finite(z)) throw DomainError("kernel_g: non-finite argument");
  check_builtin_cut(fam, z);
  const int k = fam.k();
  const double kk = k;
  switch (fam.tag()) {
    case FamilyTag::SSelf:
      return lerch_phi(-z, k, 2.0);
    case FamilyTag::UBeta:
      if (std::abs(z) < kRemovableRadius) return kk * lerch_phi_series(-z, 1, kk + 1.0);
      return kk / (-z) * (lerch_phi(-z, 1, kk) - 1.0 / kk);
    case FamilyTag::LClass:
      if (std::abs(z) < kRemovableRadius) return lerch_phi_series(-z, k + 1, 1.0);
      // Li_s(w) = w Phi(w, s, 1) continues the polylog past the unit disc
      if (std::abs(z) <= 1.0) return -polylog(k + 1, -z) / z;
      return lerch_phi(-z, k + 1, 1.0);
    case FamilyTag::Custom:
      break;
  }
  return kernel_g_quadrature(fam, z);
}

Complex kernel_g_quadrature(const KernelFamily& fam, Complex z, double tol, KernelRoute route) {
  check_builtin_cut(fam, z);
  if (route == KernelRoute::LogSubstitution) {
    if (fam.tag() != FamilyTag::SSelf) {
      throw InvalidInput("kernel_g_quadrature: log substitution route is SSELF only");
    }
    const int k = fam.k();
    const double norm = factorial(k - 1);
    auto f = [z, k, norm](double w) -> Complex {
      const double ew = std::exp(-w);
      const double weight = std::pow(w, k - 1) * ew * ew / norm;
      return weight == 0.0 ? Complex(0.0) : weight / (1.0 + z * ew);
    };
    return integrate_semi_infinite(f, tol, HalfLineMap::Rational).value;
  }
  const double sign = fam.sign();
  return stieltjes(fam, [z, sign](double h) { return h / (z * h + sign); }, tol);
}

Complex kernel_g_derivative_quadrature(const KernelFamily& fam, Complex z, int n, double tol) {
  if (n < 0) throw InvalidInput("kernel_g_derivative_quadrature: n must be >= 0");
  if (fam.monotone() != Monotone::Up) {
    throw InvalidInput("kernel_g_derivative_quadrature: non-decreasing r only");
  }
  check_builtin_cut(fam, z);
  const double scale = (n % 2 == 0 ? 1.0 : -1.0) * factorial(n);
  return stieltjes(
      fam, [z, n, scale](double h) { return scale * std::pow(h / (1.0 + z * h), n + 1); }, tol);
}

Complex integrate_time_change(const KernelFamily& fam, const std::function<Complex(double)>& F,
                              double tol) {
  return stieltjes(fam, F, tol);
}

PickRepresentation pick_representation(std::span<const double> h_values,
                                       std::span<const double> r_jumps) {
  if (h_values.size() != r_jumps.size()) {
    throw InvalidInput("pick_representation: h_values and r_jumps differ in length");
  }
  double shift = 0.0;
  std::map<double, double> atoms;
  for (std::size_t i = 0; i < h_values.size(); ++i) {
    const double h = h_values[i];
    const double jump = r_jumps[i];
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidInput("pick_representation: h must be > 0");
    if (!(jump > 0.0) || !std::isfinite(jump)) {
      throw InvalidInput("pick_representation: jumps must be > 0");
    }
    const double q = h * h;
    shift += jump * h / (1.0 + q);
    atoms[-1.0 / h] += jump * q / (1.0 + q);
  }
  std::vector<Atom> list;
  list.reserve(atoms.size());
  for (const auto& [x, w] : atoms) list.push_back({x, w});
  return {shift, FiniteMeasure(std::move(list))};
}

Complex pick_evaluate(const PickRepresentation& rep, Complex z) {
  Complex total = rep.shift;
  for (const Atom& a : rep.measure.atoms()) total += a.w * (1.0 + z * a.x) / (z - a.x);
  return total;
}

Complex step_kernel_g(std::span<const double> h_values, std::span<const double> r_jumps,
                      Complex z) {
  if (h_values.size() != r_jumps.size()) {
    throw InvalidInput("step_kernel_g: h_values and r_jumps differ in length");
  }
  Complex total = 0.0;
  for (std::size_t i = 0; i < h_values.size(); ++i) {
    total += r_jumps[i] * h_values[i] / (z * h_values[i] + 1.0);
  }
  return total;
}

}  // namespace freetransform
