#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "freetransform/measures.hpp"
#include "freetransform/quadrature.hpp"
#include "freetransform/types.hpp"

namespace freetransform {

enum class FamilyTag {
  /// h(s) = s, r = tau_k on (0, 1], k >= 1 (k-times s-selfdecomposable).
  SSelf,
  /// h(s) = s, r(s) = s^k on (0, 1], k >= 1.
  UBeta,
  /// h(s) = exp(-s), r(s) = s^{k+1}/(k+1)! on (0, inf), k >= 0 (Urbanik L_k).
  LClass,
  Custom,
};

enum class Monotone { Up, Down };

/// Jump of size `dr` of the time change at the point `s`.
struct Jump {
  double s = 0.0;
  double dr = 0.0;
};

/// User supplied random-integral kernel. The Stieltjes measure dr is the sum
/// of an absolutely continuous part with density `r_density` on (lo, hi)
/// (hi may be +inf) and the point masses in `jumps`. For Monotone::Down the
/// density and jump sizes are non-positive.
struct CustomKernel {
  std::function<double(double)> h;
  std::function<double(double)> r_density;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<Jump> jumps;
  Monotone monotone = Monotone::Up;
  std::string label = "custom";
};

/// Selector of a random-integral kernel (h, r, interval, monotonicity).
class KernelFamily {
 public:
  static KernelFamily sself(int k);
  static KernelFamily ubeta(int k);
  static KernelFamily lclass(int k);
  /// Throws InvalidInput when the declared monotonicity contradicts the
  /// jump signs or a sampled density value.
  static KernelFamily custom(CustomKernel kernel);

  FamilyTag tag() const { return tag_; }
  int k() const { return k_; }
  Monotone monotone() const;
  /// +1 for non-decreasing r, -1 for non-increasing r.
  double sign() const { return monotone() == Monotone::Up ? 1.0 : -1.0; }
  const CustomKernel* custom_kernel() const { return custom_.get(); }
  std::string name() const;

 private:
  KernelFamily(FamilyTag tag, int k, std::shared_ptr<const CustomKernel> custom)
      : tag_(tag), k_(k), custom_(std::move(custom)) {}

  FamilyTag tag_;
  int k_;
  std::shared_ptr<const CustomKernel> custom_;
};

/// c = int h dr. Closed forms: SSelf 2^-k, UBeta k/(k+1), LClass 1.
double const_c(const KernelFamily& fam);
/// d = int h^2 dr. Closed forms: SSelf 3^-k, UBeta k/(k+2), LClass 2^-(k+1).
double const_d(const KernelFamily& fam);

/// Quadrature of the definitions of c and d, for any family.
double const_c_quadrature(const KernelFamily& fam, double tol = kOracleTol);
double const_d_quadrature(const KernelFamily& fam, double tol = kOracleTol);

/// g(z) = int h / (z h + sign) dr. Built-in families use the closed forms
///   SSelf:  Phi(-z, k, 2)
///   UBeta:  k (-z)^{-1} [Phi(-z, 1, k) - 1/k]   (c at z = 0)
///   LClass: -z^{-1} Li_{k+1}(-z)                (1 at z = 0)
/// Custom kernels go through quadrature. Throws DomainError for built-ins
/// when z is real and z <= -1.
Complex kernel_g(const KernelFamily& fam, Complex z);

/// Which integral the quadrature oracle evaluates.
enum class KernelRoute {
  /// The defining Stieltjes integral over the family's interval.
  Definition,
  /// SSelf only: s = exp(-w), giving int_0^inf w^{k-1} e^{-2w} / ((k-1)! (1 + z e^{-w})) dw.
  LogSubstitution,
};

/// Quadrature evaluation of g, independent of the special-function path.
Complex kernel_g_quadrature(const KernelFamily& fam, Complex z, double tol = kOracleTol,
                            KernelRoute route = KernelRoute::Definition);

/// n-th derivative of g (non-decreasing r) from
///   d^n/dz^n g(z) = (-1)^n n! int (h / (1 + z h))^{n+1} dr.
Complex kernel_g_derivative_quadrature(const KernelFamily& fam, Complex z, int n,
                                       double tol = kOracleTol);

/// int F(h(s)) dr(s) over the time change of `fam` (density part by
/// adaptive quadrature, plus the jumps of custom kernels).
Complex integrate_time_change(const KernelFamily& fam, const std::function<Complex(double)>& F,
                              double tol = kOracleTol);

/// Shift u and measure m of the Pick-Nevanlinna representation
///   g(z) = u + int (1 + z x) / (z - x) m(dx).
struct PickRepresentation {
  double shift = 0.0;
  FiniteMeasure measure;
};

/// Representation of g(z) = sum_j jump_j h_j / (z h_j + 1) for a step time
/// change: u = sum jump h/(1+h^2) and atoms at -1/h with mass
/// jump h^2/(1+h^2). Equal locations are merged. Throws InvalidInput on
/// non-positive entries or length mismatch.
PickRepresentation pick_representation(std::span<const double> h_values,
                                       std::span<const double> r_jumps);

/// u + sum_j m_j (1 + z x_j) / (z - x_j).
Complex pick_evaluate(const PickRepresentation& rep, Complex z);

/// sum_j jump_j h_j / (z h_j + 1).
Complex step_kernel_g(std::span<const double> h_values, std::span<const double> r_jumps,
                      Complex z);

}  // namespace freetransform
