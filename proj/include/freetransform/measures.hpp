#pragma once

#include <span>
#include <vector>

namespace freetransform {

/// Point mass `w` at location `x`.
struct Atom {
  double x = 0.0;
  double w = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite atomic Borel measure on the real line. An atom at 0 is allowed.
/// Masses are non-negative and locations pairwise distinct; the
/// constructor throws InvalidInput otherwise.
class FiniteMeasure {
 public:
  FiniteMeasure() = default;
  explicit FiniteMeasure(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  double total_mass() const;
  /// Mass carried by the atom at exactly `x`, or 0.
  double mass_at(double x) const;

  friend bool operator==(const FiniteMeasure&, const FiniteMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// Classical infinitely divisible law [a, sigma^2, M] with a finite atomic
/// Levy measure M. The characteristic exponent is
///
///   i t a - sigma^2 t^2 / 2 + sum_j w_j (exp(i t x_j) - 1 - i t x_j / (1 + x_j^2)).
class LevyTriple {
 public:
  LevyTriple() = default;
  /// Throws InvalidInput on negative variance, non-positive masses, an atom
  /// at 0, duplicate locations or non-finite fields.
  LevyTriple(double drift, double gauss_var, std::vector<Atom> levy_atoms = {});

  static LevyTriple gaussian(double drift, double gauss_var) { return {drift, gauss_var}; }

  double drift() const { return drift_; }
  double gauss_var() const { return gauss_var_; }
  std::span<const Atom> levy_atoms() const { return atoms_; }

  friend bool operator==(const LevyTriple&, const LevyTriple&) = default;

 private:
  double drift_ = 0.0;
  double gauss_var_ = 0.0;
  std::vector<Atom> atoms_;
};

/// m({x}) = x^2/(1+x^2) M({x}) for x != 0 and m({0}) = sigma^2. The Gaussian
/// atom, when present, comes first.
FiniteMeasure triple_to_finite_measure(const LevyTriple& tr);

/// Inverse of triple_to_finite_measure. Zero-mass atoms off the origin are
/// dropped since a Levy measure carries strictly positive masses.
LevyTriple finite_measure_to_triple(double drift, const FiniteMeasure& m);

/// sum over atoms with |x| > 1 of w * log^p(1 + |x|). Throws InvalidInput
/// for p < 1.
double log_moment(const LevyTriple& tr, int p);

/// Levy triple of c X when X has triple `tr`. Throws InvalidInput for c <= 0.
LevyTriple scale_triple(double c, const LevyTriple& tr);

/// Triple of the law of -X.
LevyTriple reflect_triple(const LevyTriple& tr);

/// Triple of the classical convolution of two laws. Atoms at a shared
/// location are merged.
LevyTriple convolve_triples(const LevyTriple& lhs, const LevyTriple& rhs);

}  // namespace freetransform
