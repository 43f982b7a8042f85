#pragma once

#include <complex>
#include <random>
#include <vector>

#include "freetransform/measures.hpp"

namespace ft_test {

using Complex = std::complex<double>;

inline double dist(Complex a, Complex b) { return std::abs(a - b); }

// Fixed-seed generator of small Levy triples: up to `max_atoms` atoms,
// locations kept away from 0 and from each other.
class TripleGen {
 public:
  explicit TripleGen(unsigned long long seed) : rng_(seed) {}

  freetransform::LevyTriple next(int max_atoms = 3) {
    std::uniform_real_distribution<double> drift(-2.0, 2.0);
    std::uniform_real_distribution<double> var(0.0, 2.0);
    std::uniform_real_distribution<double> mag(0.2, 3.0);
    std::uniform_real_distribution<double> mass(0.05, 1.5);
    std::uniform_int_distribution<int> count(0, max_atoms);
    std::bernoulli_distribution neg(0.4);
    std::vector<freetransform::Atom> atoms;
    const int n = count(rng_);
    for (int i = 0; i < n; ++i) {
      const double x = (neg(rng_) ? -1.0 : 1.0) * mag(rng_);
      bool clash = false;
      for (const auto& a : atoms) clash = clash || std::abs(a.x - x) < 1e-3;
      if (!clash) atoms.push_back({x, mass(rng_)});
    }
    return {drift(rng_), var(rng_), atoms};
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Complex upper(double re_span, double im_lo, double im_hi) {
    return {uniform(-re_span, re_span), uniform(im_lo, im_hi)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ft_test
