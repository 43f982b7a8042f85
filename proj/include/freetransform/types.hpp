#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "freetransform/errors.hpp"

namespace freetransform {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Throws NonFiniteError naming `where` unless both components are finite.
inline Complex require_finite(Complex z, std::string_view where) {
  if (!is_finite(z)) throw NonFiniteError(std::string(where) + ": non-finite value");
  return z;
}

}  // namespace freetransform
