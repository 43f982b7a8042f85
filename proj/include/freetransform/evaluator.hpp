#pragma once

#include <functional>
#include <string>

#include "freetransform/types.hpp"

namespace freetransform {

/// A transform t -> V(it) on t > 0 as a first-class value.
struct TransformEvaluator {
  std::function<Complex(double)> eval;
  std::string label;

  Complex operator()(double t) const { return eval(t); }
};

}  // namespace freetransform
