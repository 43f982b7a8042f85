#include "freetransform/operators.hpp"

#include <cmath>
#include <string>

#include "freetransform/transforms.hpp"

namespace freetransform {

Complex derivative_t(const TransformEvaluator& v, double t, double h) {
  if (!(h > 0.0) || !(t - 2.0 * h > 0.0)) {
    throw StepError("derivative_t: need h > 0 and t - 2h > 0 (t = " + std::to_string(t) +
                    ", h = " + std::to_string(h) + ")");
  }
  const Complex d_h = (v(t + h) - v(t - h)) / (2.0 * h);
  const double half = 0.5 * h;
  const Complex d_half = (v(t + half) - v(t - half)) / h;
  return (4.0 * d_half - d_h) / 3.0;
}

TransformEvaluator apply_bigD(TransformEvaluator v, double rel_step) {
  std::string label = "bigD(" + v.label + ")";
  return {[inner = std::move(v), rel_step](double t) {
            return 2.0 * inner(t) - t * derivative_t(inner, t, rel_step * t);
          },
          std::move(label)};
}

TransformEvaluator apply_smallD(TransformEvaluator v, double rel_step) {
  std::string label = "D(" + v.label + ")";
  return {[inner = std::move(v), rel_step](double t) {
            return inner(t) - t * derivative_t(inner, t, rel_step * t);
          },
          std::move(label)};
}

TransformEvaluator apply_bigD_power(TransformEvaluator v, int n, double rel_step) {
  if (n < 0) throw InvalidInput("apply_bigD_power: n must be >= 0");
  for (int i = 0; i < n; ++i) v = apply_bigD(std::move(v), rel_step);
  return v;
}

TransformEvaluator apply_smallD_power(TransformEvaluator v, int n, double rel_step) {
  if (n < 0) throw InvalidInput("apply_smallD_power: n must be >= 0");
  for (int i = 0; i < n; ++i) v = apply_smallD(std::move(v), rel_step);
  return v;
}

double nested_relative_step(int n) {
  if (n <= 1) return kRelativeStep;
  if (n == 2) return 5e-3;
  if (n == 3) return 1e-2;
  return 2e-2;
}

LimitReport corollary2_limit_check(const LevyTriple& tr, double t, std::span<const int> ks) {
  if (ks.empty()) throw InvalidInput("corollary2_limit_check: no k values");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1 || (i > 0 && ks[i] <= ks[i - 1])) {
      throw InvalidInput("corollary2_limit_check: ks must be strictly increasing and >= 1");
    }
  }
  LimitReport report;
  report.limit = voiculescu_of(tr, t).value;
  for (int k : ks) {
    const Complex value = transform_Ubk(k, tr, t).value;
    report.rows.push_back({k, value, std::abs(value - report.limit)});
  }
  report.decreasing = true;
  report.rate_ok = true;
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    const LimitRow& a = report.rows[i];
    const LimitRow& b = report.rows[i + 1];
    const double ratio = a.deviation / b.deviation;
    report.ratios.push_back(ratio);
    if (!(b.deviation < a.deviation)) report.decreasing = false;
    if (b.k == 10 * a.k && !(ratio >= 5.0 && ratio <= 20.0)) report.rate_ok = false;
  }
  return report;
}

}  // namespace freetransform
