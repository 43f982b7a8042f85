#include "freetransform/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace freetransform {
namespace {

// Kronrod abscissae on [-1, 1]; odd entries are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double lo;
  double hi;
  Complex value;
  double error;
};

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const { return a.error < b.error; }
};

Complex checked(const Integrand& f, double x) {
  const Complex y = f(x);
  if (!is_finite(y)) {
    throw NonFiniteError("quadrature: integrand is non-finite at x = " + std::to_string(x));
  }
  return y;
}

// One GK21 panel with the QUADPACK error heuristic.
Panel gk21(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Complex fc = checked(f, center);
  Complex res_g = 0.0;
  Complex res_k = fc * kWgk[10];
  double res_abs = std::abs(fc) * kWgk[10];
  std::array<Complex, 10> f1{};
  std::array<Complex, 10> f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked(f, center - dx);
    f2[j] = checked(f, center + dx);
    const Complex sum = f1[j] + f2[j];
    res_k += kWgk[j] * sum;
    res_abs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) res_g += kWg[j / 2] * sum;
  }
  const Complex mean = 0.5 * res_k;
  double res_asc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    res_asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double ahalf = std::abs(half);
  res_abs *= ahalf;
  res_asc *= ahalf;
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * res_abs, err);
  }
  return {lo, hi, res_k * half, err};
}

Complex pairwise_sum(const std::vector<Panel>& panels, std::size_t begin, std::size_t end) {
  if (end - begin <= 4) {
    Complex s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += panels[i].value;
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwise_sum(panels, begin, mid) + pairwise_sum(panels, mid, end);
}

}  // namespace

IntegrationResult integrate_finite(const Integrand& f, double lo, double hi, double tol) {
  return integrate_finite(f, lo, hi, QuadratureOptions{tol, 0.0, kMaxPanels});
}

IntegrationResult integrate_finite(const Integrand& f, double lo, double hi,
                                   const QuadratureOptions& opts) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidInput("integrate_finite: need finite lo < hi");
  }
  if (!(opts.abs_tol > 0.0 || opts.rel_tol > 0.0) || opts.abs_tol < 0.0 || opts.rel_tol < 0.0) {
    throw InvalidInput("integrate_finite: tolerance must be positive");
  }
  if (opts.max_panels < 1) throw InvalidInput("integrate_finite: max_panels must be >= 1");

  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  Panel first = gk21(f, lo, hi);
  Complex total = first.value;
  double total_err = first.error;
  queue.push(first);
  int evaluations = 21;
  int panels = 1;

  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

  while (total_err > target()) {
    if (panels >= opts.max_panels) {
      throw MaxSubdivisionError("integrate_finite: panel budget of " +
                                std::to_string(opts.max_panels) + " exhausted (error " +
                                std::to_string(total_err) + ")");
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      throw MaxSubdivisionError("integrate_finite: panel too narrow to bisect near x = " +
                                std::to_string(mid));
    }
    Panel left = gk21(f, worst.lo, mid);
    Panel right = gk21(f, mid, worst.hi);
    evaluations += 42;
    ++panels;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    // refresh the running sums now and then to avoid drift
    if (panels % 64 == 0) {
      auto copy = queue;
      total = 0.0;
      total_err = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }

  std::vector<Panel> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  double err = 0.0;
  for (const Panel& p : all) err += p.error;
  return {pairwise_sum(all, 0, all.size()), err, evaluations, panels};
}

IntegrationResult integrate_semi_infinite(const Integrand& f, double tol, HalfLineMap map) {
  return integrate_semi_infinite(f, QuadratureOptions{tol, 0.0, kMaxPanels}, map);
}

IntegrationResult integrate_semi_infinite(const Integrand& f, const QuadratureOptions& opts,
                                          HalfLineMap map) {
  if (map == HalfLineMap::Log) {
    return integrate_finite([&f](double v) { return f(-std::log(v)) / v; }, 0.0, 1.0, opts);
  }
  return integrate_finite(
      [&f](double v) {
        const double w = 1.0 - v;
        return f(v / w) / (w * w);
      },
      0.0, 1.0, opts);
}

IntegrationResult laplace_transform_result(const std::function<Complex(double)>& g, double t,
                                           double tol) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidInput("laplace_transform: t must be > 0");
  // v = exp(-t u): int_0^inf g(u) e^{-tu} du = (1/t) int_0^1 g(-log(v)/t) dv
  IntegrationResult r = integrate_finite(
      [&g, t](double v) { return g(-std::log(v) / t); }, 0.0, 1.0, tol * t);
  r.value /= t;
  r.error_estimate /= t;
  return r;
}

Complex laplace_transform(const std::function<Complex(double)>& g, double t, double tol) {
  return laplace_transform_result(g, t, tol).value;
}

}  // namespace freetransform
