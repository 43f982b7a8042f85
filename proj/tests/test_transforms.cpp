#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "freetransform/errors.hpp"
#include "freetransform/kernels.hpp"
#include "freetransform/specfun.hpp"
#include "freetransform/transforms.hpp"
#include "support.hpp"

using namespace freetransform;
using ft_test::dist;

namespace {

constexpr double kPi = std::numbers::pi;

Complex it_of(double t) { return {0.0, t}; }

TransformEvaluator id_eval(const LevyTriple& tr) {
  return {[tr](double t) { return voiculescu_of(tr, t).value; }, "id"};
}

const LevyTriple kMixed(0.3, 0.7, {{1.0, 0.5}, {-2.5, 0.2}, {0.4, 1.3}});

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("logphi examples") {
  CHECK(dist(logphi(LevyTriple(1.7, 0.0), 2.0), Complex(0.0, 3.4)) < 1e-15);
  CHECK(dist(logphi(LevyTriple(0.0, 1.0), 2.0), -2.0) < 1e-15);
  CHECK(dist(logphi(LevyTriple(0.0, 0.0, {{1.0, 1.0}}), kPi), Complex(-2.0, -kPi / 2.0)) < 1e-14);
}

TEST_CASE("voiculescu_direct examples") {
  for (double t : {0.5, 1.0, 3.0}) {
    CHECK(dist(voiculescu_direct(1.5, FiniteMeasure({{0.0, 2.0}}), t).value,
               1.5 + 2.0 / it_of(t)) < 1e-15);
  }
  CHECK(dist(voiculescu_direct(0.0, FiniteMeasure({{1.0, 1.0}}), 1.0).value, Complex(0.0, -1.0)) <
        1e-15);
  for (double t : {0.5, 1.0, 2.0}) {
    CHECK(dist(cauchy_half_transform(0.4, t).value, Complex(0.4, -kPi / 2.0)) < 1e-10);
  }
  CHECK_THROWS_AS(voiculescu_direct(0.0, FiniteMeasure(), 0.0), DomainError);
}

TEST_CASE("voiculescu_via_laplace examples") {
  for (double t : {0.5, 1.0, 2.0}) {
    CHECK(dist(voiculescu_via_laplace(LevyTriple(1.0, 2.0), t).value, 1.0 + 2.0 / it_of(t)) < 1e-6);
    CHECK(dist(voiculescu_via_laplace(LevyTriple(-3.0, 0.0), t).value, -3.0) < 1e-6);
  }
  const LevyTriple p(0.0, 0.0, {{1.0, 1.0}});
  CHECK(dist(voiculescu_via_laplace(p, 1.0).value, voiculescu_of(p, 1.0).value) < 1e-8);
}

TEST_CASE("Laplace route agrees with the direct form (property)") {
  ft_test::TripleGen gen(51);
  for (int i = 0; i < 15; ++i) {
    const LevyTriple tr = gen.next();
    const double t = gen.uniform(0.3, 3.0);
    CHECK(dist(voiculescu_via_laplace(tr, t).value, voiculescu_of(tr, t).value) < 1e-6);
  }
}

TEST_CASE("theorem1_transform with no Poisson part") {
  const LevyTriple g(1.3, 0.8);
  std::vector<KernelFamily> fams = {KernelFamily::sself(2), KernelFamily::ubeta(3),
                                    KernelFamily::lclass(1), KernelFamily::lclass(0)};
  for (const KernelFamily& fam : fams) {
    for (double t : {0.5, 2.0}) {
      const Complex expect = 1.3 * const_c(fam) + 0.8 * const_d(fam) / it_of(t);
      CHECK(dist(theorem1_transform(fam, g, t).value, expect) < 1e-14);
    }
  }
}

TEST_CASE("class closed forms equal theorem1_transform and the scaling route") {
  ft_test::TripleGen gen(52);
  for (int trial = 0; trial < 10; ++trial) {
    const LevyTriple tr = trial == 0 ? LevyTriple(0.0, 0.0, {{1.0, 1.0}}) : gen.next();
    for (double t : {0.5, 1.0, 2.0}) {
      for (int k = 1; k <= 3; ++k) {
        const KernelFamily s = KernelFamily::sself(k);
        const KernelFamily u = KernelFamily::ubeta(k);
        const KernelFamily l = KernelFamily::lclass(k);
        CHECK(dist(transform_Uk_s(k, tr, t).value, theorem1_transform(s, tr, t).value) < 1e-10);
        CHECK(dist(transform_Ubk(k, tr, t).value, theorem1_transform(u, tr, t).value) < 1e-10);
        CHECK(dist(transform_Lk(k, tr, t).value, theorem1_transform(l, tr, t).value) < 1e-10);
        if (trial < 3) {
          CHECK(dist(kernel_transform_via_scaling(s, tr, t).value, transform_Uk_s(k, tr, t).value) < 1e-8);
          CHECK(dist(kernel_transform_via_scaling(u, tr, t).value, transform_Ubk(k, tr, t).value) < 1e-8);
          CHECK(dist(kernel_transform_via_scaling(l, tr, t).value, transform_Lk(k, tr, t).value) < 1e-8);
        }
      }
      const KernelFamily l0 = KernelFamily::lclass(0);
      CHECK(dist(transform_Lk(0, tr, t).value, theorem1_transform(l0, tr, t).value) < 1e-10);
    }
  }
}

TEST_CASE("transform_Uk_s examples") {
  const LevyTriple g(1.2, 0.6);
  for (int k = 0; k <= 4; ++k) {
    for (double t : {0.5, 1.0, 2.0}) {
      const Complex expect = 1.2 / std::pow(2.0, k) + 0.6 / (std::pow(3.0, k) * it_of(t));
      CHECK(dist(transform_Uk_s(k, g, t).value, expect) < 1e-14);
    }
  }
  // k = 0 is the whole free-ID class
  for (double t : {0.5, 1.0, 2.0}) {
    CHECK(dist(transform_Uk_s(0, kMixed, t).value, voiculescu_of(kMixed, t).value) < 1e-14);
  }
  CHECK_THROWS_AS(transform_Uk_s(-1, g, 1.0), DomainError);
}

TEST_CASE("transform_Uk_s_measure matches the triple form") {
  const FiniteMeasure m = triple_to_finite_measure(kMixed);
  for (int k = 0; k <= 3; ++k) {
    for (double t : {0.5, 2.0}) {
      CHECK(dist(transform_Uk_s_measure(k, kMixed.drift(), m, t).value,
                 transform_Uk_s(k, kMixed, t).value) < 1e-13);
    }
  }
}

TEST_CASE("transform_Ubk examples") {
  const LevyTriple g(1.2, 0.6);
  for (int k = 1; k <= 4; ++k) {
    const Complex expect = k * 1.2 / (k + 1.0) + k * 0.6 / ((k + 2.0) * it_of(1.5));
    CHECK(dist(transform_Ubk(k, g, 1.5).value, expect) < 1e-14);
  }
  const LevyTriple p(0.0, 0.0, {{1.0, 1.0}});
  CHECK(dist(transform_Ubk(2, p, 1.0).value, theorem1_transform(KernelFamily::ubeta(2), p, 1.0).value) <
        1e-10);
  CHECK(dist(transform_Ubk(1000, p, 1.0).value, voiculescu_of(p, 1.0).value) < 2e-3);
  const FiniteMeasure m = triple_to_finite_measure(kMixed);
  CHECK(dist(transform_Ubk_measure(3, kMixed.drift(), m, 0.7).value, transform_Ubk(3, kMixed, 0.7).value) <
        1e-13);
  CHECK_THROWS_AS(transform_Ubk(0, g, 1.0), DomainError);
}

TEST_CASE("transform_Lk examples") {
  const LevyTriple g(1.2, 0.6);
  for (int k = 0; k <= 4; ++k) {
    const Complex expect = 1.2 + 0.6 / (std::pow(2.0, k + 1) * it_of(0.8));
    CHECK(dist(transform_Lk(k, g, 0.8).value, expect) < 1e-14);
  }
  // k = 0 with a single atom: V = it Li_1(x / it) with the Gaussian-free shift
  const LevyTriple p(0.0, 0.0, {{1.0, 1.0}});
  const Complex z = 1.0 / it_of(1.0);
  const Complex expect = it_of(1.0) * (-std::log(1.0 - z)) - 0.5;
  CHECK(dist(transform_Lk(0, p, 1.0).value, expect) < 1e-14);
  CHECK(dist(transform_Lk(2, kMixed, 1.3).value,
             theorem1_transform(KernelFamily::lclass(2), kMixed, 1.3).value) < 1e-10);
  CHECK_THROWS_AS(transform_Lk(-1, g, 1.0), DomainError);
}

TEST_CASE("transform_Lk_measure over lk_finite_measure matches the triple form") {
  for (int k = 0; k <= 3; ++k) {
    const FiniteMeasure m = lk_finite_measure(kMixed, k);
    CHECK(m.mass_at(0.0) == kMixed.gauss_var());
    for (double t : {0.5, 1.0, 2.0}) {
      CHECK(dist(transform_Lk_measure(k, kMixed.drift(), m, t).value,
                 transform_Lk(k, kMixed, t).value) < 1e-12);
    }
  }
}

TEST_CASE("integrated_logphi for a Gaussian") {
  // int log phi(h v) dr = i a c v - sigma^2 d v^2 / 2
  const LevyTriple g(0.9, 1.4);
  for (const KernelFamily& fam : {KernelFamily::sself(2), KernelFamily::ubeta(1), KernelFamily::lclass(1)}) {
    const double v = 1.7;
    const Complex expect(-1.4 * const_d(fam) * v * v / 2.0, 0.9 * const_c(fam) * v);
    CHECK(dist(integrated_logphi(fam, g, v), expect) < 1e-9);
  }
}

TEST_CASE("transform_Linf examples") {
  const LInfSpec rademacher(0.7, FiniteMeasure({{-1.0, 0.5}, {1.0, 0.5}}));
  for (double t : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    CHECK(dist(transform_Linf(rademacher, t).value, Complex(0.7, -kPi / 2.0)) < 1e-14);
  }
  const LInfSpec empty(2.5, FiniteMeasure());
  CHECK(transform_Linf(empty, 1.0).value == Complex(2.5));
  CHECK_THROWS_AS(LInfSpec(0.0, FiniteMeasure({{2.5, 1.0}})), InvalidInput);
  CHECK_THROWS_AS(LInfSpec(0.0, FiniteMeasure({{-2.0, 1.0}})), InvalidInput);
  CHECK_NOTHROW(LInfSpec(0.0, FiniteMeasure({{2.0, 1.0}})));
}

TEST_CASE("Linf integrand limits and continuity at |x| = 1") {
  CHECK(dist(linf_limit(1), Complex(-euler_gamma(), kPi / 2.0)) < 1e-16);
  CHECK(dist(linf_limit(-1), Complex(euler_gamma(), kPi / 2.0)) < 1e-16);
  for (int sign : {1, -1}) {
    CHECK(dist(linf_integrand(sign * 1.0, 1.0), linf_limit(sign)) < 1e-15);
    for (double t : {0.5, 1.0, 3.0}) {
      for (double d : {1e-3, 1e-4, 1e-5, 1e-6}) {
        for (double side : {-1.0, 1.0}) {
          const double x = sign * (1.0 + side * d);
          // guarded evaluation is continuous and matches the raw formula
          CHECK(dist(linf_integrand(x, t), linf_integrand_direct(x, t)) < 1e-8);
        }
      }
      CHECK(dist(linf_integrand(sign * (1.0 + 1e-6), t), linf_limit(sign)) < 1e-5);
    }
  }
  CHECK_THROWS_AS(linf_integrand_direct(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(linf_integrand(0.0, 1.0), DomainError);
}

TEST_CASE("scale_transform") {
  const TransformEvaluator v = id_eval(kMixed);
  for (double t : {0.5, 1.0, 2.0}) {
    CHECK(scale_transform(1.0, v, t).value == v(t));
    const TransformEvaluator g = id_eval(LevyTriple(0.4, 1.1));
    CHECK(dist(scale_transform(2.0, g, t).value, 0.8 + 4.4 / it_of(t)) < 1e-14);
    CHECK(dist(scaled(2.0, scaled(0.5, v))(t), scaled(1.0, v)(t)) < 1e-15);
  }
  CHECK_THROWS_AS(scale_transform(0.0, v, 1.0), DomainError);
}

TEST_CASE("scaling identity V_{T_c mu}(it) = c V_mu(it/c) (property)") {
  ft_test::TripleGen gen(53);
  for (int i = 0; i < 50; ++i) {
    const LevyTriple tr = gen.next();
    const double c = gen.uniform(0.2, 5.0);
    const double t = gen.uniform(0.2, 5.0);
    const Complex lhs = voiculescu_of(scale_triple(c, tr), t).value;
    const Complex rhs = scale_transform(c, id_eval(tr), t).value;
    CHECK(dist(lhs, rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("add_transforms") {
  const TransformEvaluator zero{[](double) { return Complex(0.0); }, "0"};
  const TransformEvaluator v = id_eval(kMixed);
  CHECK(add_transforms(v, zero, 1.3).value == v(1.3));
  const TransformEvaluator g1 = id_eval(LevyTriple(1.0, 0.5));
  const TransformEvaluator g2 = id_eval(LevyTriple(-0.25, 2.0));
  CHECK(dist(add_transforms(g1, g2, 0.9).value, 0.75 + 2.5 / it_of(0.9)) < 1e-14);

  ft_test::TripleGen gen(54);
  for (int i = 0; i < 30; ++i) {
    const LevyTriple a = gen.next();
    const LevyTriple b = gen.next();
    const LevyTriple ab = convolve_triples(a, b);
    const double t = gen.uniform(0.3, 3.0);
    const Complex sum = add_transforms(id_eval(a), id_eval(b), t).value;
    CHECK(dist(voiculescu_of(ab, t).value, sum) <= 1e-12 * (1.0 + std::abs(sum)));
    if (i < 5) CHECK(dist(voiculescu_via_laplace(ab, t).value, sum) < 1e-8);
  }
}

TEST_CASE("theorem2_check") {
  const std::vector<double> ts = {0.5, 1.0, 2.0};
  const Theorem2Report drift = theorem2_check(LevyTriple(1.5, 0.0), ts);
  for (const Theorem2Row& row : drift.rows) CHECK(dist(row.decomposed, 3.0) < 1e-14);

  const Theorem2Report gauss = theorem2_check(LevyTriple(0.5, 2.0), ts);
  for (const Theorem2Row& row : gauss.rows) {
    CHECK(dist(row.decomposed, 1.0 + 1.5 * 2.0 / it_of(row.t)) < 1e-14);
  }
  const Theorem2Report mixed = theorem2_check(kMixed, ts);
  CHECK(mixed.rows.size() == 3);
  CHECK(mixed.max_deviation <= 1e-12);
  CHECK(mixed.max_quadrature_deviation <= 1e-8);
  CHECK(mixed.log_moment > 0.0);
}

}  // TEST_SUITE
