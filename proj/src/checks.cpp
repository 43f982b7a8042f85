#include "freetransform/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "freetransform/kernels.hpp"
#include "freetransform/operators.hpp"
#include "freetransform/quadrature.hpp"
#include "freetransform/transforms.hpp"

namespace freetransform {
namespace {

using Results = std::vector<CheckResult>;

void record(Results& out, std::string name, double deviation, double tol) {
  out.push_back({std::move(name), deviation, tol, deviation <= tol});
}

std::vector<KernelFamily> builtin_families(int k_max) {
  std::vector<KernelFamily> fams;
  for (int k = 1; k <= k_max; ++k) {
    fams.push_back(KernelFamily::sself(k));
    fams.push_back(KernelFamily::ubeta(k));
    fams.push_back(KernelFamily::lclass(k));
  }
  return fams;
}

std::vector<LevyTriple> sample_triples() {
  return {
      LevyTriple(0.3, 0.7, {{1.0, 0.5}, {-2.5, 0.2}, {0.4, 1.3}}),
      LevyTriple(-1.0, 0.0, {{3.0, 0.25}}),
      LevyTriple(0.0, 2.0, {{-0.7, 1.0}, {5.0, 0.1}}),
  };
}

TransformEvaluator uks_eval(int k, const LevyTriple& tr) {
  return {[k, tr](double t) { return transform_Uk_s(k, tr, t).value; }, "U<k>"};
}

TransformEvaluator lk_eval(int k, const LevyTriple& tr) {
  return {[k, tr](double t) { return transform_Lk(k, tr, t).value; }, "L_k"};
}

void suite_kernels(Results& out) {
  double worst_g = 0.0;
  double worst_cd = 0.0;
  double worst_route = 0.0;
  for (const KernelFamily& fam : builtin_families(5)) {
    worst_cd = std::max(worst_cd, std::abs(const_c(fam) - const_c_quadrature(fam)));
    worst_cd = std::max(worst_cd, std::abs(const_d(fam) - const_d_quadrature(fam)));
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const Complex z(-0.5 + 2.5 * i / 4.0, 0.1 + 1.9 * j / 4.0);
        worst_g = std::max(worst_g, std::abs(kernel_g(fam, z) - kernel_g_quadrature(fam, z)));
        if (fam.tag() == FamilyTag::SSelf) {
          worst_route = std::max(
              worst_route, std::abs(kernel_g_quadrature(fam, z) -
                                    kernel_g_quadrature(fam, z, kOracleTol,
                                                        KernelRoute::LogSubstitution)));
        }
      }
    }
  }
  record(out, "kernels.g_closed_vs_quadrature", worst_g, 1e-8);
  record(out, "kernels.cd_closed_vs_quadrature", worst_cd, 1e-10);
  record(out, "kernels.sself_substitution_routes", worst_route, 1e-8);
}

void suite_nevanlinna(Results& out) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> im(0.05, 3.0);
  std::vector<Complex> zs(200);
  for (Complex& z : zs) z = {re(rng), im(rng)};
  for (const KernelFamily& fam : builtin_families(3)) {
    double max_im = -INFINITY;
    for (Complex z : zs) max_im = std::max(max_im, kernel_g(fam, z).imag());
    // deviation = max Im g; the sign property needs it strictly negative
    out.push_back({"nevanlinna." + fam.name(), max_im, 0.0, max_im < 0.0});
  }
}

void suite_operators(Results& out) {
  const double ts[] = {0.5, 1.0, 2.0};
  double cor1 = 0.0;
  double cor3 = 0.0;
  double identity = 0.0;
  for (const LevyTriple& tr : sample_triples()) {
    for (int k = 1; k <= 3; ++k) {
      for (double t : ts) {
        cor1 = std::max(cor1, std::abs(apply_bigD(uks_eval(k, tr))(t) -
                                       transform_Uk_s(k - 1, tr, t).value));
        cor3 = std::max(cor3, std::abs(apply_smallD(lk_eval(k, tr))(t) -
                                       transform_Lk(k - 1, tr, t).value));
        const TransformEvaluator v = uks_eval(k, tr);
        identity = std::max(identity, std::abs(apply_bigD(v)(t) - apply_smallD(v)(t) - v(t)));
      }
    }
  }
  record(out, "operators.bigD_Uk_to_Uk-1", cor1, 1e-6);
  record(out, "operators.smallD_Lk_to_Lk-1", cor3, 1e-6);
  record(out, "operators.bigD_minus_smallD_is_identity", identity, 1e-12);
  for (int k = 1; k <= 3; ++k) {
    double big = 0.0;
    double small = 0.0;
    for (const LevyTriple& tr : sample_triples()) {
      const TransformEvaluator pb = apply_bigD_power(uks_eval(k, tr), k, nested_relative_step(k));
      const TransformEvaluator ps =
          apply_smallD_power(lk_eval(k, tr), k + 1, nested_relative_step(k + 1));
      for (double t : ts) {
        const Complex target = voiculescu_of(tr, t).value;
        big = std::max(big, std::abs(pb(t) - target));
        small = std::max(small, std::abs(ps(t) - target));
      }
    }
    record(out, "operators.bigD^" + std::to_string(k) + "_to_ID", big, k * 1e-5);
    record(out, "operators.smallD^" + std::to_string(k + 1) + "_to_ID", small, k * 1e-5);
  }
}

void suite_limits(Results& out) {
  const int ks[] = {10, 100, 1000};
  const LevyTriple cases[] = {LevyTriple(1.0, 0.0), LevyTriple(0.5, 1.5),
                              LevyTriple(0.0, 0.0, {{1.0, 1.0}}), sample_triples()[0]};
  const char* names[] = {"drift", "gaussian", "atom", "mixed"};
  for (int i = 0; i < 4; ++i) {
    const LimitReport rep = corollary2_limit_check(cases[i], 1.0, ks);
    for (std::size_t r = 0; r < rep.rows.size(); ++r) {
      out.push_back({std::string("limits.") + names[i] + ".k=" + std::to_string(rep.rows[r].k),
                     rep.rows[r].deviation, 0.0, true});
    }
    double worst_ratio_gap = 0.0;  // distance of the ratios from [5, 20]
    for (double q : rep.ratios) {
      worst_ratio_gap = std::max({worst_ratio_gap, 5.0 - q, q - 20.0});
    }
    out.push_back({std::string("limits.") + names[i] + ".rate", std::max(0.0, worst_ratio_gap),
                   0.0, rep.decreasing && rep.rate_ok});
  }
}

void suite_laplace(Results& out) {
  const LevyTriple gaussians[] = {LevyTriple(0.0, 1.0), LevyTriple(1.0, 2.0),
                                  LevyTriple(-2.0, 0.5), LevyTriple(3.0, 0.0),
                                  LevyTriple(0.5, 4.0)};
  const double ts[] = {0.25, 0.5, 1.0, 2.0, 4.0};
  double worst = 0.0;
  for (const LevyTriple& g : gaussians) {
    for (double t : ts) {
      const Complex closed = g.drift() + g.gauss_var() / Complex(0.0, t);
      worst = std::max(worst, std::abs(voiculescu_via_laplace(g, t).value - closed));
    }
  }
  record(out, "laplace.gaussian_vs_closed_form", worst, 1e-6);

  const LevyTriple atom(0.0, 0.0, {{1.0, 1.0}});
  double atom_dev = 0.0;
  for (double t : ts) {
    atom_dev = std::max(atom_dev,
                        std::abs(voiculescu_via_laplace(atom, t).value - voiculescu_of(atom, t).value));
  }
  record(out, "laplace.poisson_atom_vs_direct", atom_dev, 1e-6);

  double cauchy = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    cauchy = std::max(cauchy, std::abs(cauchy_half_transform(0.0, t).value -
                                       Complex(0.0, -std::numbers::pi / 2.0)));
  }
  record(out, "laplace.example_cauchy_integral", cauchy, 1e-6);
}

void suite_pick(Results& out) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(0.05, 4.0);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> im(0.05, 3.0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = len(rng);
    std::vector<double> h(n);
    std::vector<double> jumps(n);
    for (int i = 0; i < n; ++i) {
      h[i] = pos(rng);
      jumps[i] = pos(rng);
    }
    const PickRepresentation rep = pick_representation(h, jumps);
    for (int j = 0; j < 5; ++j) {
      const Complex z(re(rng), im(rng));
      worst = std::max(worst, std::abs(pick_evaluate(rep, z) - step_kernel_g(h, jumps, z)));
    }
  }
  record(out, "pick.lemma_identity", worst, 1e-12);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kernels", "nevanlinna", "operators",
                                                 "limits",  "laplace",    "pick"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
  Results out;
  if (suite == "all") {
    for (const std::string& name : suite_names()) {
      Results part = run_suite(name);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else if (suite == "kernels") {
    suite_kernels(out);
  } else if (suite == "nevanlinna") {
    suite_nevanlinna(out);
  } else if (suite == "operators") {
    suite_operators(out);
  } else if (suite == "limits") {
    suite_limits(out);
  } else if (suite == "laplace") {
    suite_laplace(out);
  } else if (suite == "pick") {
    suite_pick(out);
  } else {
    throw InvalidInput("unknown verification suite '" + std::string(suite) + "'");
  }
  return out;
}

}  // namespace freetransform
