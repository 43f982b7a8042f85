#include "freetransform/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "freetransform/checks.hpp"
#include "freetransform/errors.hpp"
#include "freetransform/kernels.hpp"
#include "freetransform/quadrature.hpp"

namespace freetransform::cli {
namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

json parse_object(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("input: malformed JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) throw InvalidInput("input: top level must be a JSON object");
  return doc;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw InvalidInput(where + it.key() + ": unknown field");
    }
  }
}

double number_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) return 0.0;
  const json& v = obj.at(key);
  if (!v.is_number()) throw InvalidInput(where + key + ": expected a number");
  return v.get<double>();
}

std::vector<Atom> parse_atoms(const json& obj) {
  std::vector<Atom> atoms;
  if (!obj.contains("atoms")) return atoms;
  const json& arr = obj.at("atoms");
  if (!arr.is_array()) throw InvalidInput("atoms: expected an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "].";
    const json& a = arr[i];
    if (!a.is_object()) throw InvalidInput("atoms[" + std::to_string(i) + "]: expected an object");
    reject_unknown(a, {"x", "w"}, where);
    if (!a.contains("x")) throw InvalidInput(where + "x: missing");
    if (!a.contains("w")) throw InvalidInput(where + "w: missing");
    atoms.push_back({number_field(a, "x", where), number_field(a, "w", where)});
  }
  return atoms;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("--input: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double parse_double(std::string_view s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw InvalidInput(what + ": '" + std::string(s) + "' is not a finite number");
  }
  return v;
}

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput(what + ": '" + std::string(s) + "' is not an integer");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void write_csv_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_number(v);
    first = false;
  }
  out << '\n';
}

// Domain check on k before evaluating; an out-of-range k is a bad input.
void check_k(const RunConfig& cfg) {
  const int lo = cfg.class_tag == ClassTag::Ubk ? 1 : 0;
  if ((cfg.class_tag == ClassTag::Uks || cfg.class_tag == ClassTag::Ubk ||
       cfg.class_tag == ClassTag::Lk) &&
      cfg.k < lo) {
    throw InvalidInput("--k: must be >= " + std::to_string(lo) + " for this class");
  }
}

KernelFamily family_from_name(const std::string& name, int k) {
  if (name == "sself") return KernelFamily::sself(k);
  if (name == "ubeta") return KernelFamily::ubeta(k);
  if (name == "lclass") return KernelFamily::lclass(k);
  throw InvalidInput("--family: unknown family '" + name + "'");
}

template <class Body>
int with_output(const RunConfig& cfg, std::ostream& out, Body body) {
  // Render fully first so a failure mid-table leaves no partial CSV.
  std::ostringstream buf;
  const int code = body(buf);
  if (cfg.output_path.empty()) {
    out << buf.str();
    return code;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) throw InvalidInput("--out: cannot open '" + cfg.output_path + "'");
  file << buf.str();
  return code;
}

}  // namespace

LevyTriple parse_triple_json(std::string_view text) {
  const json doc = parse_object(text);
  reject_unknown(doc, {"a", "sigma2", "atoms"}, "");
  const double a = number_field(doc, "a", "");
  const double sigma2 = number_field(doc, "sigma2", "");
  if (sigma2 < 0.0) throw InvalidInput("sigma2: must be >= 0");
  std::vector<Atom> atoms = parse_atoms(doc);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "].";
    if (atoms[i].x == 0.0) throw InvalidInput(where + "x: Levy atoms must lie off the origin");
    if (!(atoms[i].w > 0.0)) throw InvalidInput(where + "w: must be > 0");
  }
  return LevyTriple(a, sigma2, std::move(atoms));
}

LInfSpec parse_linf_json(std::string_view text) {
  const json doc = parse_object(text);
  reject_unknown(doc, {"c", "atoms"}, "");
  const double c = number_field(doc, "c", "");
  std::vector<Atom> atoms = parse_atoms(doc);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "].";
    if (!(atoms[i].x > -2.0 && atoms[i].x <= 2.0) || atoms[i].x == 0.0) {
      throw InvalidInput(where + "x: must lie in (-2, 0) u (0, 2]");
    }
    if (!(atoms[i].w > 0.0)) throw InvalidInput(where + "w: must be > 0");
  }
  return LInfSpec(c, FiniteMeasure(std::move(atoms)));
}

GridSpec parse_grid(std::string_view text) {
  const auto axes = split(text, ',');
  if (axes.size() != 2) throw InvalidInput("--grid: expected RE_MIN:RE_MAX:N,IM_MIN:IM_MAX:N");
  GridSpec g;
  for (int axis = 0; axis < 2; ++axis) {
    const auto parts = split(axes[axis], ':');
    if (parts.size() != 3) {
      throw InvalidInput("--grid: expected RE_MIN:RE_MAX:N,IM_MIN:IM_MAX:N");
    }
    const double lo = parse_double(parts[0], "--grid");
    const double hi = parse_double(parts[1], "--grid");
    const int n = parse_int(parts[2], "--grid");
    if (n < 1) throw InvalidInput("--grid: point counts must be >= 1");
    if (lo > hi) throw InvalidInput("--grid: min must not exceed max");
    if (axis == 0) {
      g.re_min = lo, g.re_max = hi, g.re_n = n;
    } else {
      g.im_min = lo, g.im_max = hi, g.im_n = n;
    }
  }
  return g;
}

std::vector<double> geometric_grid(double t_min, double t_max, int steps) {
  if (!(t_min > 0.0) || !std::isfinite(t_min)) throw InvalidInput("--t-min: must be > 0");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidInput("--t-max: must be > 0");
  if (t_min > t_max) throw InvalidInput("--t-min: must not exceed --t-max");
  if (steps < 1) throw InvalidInput("--steps: must be >= 1");
  std::vector<double> ts(steps);
  const double ratio = std::log(t_max / t_min);
  for (int i = 0; i < steps; ++i) {
    ts[i] = steps == 1 ? t_min : t_min * std::exp(ratio * i / (steps - 1));
  }
  ts.back() = steps == 1 ? t_min : t_max;
  return ts;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  std::string s(buf, ec == std::errc() ? ptr : buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

double resolve_tolerance(std::optional<double> explicit_tol, double fallback) {
  double tol = fallback;
  if (explicit_tol) {
    tol = *explicit_tol;
    if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidInput("--tol: must be > 0");
  } else if (const char* env = std::getenv(kTolEnv); env && *env) {
    tol = parse_double(env, kTolEnv);
    if (!(tol > 0.0)) throw InvalidInput(std::string(kTolEnv) + ": must be > 0");
  }
  return tol;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  check_k(cfg);
  const std::vector<double> ts = geometric_grid(cfg.t_min, cfg.t_max, cfg.t_steps);
  if (cfg.input_path.empty()) throw InvalidInput("--input: required for eval");
  const std::string text = read_file(cfg.input_path);

  std::function<Complex(double)> eval;
  if (cfg.class_tag == ClassTag::Linf) {
    if (cfg.route == Route::Quadrature) {
      throw InvalidInput("--route: quadrature is not available for class linf");
    }
    const LInfSpec spec = parse_linf_json(text);
    eval = [spec](double t) { return transform_Linf(spec, t).value; };
  } else {
    const LevyTriple tr = parse_triple_json(text);
    const int k = cfg.k;
    if (cfg.route == Route::Closed) {
      switch (cfg.class_tag) {
        case ClassTag::Uks: eval = [tr, k](double t) { return transform_Uk_s(k, tr, t).value; }; break;
        case ClassTag::Ubk: eval = [tr, k](double t) { return transform_Ubk(k, tr, t).value; }; break;
        case ClassTag::Lk: eval = [tr, k](double t) { return transform_Lk(k, tr, t).value; }; break;
        default: eval = [tr](double t) { return voiculescu_of(tr, t).value; }; break;
      }
    } else if (cfg.class_tag == ClassTag::Id || (cfg.class_tag == ClassTag::Uks && k == 0)) {
      const double tol = resolve_tolerance(cfg.tol, kLaplaceTol);
      eval = [tr, tol](double t) { return voiculescu_via_laplace(tr, t, tol).value; };
    } else {
      const double tol = resolve_tolerance(cfg.tol, kOracleTol);
      const KernelFamily fam = cfg.class_tag == ClassTag::Uks   ? KernelFamily::sself(k)
                               : cfg.class_tag == ClassTag::Ubk ? KernelFamily::ubeta(k)
                                                                : KernelFamily::lclass(k);
      eval = [fam, tr, tol](double t) { return kernel_transform_via_scaling(fam, tr, t, tol).value; };
    }
  }

  return with_output(cfg, out, [&](std::ostream& os) {
    os << "t,re_V,im_V\n";
    for (double t : ts) {
      const Complex v = require_finite(eval(t), "eval");
      write_csv_row(os, {t, v.real(), v.imag()});
    }
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<CheckResult> results = run_suite(cfg.suite);
  bool all = true;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ' ' << format_number(r.deviation) << ' '
        << format_number(r.tol) << '\n';
    all = all && r.passed;
  }
  return all ? kExitOk : kExitVerifyFailed;
}

int cmd_kernels(const RunConfig& cfg, std::ostream& out) {
  const KernelFamily fam = family_from_name(cfg.family, cfg.k);
  const GridSpec g = parse_grid(cfg.grid);
  const double tol = resolve_tolerance(cfg.tol, kOracleTol);
  auto axis = [](double lo, double hi, int n, int i) {
    return n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  };
  return with_output(cfg, out, [&](std::ostream& os) {
    os << "re_z,im_z,re_g,im_g,re_g_quad,im_g_quad,abs_diff\n";
    for (int i = 0; i < g.re_n; ++i) {
      for (int j = 0; j < g.im_n; ++j) {
        const Complex z(axis(g.re_min, g.re_max, g.re_n, i), axis(g.im_min, g.im_max, g.im_n, j));
        const Complex closed = kernel_g(fam, z);
        const Complex quad = kernel_g_quadrature(fam, z, tol);
        write_csv_row(os, {z.real(), z.imag(), closed.real(), closed.imag(), quad.real(),
                           quad.imag(), std::abs(closed - quad)});
      }
    }
    return kExitOk;
  });
}

int cmd_info(std::ostream& out) {
  out << "freetransform " << kVersion << '\n'
      << "classes: uks ubk lk linf id\n"
      << "families: sself ubeta lclass\n"
      << "suites:";
  for (const std::string& s : suite_names()) out << ' ' << s;
  out << " all\n"
      << "default tolerances: oracle " << format_number(kOracleTol) << ", laplace "
      << format_number(kLaplaceTol) << '\n'
      << "tolerance override: " << kTolEnv << '\n';
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  double tol_value = 0.0;

  CLI::App app{"Voiculescu transforms of free infinitely divisible laws"};
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand("eval", "Tabulate V(it) on a geometric t-grid");
  const std::map<std::string, ClassTag> classes = {{"uks", ClassTag::Uks},
                                                   {"ubk", ClassTag::Ubk},
                                                   {"lk", ClassTag::Lk},
                                                   {"linf", ClassTag::Linf},
                                                   {"id", ClassTag::Id}};
  const std::map<std::string, Route> routes = {{"closed", Route::Closed},
                                               {"quadrature", Route::Quadrature}};
  eval->add_option("--class", cfg.class_tag, "uks, ubk, lk, linf or id")
      ->required()
      ->transform(CLI::CheckedTransformer(classes, CLI::ignore_case));
  eval->add_option("--k", cfg.k, "Class index");
  eval->add_option("--input", cfg.input_path, "JSON triple (or LInf spec)")->required();
  eval->add_option("--t-min", cfg.t_min, "Smallest t")->capture_default_str();
  eval->add_option("--t-max", cfg.t_max, "Largest t")->capture_default_str();
  eval->add_option("--steps", cfg.t_steps, "Number of grid points")->capture_default_str();
  CLI::Option* eval_tol = eval->add_option("--tol", tol_value, "Quadrature tolerance");
  eval->add_option("--route", cfg.route, "closed or quadrature")
      ->transform(CLI::CheckedTransformer(routes, CLI::ignore_case));
  eval->add_option("--out", cfg.output_path, "Output CSV (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "kernels, nevanlinna, operators, limits, laplace, pick, all")
      ->required();

  CLI::App* kernels = app.add_subcommand("kernels", "Tabulate g closed form vs quadrature");
  kernels->add_option("--family", cfg.family, "sself, ubeta or lclass")->required();
  kernels->add_option("--k", cfg.k, "Family index")->required();
  kernels->add_option("--grid", cfg.grid, "RE_MIN:RE_MAX:N,IM_MIN:IM_MAX:N")->capture_default_str();
  CLI::Option* kernels_tol = kernels->add_option("--tol", tol_value, "Quadrature tolerance");
  kernels->add_option("--out", cfg.output_path, "Output CSV (default stdout)");

  app.add_subcommand("info", "Print version and capabilities");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (eval->parsed()) {
      cfg.command = Command::Eval;
      if (eval_tol->count() > 0) cfg.tol = tol_value;
      return cmd_eval(cfg, out);
    }
    if (verify->parsed()) {
      cfg.command = Command::Verify;
      return cmd_verify(cfg, out);
    }
    if (kernels->parsed()) {
      cfg.command = Command::Kernels;
      if (kernels_tol->count() > 0) cfg.tol = tol_value;
      return cmd_kernels(cfg, out);
    }
    return cmd_info(out);
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace freetransform::cli
