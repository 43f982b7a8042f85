#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freetransform/measures.hpp"
#include "freetransform/transforms.hpp"

namespace freetransform::cli {

// Process exit codes. Stable contract for scripts.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDomainError = 3;

inline constexpr const char* kTolEnv = "FREETRANSFORM_TOL";

enum class Command { Eval, Verify, Kernels, Info };
enum class ClassTag { Uks, Ubk, Lk, Linf, Id };
enum class Route { Closed, Quadrature };

struct RunConfig {
  Command command = Command::Info;
  ClassTag class_tag = ClassTag::Id;
  Route route = Route::Closed;
  int k = 0;
  std::string input_path;
  double t_min = 1.0;
  double t_max = 1.0;
  int t_steps = 1;
  std::optional<double> tol;
  std::string output_path;  // empty = standard output
  std::string suite;
  std::string family;
  std::string grid = "0:2:5,0:2:5";
};

struct GridSpec {
  double re_min = 0.0, re_max = 0.0;
  int re_n = 1;
  double im_min = 0.0, im_max = 0.0;
  int im_n = 1;
};

/// {"a": real, "sigma2": real, "atoms": [{"x": real, "w": real}, ...]}.
/// Every field is optional (defaults 0, 0, []); unknown keys are rejected.
/// Throws InvalidInput naming the offending field.
LevyTriple parse_triple_json(std::string_view text);

/// {"c": real, "atoms": [...]} with atom locations in (-2, 0) u (0, 2].
LInfSpec parse_linf_json(std::string_view text);

/// "RE_MIN:RE_MAX:N,IM_MIN:IM_MAX:N".
GridSpec parse_grid(std::string_view text);

/// Log-spaced grid from t_min to t_max inclusive; a single point is t_min.
std::vector<double> geometric_grid(double t_min, double t_max, int steps);

/// 17 significant digits, locale-free '.' decimal, trailing ".0" on
/// integral values so 1 prints as "1.0".
std::string format_number(double v);

/// Explicit value, else the environment override, else fallback.
double resolve_tolerance(std::optional<double> explicit_tol, double fallback);

int cmd_eval(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_kernels(const RunConfig& cfg, std::ostream& out);
int cmd_info(std::ostream& out);

/// Full command line (without the program name). Maps exceptions onto the
/// exit codes above and reports them on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freetransform::cli
