#include "freetransform/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "freetransform/errors.hpp"

namespace freetransform {
namespace {

void require_distinct(std::vector<double> locations, const char* what) {
  std::sort(locations.begin(), locations.end());
  if (std::adjacent_find(locations.begin(), locations.end()) != locations.end()) {
    throw InvalidInput(std::string(what) + ": duplicate atom location");
  }
}

}  // namespace

FiniteMeasure::FiniteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::vector<double> locations;
  locations.reserve(atoms_.size());
  for (const Atom& a : atoms_) {
    if (!std::isfinite(a.x) || !std::isfinite(a.w)) {
      throw InvalidInput("FiniteMeasure: non-finite atom");
    }
    if (a.w < 0.0) {
      throw InvalidInput("FiniteMeasure: negative mass");
    }
    locations.push_back(a.x);
  }
  require_distinct(std::move(locations), "FiniteMeasure");
}

double FiniteMeasure::total_mass() const {
  double total = 0.0;
  for (const Atom& a : atoms_) total += a.w;
  return total;
}

double FiniteMeasure::mass_at(double x) const {
  auto it = std::find_if(atoms_.begin(), atoms_.end(), [x](const Atom& a) { return a.x == x; });
  return it == atoms_.end() ? 0.0 : it->w;
}

LevyTriple::LevyTriple(double drift, double gauss_var, std::vector<Atom> levy_atoms)
    : drift_(drift), gauss_var_(gauss_var), atoms_(std::move(levy_atoms)) {
  if (!std::isfinite(drift_)) throw InvalidInput("LevyTriple: non-finite drift");
  if (!std::isfinite(gauss_var_) || gauss_var_ < 0.0) {
    throw InvalidInput("LevyTriple: gauss_var must be finite and >= 0");
  }
  std::vector<double> locations;
  locations.reserve(atoms_.size());
  double weighted = 0.0;
  for (const Atom& a : atoms_) {
    if (!std::isfinite(a.x) || !std::isfinite(a.w)) {
      throw InvalidInput("LevyTriple: non-finite atom");
    }
    if (a.x == 0.0) throw InvalidInput("LevyTriple: Levy measure has an atom at 0");
    if (a.w <= 0.0) throw InvalidInput("LevyTriple: atom mass must be > 0");
    weighted += a.w * a.x * a.x / (1.0 + a.x * a.x);
    locations.push_back(a.x);
  }
  if (!std::isfinite(weighted)) throw InvalidInput("LevyTriple: infinite x^2/(1+x^2) mass");
  require_distinct(std::move(locations), "LevyTriple");
}

FiniteMeasure triple_to_finite_measure(const LevyTriple& tr) {
  std::vector<Atom> atoms;
  atoms.reserve(tr.levy_atoms().size() + 1);
  if (tr.gauss_var() > 0.0) atoms.push_back({0.0, tr.gauss_var()});
  for (const Atom& a : tr.levy_atoms()) {
    const double q = a.x * a.x;
    atoms.push_back({a.x, a.w * q / (1.0 + q)});
  }
  return FiniteMeasure(std::move(atoms));
}

LevyTriple finite_measure_to_triple(double drift, const FiniteMeasure& m) {
  double gauss_var = 0.0;
  std::vector<Atom> atoms;
  atoms.reserve(m.atoms().size());
  for (const Atom& a : m.atoms()) {
    if (a.x == 0.0) {
      gauss_var = a.w;
    } else if (a.w > 0.0) {
      const double q = a.x * a.x;
      atoms.push_back({a.x, a.w * (1.0 + q) / q});
    }
  }
  return LevyTriple(drift, gauss_var, std::move(atoms));
}

double log_moment(const LevyTriple& tr, int p) {
  if (p < 1) throw InvalidInput("log_moment: p must be >= 1");
  double total = 0.0;
  for (const Atom& a : tr.levy_atoms()) {
    if (std::abs(a.x) > 1.0) total += a.w * std::pow(std::log1p(std::abs(a.x)), p);
  }
  return total;
}

LevyTriple scale_triple(double c, const LevyTriple& tr) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidInput("scale_triple: c must be > 0");
  double drift = c * tr.drift();
  std::vector<Atom> atoms;
  atoms.reserve(tr.levy_atoms().size());
  for (const Atom& a : tr.levy_atoms()) {
    const double y = c * a.x;
    // compensator moves from x/(1+x^2) to y/(1+y^2)
    drift += a.w * (y / (1.0 + y * y) - y / (1.0 + a.x * a.x));
    atoms.push_back({y, a.w});
  }
  return LevyTriple(drift, c * c * tr.gauss_var(), std::move(atoms));
}

LevyTriple reflect_triple(const LevyTriple& tr) {
  std::vector<Atom> atoms;
  atoms.reserve(tr.levy_atoms().size());
  for (const Atom& a : tr.levy_atoms()) atoms.push_back({-a.x, a.w});
  return LevyTriple(-tr.drift(), tr.gauss_var(), std::move(atoms));
}

LevyTriple convolve_triples(const LevyTriple& lhs, const LevyTriple& rhs) {
  std::map<double, double> merged;
  for (const Atom& a : lhs.levy_atoms()) merged[a.x] += a.w;
  for (const Atom& a : rhs.levy_atoms()) merged[a.x] += a.w;
  std::vector<Atom> atoms;
  atoms.reserve(merged.size());
  for (const auto& [x, w] : merged) atoms.push_back({x, w});
  return LevyTriple(lhs.drift() + rhs.drift(), lhs.gauss_var() + rhs.gauss_var(),
                    std::move(atoms));
}

}  // namespace freetransform
