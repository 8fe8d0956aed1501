#include "gvdw/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gvdw/errors.hpp"
#include "gvdw/units.hpp"

namespace gvdw {

double AtomSpec::omega0_rad_s() const { return omega0_eV / constants().hbar; }

AtomCatalog AtomCatalog::builtins() {
  AtomCatalog cat;
  cat.add({"H", 4.50, 11.65});
  cat.add({"H2", 5.439, 14.09});
  cat.add({"He*", 315.63, 1.18});
  cat.add({"Na", 162.68, 1.55});
  return cat;
}

AtomCatalog AtomCatalog::load(const std::filesystem::path& config) {
  std::ifstream in(config);
  if (!in)
    throw validation_error("atom config: cannot open " + config.string());
  AtomCatalog cat = builtins();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;  // blank/comment line
    double alpha0, omega0;
    if (!(fields >> alpha0 >> omega0))
      throw validation_error("atom config: line " + std::to_string(lineno) +
                             ": expected `name alpha0_au omega0_eV`");
    cat.add({name, alpha0, omega0});
  }
  return cat;
}

void AtomCatalog::add(AtomSpec spec) {
  if (spec.name.empty())
    throw validation_error("atom spec: name must not be empty");
  if (!(spec.alpha0_au > 0.0) || !(spec.omega0_eV > 0.0))
    throw validation_error("atom spec '" + spec.name +
                           "': alpha0 and omega0 must be > 0");
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const AtomSpec& e) { return e.name == spec.name; });
  if (it != entries_.end())
    *it = std::move(spec);
  else
    entries_.push_back(std::move(spec));
}

bool AtomCatalog::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const AtomSpec& e) { return e.name == name; });
}

const AtomSpec& AtomCatalog::lookup(std::string_view name) const {
  for (const AtomSpec& e : entries_)
    if (e.name == name) return e;
  std::string msg = "unknown atom '" + std::string(name) + "'; available:";
  for (const AtomSpec& e : entries_) msg += " " + e.name;
  throw not_found_error(msg);
}

std::vector<std::string> AtomCatalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const AtomSpec& e : entries_) out.push_back(e.name);
  return out;
}

double polarizability_au(const AtomSpec& atom, double xi_rad_s) {
  if (std::isnan(xi_rad_s) || xi_rad_s < 0.0)
    throw std::domain_error("polarizability: xi must be >= 0 and not NaN");
  const double r = xi_rad_s / atom.omega0_rad_s();
  return atom.alpha0_au / (1.0 + r * r);
}

double polarizability(const AtomSpec& atom, double xi_rad_s) {
  return polarizability_au(atom, xi_rad_s) *
         units().polarizability_au_in_nm3();
}

}  // namespace gvdw
