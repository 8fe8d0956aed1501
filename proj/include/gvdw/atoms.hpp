#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gvdw {

// Single-oscillator species: alpha(i xi) = alpha0 / (1 + xi^2/omega0^2).
struct AtomSpec {
  std::string name;
  double alpha0_au;  // static polarizability, a.u.
  double omega0_eV;  // characteristic oscillator energy, eV

  double omega0_rad_s() const;
};

class AtomCatalog {
 public:
  // H, H2, He*, Na.
  static AtomCatalog builtins();
  // Built-ins plus/overridden-by records from a config file. Each non-comment
  // line is `name alpha0_au omega0_eV` (comma or whitespace separated).
  static AtomCatalog load(const std::filesystem::path& config);

  const AtomSpec& lookup(std::string_view name) const;
  bool contains(std::string_view name) const;
  void add(AtomSpec spec);  // validates; replaces an existing entry of the same name
  std::vector<std::string> names() const;
  const std::vector<AtomSpec>& entries() const { return entries_; }

 private:
  std::vector<AtomSpec> entries_;
};

// Dynamic polarizability at imaginary frequency xi (rad/s), in internal
// volume units (nm^3). xi must be finite and >= 0.
double polarizability(const AtomSpec& atom, double xi_rad_s);
// Same, in a.u.
double polarizability_au(const AtomSpec& atom, double xi_rad_s);

}  // namespace gvdw
