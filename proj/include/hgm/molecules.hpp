#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgm/particle.hpp"
#include "hgm/potential.hpp"
#include "hgm/units.hpp"

namespace hgm {

/// Spectroscopic constants of a diatomic molecule in input units.
struct Molecule
{
    std::string name;
    double De_cm = 0.0;       ///< dissociation energy, cm^-1
    double re_angstrom = 0.0; ///< equilibrium bond length, A
    double mu_amu = 0.0;      ///< reduced mass, amu

    bool operator==(const Molecule&) const = default;
};

/// CH, NO, CO, N2, HCl.
const std::vector<Molecule>& builtin_molecules();

std::optional<Molecule> find_molecule(const std::vector<Molecule>& list, std::string_view name);

/// Reads `name,De_cm,re_angstrom,mu_amu` CSV. '#' starts a comment line.
/// Throws ParseError (with line number) or InvalidParameter (naming the field).
std::vector<Molecule> parse_molecules(std::istream& in);
std::vector<Molecule> load_molecules(const std::string& path);

void write_molecules(std::ostream& out, const std::vector<Molecule>& list);

/// Converts to eV / A and derives q. alpha in 1/A, a and b in eV*A.
std::pair<PotentialParams, ParticleSpec>
to_potential_params(const Molecule& m, double a, double b, double alpha, const UnitConstants& u = {});

} // namespace hgm
