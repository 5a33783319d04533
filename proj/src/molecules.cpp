#include "hgm/molecules.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "hgm/error.hpp"
#include "hgm/format.hpp"

namespace hgm {

const std::vector<Molecule>& builtin_molecules()
{
    static const std::vector<Molecule> table{
        {"CH", 31838.08, 1.1198, 0.929931},  {"NO", 64877.06, 1.1508, 7.468441},
        {"CO", 87471.43, 1.1282, 6.860586},  {"N2", 96288.04, 1.0940, 7.003350},
        {"HCl", 37255.00, 1.2746, 0.980105},
    };
    return table;
}

std::optional<Molecule> find_molecule(const std::vector<Molecule>& list, std::string_view name)
{
    for (const auto& m : list)
        if (m.name == name) return m;
    return std::nullopt;
}

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_positive(const std::string& field, const char* name, std::size_t line)
{
    if (field.empty()) throw ParseError(std::string("empty field ") + name, line);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || errno == ERANGE)
        throw ParseError(std::string("field ") + name + " is not a number: '" + field + "'", line);
    if (!(v > 0.0) || !std::isfinite(v))
        throw InvalidParameter("line " + std::to_string(line) + ": field " + name
                               + " must be positive, got " + field);
    return v;
}

} // namespace

std::vector<Molecule> parse_molecules(std::istream& in)
{
    std::vector<Molecule> out;
    std::set<std::string> seen;
    bool header_seen = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto fields = split(t);
        if (!header_seen) {
            if (fields != std::vector<std::string>{"name", "De_cm", "re_angstrom", "mu_amu"})
                throw ParseError("expected header name,De_cm,re_angstrom,mu_amu", lineno);
            header_seen = true;
            continue;
        }
        if (fields.size() != 4)
            throw ParseError("expected 4 fields, got " + std::to_string(fields.size()), lineno);
        Molecule m;
        m.name = fields[0];
        if (m.name.empty()) throw InvalidParameter("line " + std::to_string(lineno) + ": empty name");
        m.De_cm = parse_positive(fields[1], "De_cm", lineno);
        m.re_angstrom = parse_positive(fields[2], "re_angstrom", lineno);
        m.mu_amu = parse_positive(fields[3], "mu_amu", lineno);
        if (!seen.insert(m.name).second)
            throw InvalidParameter("line " + std::to_string(lineno) + ": duplicate molecule "
                                   + m.name);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Molecule> load_molecules(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open molecule file " + path);
    return parse_molecules(in);
}

void write_molecules(std::ostream& out, const std::vector<Molecule>& list)
{
    out << "name,De_cm,re_angstrom,mu_amu\n";
    for (const auto& m : list)
        out << m.name << ',' << fmt_num(m.De_cm) << ',' << fmt_num(m.re_angstrom) << ','
            << fmt_num(m.mu_amu) << '\n';
}

std::pair<PotentialParams, ParticleSpec>
to_potential_params(const Molecule& m, double a, double b, double alpha, const UnitConstants& u)
{
    u.validate();
    const auto p = make_potential(a, b, cm_inverse_to_ev(m.De_cm, u), m.re_angstrom, alpha);
    ParticleSpec part;
    part.mu_energy = amu_to_mass_energy(m.mu_amu, u);
    part.hbar_c = u.hbar_c;
    return {p, part};
}

} // namespace hgm
