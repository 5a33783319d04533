#include "hgm/validation.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hgm/error.hpp"
#include "hgm/format.hpp"
#include "hgm/spectra_nonrel.hpp"

namespace hgm {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    return out;
}

double energy_of(const PotentialParams& p, const ParticleSpec& part, int n, int l,
                 EnergyFormula f)
{
    return f == EnergyFormula::printed ? energy_nonrel_printed(p, part, n, l)
                                       : energy_nonrel(p, part, n, l);
}

const Molecule& lookup(const std::vector<Molecule>& molecules, const std::string& name)
{
    for (const auto& m : molecules)
        if (m.name == name) return m;
    throw InvalidParameter("unknown molecule '" + name + "'");
}

} // namespace

std::vector<ReferenceLevel> parse_reference_levels(std::istream& in)
{
    std::vector<ReferenceLevel> out;
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto cells = split(t);
        if (!header) {
            if (cells != std::vector<std::string>{"molecule", "n", "l", "E_eV"})
                throw ParseError("expected header molecule,n,l,E_eV", lineno);
            header = true;
            continue;
        }
        if (cells.size() != 4) throw ParseError("expected 4 fields", lineno);
        ReferenceLevel r;
        r.molecule = cells[0];
        try {
            std::size_t pos = 0;
            r.n = std::stoi(cells[1], &pos);
            if (pos != cells[1].size()) throw std::invalid_argument("n");
            r.l = std::stoi(cells[2], &pos);
            if (pos != cells[2].size()) throw std::invalid_argument("l");
            r.energy = std::stod(cells[3], &pos);
            if (pos != cells[3].size()) throw std::invalid_argument("E");
        } catch (const std::exception&) {
            throw ParseError("malformed number", lineno);
        }
        if (r.molecule.empty() || r.n < 0 || r.l < 0)
            throw ParseError("invalid molecule or quantum numbers", lineno);
        out.push_back(r);
    }
    return out;
}

std::vector<ReferenceLevel> load_reference_levels(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open reference file '" + path + "'");
    return parse_reference_levels(in);
}

std::optional<double> ScoredLevel::deviation() const
{
    if (!model) return std::nullopt;
    return *model - ref.energy;
}

ScoreReport score_reference(const std::vector<ReferenceLevel>& ref,
                            const std::vector<Molecule>& molecules, double a, double b,
                            const ValidationSetup& setup)
{
    ScoreReport rep;
    rep.a = a;
    rep.b = b;
    double sum = 0.0;
    int counted = 0;
    std::map<std::string, std::pair<PotentialParams, ParticleSpec>> cache;
    for (const auto& r : ref) {
        auto it = cache.find(r.molecule);
        if (it == cache.end())
            it = cache
                     .emplace(r.molecule, to_potential_params(lookup(molecules, r.molecule), a, b,
                                                              setup.alpha, setup.units))
                     .first;
        const auto& [p, part] = it->second;
        ScoredLevel s;
        s.ref = r;
        s.model = energy_of(p, part, r.n, r.l, setup.formula);
        if (setup.formula == EnergyFormula::derived) {
            const auto nu = nonrel_coefficients(p, part, *s.model, r.l).leading_exponent(r.n);
            if (!nu || !(*nu > 0.0)) s.model.reset();
        }
        rep.levels.push_back(s);
        if (!s.model) {
            ++rep.missing;
            continue;
        }
        const double d = std::abs(*s.deviation());
        rep.max_abs = std::max(rep.max_abs, d);
        sum += d;
        ++counted;
    }
    rep.mean_abs = counted ? sum / counted : 0.0;
    return rep;
}

bool CalibrationResult::reproduced() const
{
    return anchored.missing == 0 && anchored.max_abs <= tolerance;
}

CalibrationResult calibrate(const std::vector<ReferenceLevel>& ref,
                            const std::vector<Molecule>& molecules, const ValidationSetup& setup,
                            const std::string& anchor, int steps, double lo, double hi)
{
    if (steps < 2) throw InvalidParameter("calibration grid needs at least 2 steps");
    if (!(lo < hi)) throw InvalidParameter("calibration range must satisfy lo < hi");
    const ReferenceLevel* target = nullptr;
    for (const auto& r : ref)
        if (r.molecule == anchor && r.n == 0 && r.l == 0) target = &r;
    if (!target) throw InvalidParameter("reference has no (0,0) row for " + anchor);
    const Molecule& m = lookup(molecules, anchor);

    CalibrationResult out;
    out.anchor = anchor;
    double best_anchor = INFINITY, best_a = lo, best_b = lo;
    double best_max = INFINITY;
    const double h = (hi - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) {
            const double a = lo + i * h, b = lo + j * h;
            const auto [p, part] = to_potential_params(m, a, b, setup.alpha, setup.units);
            const double dev = std::abs(energy_of(p, part, 0, 0, setup.formula) - target->energy);
            if (dev < best_anchor) {
                best_anchor = dev;
                best_a = a;
                best_b = b;
            }
            auto rep = score_reference(ref, molecules, a, b, setup);
            if (rep.max_abs < best_max) {
                best_max = rep.max_abs;
                out.best_max = std::move(rep);
            }
        }
    }
    out.anchor_dev = best_anchor;
    out.anchored = score_reference(ref, molecules, best_a, best_b, setup);
    return out;
}

QualitativeChecks qualitative_checks(const std::vector<Molecule>& molecules, double a, double b,
                                     const ValidationSetup& setup, int n_max)
{
    QualitativeChecks q;
    for (const auto& m : molecules) {
        const auto [p, part] = to_potential_params(m, a, b, setup.alpha, setup.units);
        for (int l = 0; l <= n_max; ++l) {
            for (int n = l; n < n_max; ++n) {
                const double e0 = energy_of(p, part, n, l, setup.formula);
                const double e1 = energy_of(p, part, n + 1, l, setup.formula);
                if (!(e1 > e0)) {
                    q.increasing_in_n = false;
                    q.failures.push_back(m.name + ": E(" + std::to_string(n + 1) + ","
                                         + std::to_string(l) + ") <= E(" + std::to_string(n)
                                         + "," + std::to_string(l) + ")");
                }
            }
        }
        if (m.name == "HCl") {
            const double e10 = energy_of(p, part, 1, 0, setup.formula);
            const double e11 = energy_of(p, part, 1, 1, setup.formula);
            if (!(e10 < e11)) {
                q.hcl_l_ordering = false;
                q.failures.push_back("HCl: E(1,0) >= E(1,1)");
            }
        }
    }
    return q;
}

void write_score_report(std::ostream& out, const ScoreReport& r)
{
    out << "# a_eVA=" << fmt_num(r.a) << " b_eVA=" << fmt_num(r.b) << "\n";
    out << "# rows=" << r.levels.size() << " missing=" << r.missing
        << " max_abs_dev_eV=" << fmt_num(r.max_abs) << " mean_abs_dev_eV=" << fmt_num(r.mean_abs)
        << "\n";
    out << "molecule,n,l,E_ref,E_model,deviation\n";
    for (const auto& s : r.levels) {
        out << s.ref.molecule << ',' << s.ref.n << ',' << s.ref.l << ',' << fmt_num(s.ref.energy)
            << ',' << (s.model ? fmt_num(*s.model) : "") << ','
            << (s.model ? fmt_num(*s.deviation()) : "") << '\n';
    }
}

void write_calibration_report(std::ostream& out, const CalibrationResult& r,
                              const QualitativeChecks& q)
{
    out << "# calibration anchor: " << r.anchor << " (0,0), |dev| = " << fmt_num(r.anchor_dev)
        << " eV\n";
    out << "# outcome: "
        << (r.reproduced() ? "reproduced within tolerance"
                           : "not reproducible; best calibration and residuals follow")
        << " (tol " << fmt_num(r.tolerance) << " eV)\n";
    out << "# best max-deviation grid point: a_eVA=" << fmt_num(r.best_max.a)
        << " b_eVA=" << fmt_num(r.best_max.b) << " max_abs_dev_eV=" << fmt_num(r.best_max.max_abs)
        << "\n";
    out << "# energy increases with n at fixed l: " << (q.increasing_in_n ? "yes" : "no") << "\n";
    out << "# HCl E(1,0) < E(1,1): " << (q.hcl_l_ordering ? "yes" : "no") << "\n";
    for (const auto& f : q.failures) out << "# violation: " << f << "\n";
    write_score_report(out, r.anchored);
}

} // namespace hgm
