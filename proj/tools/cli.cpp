#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "hgm/error.hpp"
#include "hgm/format.hpp"
#include "hgm/oracle.hpp"
#include "hgm/potential.hpp"
#include "hgm/spectra_nonrel.hpp"
#include "hgm/spectra_rel.hpp"
#include "hgm/validation.hpp"

#ifndef HGM_DATA_DIR
#define HGM_DATA_DIR "data"
#endif

namespace hgm::cli {

std::string model_name(Model m)
{
    switch (m) {
    case Model::nonrel: return "nonrel";
    case Model::kg: return "kg";
    case Model::spin: return "dirac-spin";
    case Model::pseudospin: return "dirac-pseudospin";
    }
    return "?";
}

Model parse_model(const std::string& s)
{
    for (auto m : {Model::nonrel, Model::kg, Model::spin, Model::pseudospin})
        if (model_name(m) == s) return m;
    throw InvalidParameter("unknown model '" + s + "'");
}

std::vector<Molecule> selected_molecules(const RunConfig& cfg)
{
    const auto known = cfg.molecule_file.empty() ? builtin_molecules()
                                                 : load_molecules(cfg.molecule_file);
    std::vector<Molecule> out;
    if (!cfg.molecules.empty()) {
        for (const auto& name : cfg.molecules) {
            auto m = find_molecule(known, name);
            if (!m) throw InvalidParameter("unknown molecule '" + name + "'");
            out.push_back(*m);
        }
    } else if (cfg.De_cm && cfg.re && cfg.mu_amu) {
        out.push_back({"custom", *cfg.De_cm, *cfg.re, *cfg.mu_amu});
    } else {
        out = known;
    }
    for (auto& m : out) {
        if (cfg.De_cm) m.De_cm = *cfg.De_cm;
        if (cfg.re) m.re_angstrom = *cfg.re;
        if (cfg.mu_amu) m.mu_amu = *cfg.mu_amu;
    }
    return out;
}

namespace {

std::pair<PotentialParams, ParticleSpec> system_of(const RunConfig& cfg, const Molecule& m)
{
    return to_potential_params(m, cfg.a, cfg.b_sign * cfg.b, cfg.alpha, cfg.units);
}

double require_mass(const RunConfig& cfg)
{
    if (!cfg.mass) throw InvalidParameter(model_name(cfg.model) + " needs --mass");
    if (!(*cfg.mass > 0.0)) throw InvalidParameter("--mass must be positive");
    return *cfg.mass;
}

// orbital label carried by a Dirac state
int spin_l(int kappa) { return kappa > 0 ? kappa : -kappa - 1; }
int pseudospin_l(int kappa) { return kappa > 0 ? kappa - 1 : -kappa; }

} // namespace

SpectrumTable compute_levels(const RunConfig& cfg, const Molecule& m)
{
    const auto [p, part] = system_of(cfg, m);
    if (cfg.n_max < 0 || cfg.l_max < 0)
        throw InvalidParameter("--n-max and --l-max must be non-negative");

    if (cfg.model == Model::nonrel) {
        NonrelTableOptions o;
        o.n_max = cfg.n_max;
        o.l_max = cfg.l_max;
        o.rectangular = cfg.rectangular;
        o.oracle = cfg.oracle;
        o.grid_points = cfg.grid_points;
        o.printed_formula = cfg.formula == "printed";
        o.units = cfg.units;
        return spectrum_table(m.name, p, part, o);
    }

    const double M = require_mass(cfg);
    const RelSystem sys{p, M, cfg.rel_hbar_c};
    SolveOptions so;
    so.tol = cfg.tol;
    so.scan_points = cfg.scan_points;
    so.all_roots = cfg.all_roots;

    SpectrumTable table;
    auto emit = [&](SpectrumRow base, auto&& solve, auto&& ode) {
        try {
            for (const auto& lvl : solve()) {
                SpectrumRow row = base;
                row.energy = lvl.energy;
                row.residual = lvl.residual;
                row.cross_check_residual = lvl.cross_check_residual;
                if (cfg.oracle && !shooting_brackets(ode(), lvl.energy, 1e-8 * M, p.alpha))
                    row.status = "ShootingMismatch";
                table.rows.push_back(row);
            }
        } catch (const NoBoundState&) {
            base.status = "NoBoundState";
            table.rows.push_back(base);
        }
    };

    for (int n = 0; n <= cfg.n_max; ++n) {
        SpectrumRow base;
        base.molecule = m.name;
        base.model = model_name(cfg.model);
        base.n = n;
        if (cfg.model == Model::kg) {
            const int l_top = cfg.rectangular ? cfg.l_max : std::min(n, cfg.l_max);
            for (int l = 0; l <= l_top; ++l) {
                base.l = l;
                base.dimension = cfg.dimension;
                const QuantumNumbers qn{n, l, -1, cfg.dimension};
                emit(base, [&] { return solve_kg_energy(sys, qn, so); },
                     [&] { return kg_equation(p, M, cfg.dimension, l, cfg.rel_hbar_c); });
            }
            continue;
        }
        for (int kappa : cfg.kappa) {
            if (kappa == 0) throw InvalidParameter("kappa must be nonzero");
            base.kappa = kappa;
            if (cfg.model == Model::spin) {
                base.l = spin_l(kappa);
                emit(base, [&] { return solve_dirac_spin(sys, kappa, cfg.cs, n, so); },
                     [&] { return spin_equation(p, M, kappa, cfg.cs, cfg.rel_hbar_c); });
            } else {
                base.l = pseudospin_l(kappa);
                emit(base, [&] { return solve_dirac_pseudospin(sys, kappa, cfg.cps, n, so); },
                     [&] { return pseudospin_equation(p, M, kappa, cfg.cps, cfg.rel_hbar_c); });
            }
        }
    }
    return table;
}

namespace {

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_levels(const RunConfig& cfg, std::ostream& out)
{
    SpectrumTable all;
    for (const auto& m : selected_molecules(cfg)) {
        auto t = compute_levels(cfg, m);
        all.rows.insert(all.rows.end(), t.rows.begin(), t.rows.end());
    }
    if (cfg.format == "json")
        write_json(out, all);
    else if (cfg.model == Model::nonrel)
        write_nonrel_csv(out, all);
    else
        write_rel_csv(out, all);
    if (!all.rows.empty() && !all.any_ok()) return exit_unbound;
    return exit_ok;
}

Molecule single_molecule(const RunConfig& cfg)
{
    RunConfig c = cfg;
    if (c.molecules.empty() && !(c.De_cm && c.re && c.mu_amu)) c.molecules = {"CH"};
    const auto ms = selected_molecules(c);
    if (ms.size() != 1) throw InvalidParameter("select exactly one molecule");
    return ms.front();
}

struct PotentialArgs
{
    double r_min = 0.5;
    double r_max = 10.0;
    int samples = 200;
};

int cmd_potential(const RunConfig& cfg, const PotentialArgs& pa, std::ostream& out)
{
    const auto [p, part] = system_of(cfg, single_molecule(cfg));
    const auto rows = potential_curve(p, pa.r_min, pa.r_max, pa.samples);
    if (cfg.format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            j.push_back({{"r", r.r}, {"V_exact", r.v_exact}, {"V_approx", r.v_approx}});
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << "r,V_exact,V_approx\n";
    for (const auto& r : rows)
        out << fmt_num(r.r) << ',' << fmt_num(r.v_exact) << ',' << fmt_num(r.v_approx) << '\n';
    return exit_ok;
}

struct SweepArgs
{
    std::string param = "a";
    double from = 0.0;
    double to = 5.0;
    int steps = 11;
};

int cmd_sweep(const RunConfig& cfg, const SweepArgs& sa, std::ostream& out, std::ostream& err)
{
    if (sa.steps < 2) throw InvalidParameter("--steps must be at least 2");
    const Molecule base = single_molecule(cfg);

    struct Point
    {
        double value;
        SpectrumRow row;
    };
    std::vector<Point> points;
    for (int i = 0; i < sa.steps; ++i) {
        const double v = sa.from + (sa.to - sa.from) * i / (sa.steps - 1);
        RunConfig c = cfg;
        c.oracle = false;
        Molecule m = base;
        if (sa.param == "alpha") c.alpha = v;
        else if (sa.param == "a") c.a = v;
        else if (sa.param == "b") c.b = v;
        else if (sa.param == "De") m.De_cm = v;
        else if (sa.param == "re") m.re_angstrom = v;
        else throw InvalidParameter("unknown sweep parameter '" + sa.param + "'");
        SpectrumTable t;
        try {
            t = compute_levels(c, m);
        } catch (const InvalidParameter& e) {
            // parameter value outside the model's domain: flag every state
            RunConfig probe = cfg;
            probe.oracle = false;
            for (auto row : compute_levels(probe, base).rows) {
                row.energy.reset();
                row.status = "InvalidParameter";
                t.rows.push_back(row);
            }
        }
        for (const auto& r : t.rows) points.push_back({v, r});
    }

    if (cfg.format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto& pt : points) {
            nlohmann::ordered_json o;
            o["param"] = sa.param;
            o["param_value"] = pt.value;
            o["n"] = pt.row.n;
            o["l"] = pt.row.l;
            o["kappa"] = pt.row.kappa ? nlohmann::ordered_json(*pt.row.kappa) : nullptr;
            o["E_eV"] = pt.row.energy ? nlohmann::ordered_json(*pt.row.energy) : nullptr;
            o["status"] = pt.row.status;
            j.push_back(o);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "param_value,n,l,kappa,E_eV,status\n";
        for (const auto& pt : points) {
            out << fmt_num(pt.value) << ',' << pt.row.n << ',' << pt.row.l << ','
                << (pt.row.kappa ? std::to_string(*pt.row.kappa) : "") << ','
                << (pt.row.energy ? fmt_num(*pt.row.energy) : "") << ',' << pt.row.status
                << '\n';
        }
    }

    // shape report per state on stderr
    std::map<std::tuple<int, int, int>, std::vector<std::pair<double, double>>> curves;
    for (const auto& pt : points)
        if (pt.row.energy)
            curves[{pt.row.n, pt.row.l, pt.row.kappa.value_or(0)}].push_back(
                {pt.value, *pt.row.energy});
    for (const auto& [key, c] : curves) {
        int ups = 0, downs = 0;
        std::optional<double> turn;
        for (std::size_t i = 1; i < c.size(); ++i) {
            const double d = c[i].second - c[i - 1].second;
            const int dir = d > 0 ? 1 : (d < 0 ? -1 : 0);
            if (dir > 0) ++ups;
            if (dir < 0) ++downs;
            if (i >= 2 && !turn) {
                const double prev = c[i - 1].second - c[i - 2].second;
                if (prev * d < 0) turn = c[i - 1].first;
            }
        }
        const auto [n, l, kappa] = key;
        err << "# state n=" << n << " l=" << l;
        if (kappa != 0) err << " kappa=" << kappa;
        if (downs == 0 && ups > 0) err << ": increasing\n";
        else if (ups == 0 && downs > 0) err << ": decreasing\n";
        else if (turn) err << ": non-monotonic, first turning point near " << sa.param << "="
                           << fmt_num(*turn) << "\n";
        else err << ": flat\n";
    }
    return exit_ok;
}

struct ValidateArgs
{
    std::string reference = std::string(HGM_DATA_DIR) + "/table2.csv";
    bool calibrate = false;
    int steps = 51;
};

int cmd_validate(const RunConfig& cfg, const ValidateArgs& va, std::ostream& out)
{
    std::ifstream probe(va.reference);
    if (!probe) throw InvalidParameter("reference file '" + va.reference + "' not found");
    const auto ref = load_reference_levels(va.reference);
    const auto known = cfg.molecule_file.empty() ? builtin_molecules()
                                                 : load_molecules(cfg.molecule_file);
    ValidationSetup setup;
    setup.alpha = cfg.alpha;
    setup.units = cfg.units;
    setup.formula = cfg.formula == "printed" ? EnergyFormula::printed : EnergyFormula::derived;

    out << "# formula: " << cfg.formula << "\n";
    if (va.calibrate) {
        const auto c = calibrate(ref, known, setup, "CH", va.steps);
        const auto q = qualitative_checks(known, c.anchored.a, c.anchored.b, setup);
        write_calibration_report(out, c, q);
        return q.increasing_in_n && q.hcl_l_ordering ? exit_ok : exit_failed;
    }
    const auto rep = score_reference(ref, known, cfg.a, cfg.b_sign * cfg.b, setup);
    const auto q = qualitative_checks(known, cfg.a, cfg.b_sign * cfg.b, setup);
    out << "# energy increases with n at fixed l: " << (q.increasing_in_n ? "yes" : "no") << "\n";
    out << "# HCl E(1,0) < E(1,1): " << (q.hcl_l_ordering ? "yes" : "no") << "\n";
    write_score_report(out, rep);
    return q.increasing_in_n && q.hcl_l_ordering ? exit_ok : exit_failed;
}

struct OracleArgs
{
    std::vector<std::string> models{"nonrel"};
    bool suite = false;
    double tol_nonrel = 5e-4;
};

int cmd_oracle_check(const RunConfig& cfg, const OracleArgs& oa, std::ostream& out,
                     std::ostream& err)
{
    if (oa.models.empty()) throw InvalidParameter("empty model list");
    std::vector<Model> models;
    for (const auto& s : oa.models) models.push_back(parse_model(s));

    bool pass = true;
    out << "model,n,l,E_closed,E_oracle,abs_dev,grid_points,extrapolated\n";
    for (Model model : models) {
        RunConfig c = cfg;
        c.model = model;
        double worst = 0.0;
        bool model_pass = true;
        for (const auto& m : selected_molecules(c)) {
            const auto [p, part] = system_of(c, m);
            if (model == Model::nonrel) {
                for (int l = 0; l <= c.l_max; ++l) {
                    if (l > c.n_max) break;
                    // GridTooCoarse propagates: a forced coarse grid is a usage error
                    const auto o = schrodinger_oracle(p, part, l, c.n_max + 1, c.grid_points);
                    for (int n = l; n <= c.n_max; ++n) {
                        const double e = energy_nonrel(p, part, n, l);
                        const double d = std::abs(e - o[n].value);
                        worst = std::max(worst, d);
                        if (!(d <= oa.tol_nonrel)) model_pass = false;
                        out << "nonrel," << n << ',' << l << ',' << fmt_num(e) << ','
                            << fmt_num(o[n].value) << ',' << fmt_num(d) << ',' << c.grid_points
                            << ",true\n";
                    }
                }
                continue;
            }
            const double M = require_mass(c);
            for (const auto& row : compute_levels(c, m).rows) {
                if (!row.energy) continue;
                CoupledRadialEquation ode =
                    model == Model::kg     ? kg_equation(p, M, c.dimension, row.l, c.rel_hbar_c)
                    : model == Model::spin ? spin_equation(p, M, *row.kappa, c.cs, c.rel_hbar_c)
                                           : pseudospin_equation(p, M, *row.kappa, c.cps,
                                                                 c.rel_hbar_c);
                const double window = 1e-8 * M;
                const auto e_or = shooting_eigenvalue(ode, *row.energy, window, p.alpha);
                const double d = e_or ? std::abs(*e_or - *row.energy) : NAN;
                if (!e_or || !(std::abs(*row.residual) <= 1e-9)) model_pass = false;
                if (e_or) worst = std::max(worst, d);
                out << model_name(model) << ',' << row.n << ',' << row.l << ','
                    << fmt_num(*row.energy) << ',' << (e_or ? fmt_num(*e_or) : "") << ','
                    << (e_or ? fmt_num(d) : "") << ',' << 20001 << ",false\n";
            }
        }
        err << "# " << model_name(model) << ": " << (model_pass ? "PASS" : "FAIL")
            << " (max abs dev " << fmt_num(worst) << " eV)\n";
        pass = pass && model_pass;
    }

    if (oa.suite) {
        const auto results = run_acceptance(err);
        for (const auto& r : results) {
            out << "# " << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.summary << '\n';
            pass = pass && r.pass;
        }
    }
    return pass ? exit_ok : exit_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bound-state spectra of the Hellmann plus generalized Morse potential"};
    app.name("hgm");
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file: hbar_c, cm_inv_to_ev, amu_to_ev, b_sign, rel_hbar_c");

    RunConfig cfg;
    std::string model = "nonrel";
    app.add_option("--model", model, "nonrel | kg | dirac-spin | dirac-pseudospin")
        ->check(CLI::IsMember({"nonrel", "kg", "dirac-spin", "dirac-pseudospin"}));
    app.add_option("--molecule", cfg.molecules, "molecule name(s); default: all");
    app.add_option("--molecule-file", cfg.molecule_file, "CSV name,De_cm,re_angstrom,mu_amu");
    app.add_option("--a", cfg.a, "Coulomb strength a (eV*A)");
    app.add_option("--b", cfg.b, "Yukawa strength b (eV*A)");
    app.add_option("--alpha", cfg.alpha, "screening parameter (1/A)");
    app.add_option("--De-cm", cfg.De_cm, "dissociation energy override (cm^-1)");
    app.add_option("--re", cfg.re, "equilibrium bond length override (A)");
    app.add_option("--mu-amu", cfg.mu_amu, "reduced mass override (amu)");
    app.add_option("--mass", cfg.mass, "rest energy M for relativistic models (eV)");
    app.add_option("--cs", cfg.cs, "spin-symmetry constant C_s (eV)");
    app.add_option("--cps", cfg.cps, "pseudospin-symmetry constant C_ps (eV)");
    app.add_option("--kappa", cfg.kappa, "spin-orbit quantum number(s)");
    app.add_option("--dimension", cfg.dimension, "spatial dimension D (Klein-Gordon)");
    app.add_option("--n-max", cfg.n_max, "highest radial quantum number");
    app.add_option("--l-max", cfg.l_max, "highest orbital quantum number");
    app.add_flag("--rectangular", cfg.rectangular, "all l <= l-max instead of l <= n");
    app.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--oracle", cfg.oracle, "verify each level numerically");
    app.add_option("--grid-points", cfg.grid_points, "finite-difference grid size");
    app.add_option("--tol", cfg.tol, "root tolerance (eV)");
    app.add_option("--scan-points", cfg.scan_points, "root scan resolution");
    app.add_flag("--all-roots", cfg.all_roots, "keep roots of either energy sign");
    app.add_option("--formula", cfg.formula, "nonrel energy expression: derived | printed")
        ->check(CLI::IsMember({"derived", "printed"}));
    auto* units = app.add_option_group("Constants");
    units->add_option("--hbar_c", cfg.units.hbar_c, "eV*A");
    units->add_option("--cm_inv_to_ev", cfg.units.cm_inv_to_ev, "eV per cm^-1");
    units->add_option("--amu_to_ev", cfg.units.amu_to_ev, "eV per amu");
    units->add_option("--b_sign", cfg.b_sign, "sign applied to b")->check(CLI::IsMember({-1.0, 1.0}));
    units->add_option("--rel_hbar_c", cfg.rel_hbar_c, "hbar*c used by the relativistic models");

    auto* levels = app.add_subcommand("levels", "energy levels");
    auto* potential = app.add_subcommand("potential", "potential curve r,V_exact,V_approx");
    auto* sweep = app.add_subcommand("sweep", "levels against one parameter");
    auto* validate = app.add_subcommand("validate", "compare with reference levels");
    auto* oracle = app.add_subcommand("oracle-check", "closed forms against numerical oracles");
    for (auto* s : {levels, potential, sweep, validate, oracle}) s->fallthrough();

    PotentialArgs pa;
    potential->add_option("--r-min", pa.r_min, "A");
    potential->add_option("--r-max", pa.r_max, "A");
    potential->add_option("--samples", pa.samples);

    SweepArgs sa;
    sweep->add_option("--param", sa.param, "alpha | a | b | De | re")
        ->check(CLI::IsMember({"alpha", "a", "b", "De", "re"}));
    sweep->add_option("--from", sa.from);
    sweep->add_option("--to", sa.to);
    sweep->add_option("--steps", sa.steps);

    ValidateArgs va;
    validate->add_option("--reference", va.reference, "CSV molecule,n,l,E_eV");
    validate->add_flag("--calibrate", va.calibrate, "grid-search (a, b) in [0, 5]^2");
    validate->add_option("--steps", va.steps, "grid points per axis");

    OracleArgs oa;
    oracle->add_option("--models", oa.models, "models to check")->expected(0, -1);
    oracle->add_flag("--suite", oa.suite, "also run the full acceptance suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        cfg.model = parse_model(model);
        cfg.units.validate();
        if (*levels) return cmd_levels(cfg, out);
        if (*potential) return cmd_potential(cfg, pa, out);
        if (*sweep) return cmd_sweep(cfg, sa, out, err);
        if (*validate) return cmd_validate(cfg, va, out);
        if (*oracle) return cmd_oracle_check(cfg, oa, out, err);
    } catch (const NoBoundState& e) {
        err << "error: " << e.what() << "\n";
        return exit_unbound;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace hgm::cli
