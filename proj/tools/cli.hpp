#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hgm/molecules.hpp"
#include "hgm/spectrum_table.hpp"
#include "hgm/units.hpp"

namespace hgm::cli {

enum ExitCode
{
    exit_ok = 0,
    exit_failed = 1, ///< a verification criterion failed
    exit_usage = 2,
    exit_unbound = 3, ///< none of the requested states is bound
};

enum class Model
{
    nonrel,
    kg,
    spin,
    pseudospin
};

std::string model_name(Model m);
Model parse_model(const std::string& s);

struct RunConfig
{
    Model model = Model::nonrel;
    std::vector<std::string> molecules; ///< empty: every known molecule
    std::string molecule_file;
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.025;
    std::optional<double> De_cm;
    std::optional<double> re;
    std::optional<double> mu_amu;
    std::optional<double> mass;
    double cs = 0.0;
    double cps = 0.0;
    std::vector<int> kappa{-1};
    int dimension = 3;
    int n_max = 5;
    int l_max = 5;
    bool rectangular = false;
    std::string format = "csv";
    bool oracle = false;
    int grid_points = 20001;
    double tol = 1e-12;
    int scan_points = 2000;
    bool all_roots = false;
    std::string formula = "derived";
    UnitConstants units{};
    double b_sign = 1.0;
    double rel_hbar_c = 1.0;
};

/// Molecules selected by the config, with field overrides applied.
std::vector<Molecule> selected_molecules(const RunConfig& cfg);

/// Levels of one molecule for the configured model.
SpectrumTable compute_levels(const RunConfig& cfg, const Molecule& m);

/// Command-line arguments without the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hgm::cli
