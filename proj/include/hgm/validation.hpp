#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hgm/molecules.hpp"
#include "hgm/units.hpp"

namespace hgm {

struct ReferenceLevel
{
    std::string molecule;
    int n = 0;
    int l = 0;
    double energy = 0.0;
};

/// CSV `molecule,n,l,E_eV` with '#' comment lines.
std::vector<ReferenceLevel> parse_reference_levels(std::istream& in);
std::vector<ReferenceLevel> load_reference_levels(const std::string& path);

enum class EnergyFormula
{
    derived, ///< solves the approximated radial equation
    printed, ///< +De q^2/alpha^2 variant
};

struct ScoredLevel
{
    ReferenceLevel ref;
    std::optional<double> model; ///< empty when the level is unbound
    std::optional<double> deviation() const;
};

struct ScoreReport
{
    double a = 0.0;
    double b = 0.0;
    std::vector<ScoredLevel> levels;
    int missing = 0; ///< reference rows without a model value
    double max_abs = 0.0;
    double mean_abs = 0.0;
};

struct ValidationSetup
{
    double alpha = 0.025;
    EnergyFormula formula = EnergyFormula::derived;
    UnitConstants units{};
};

/// Compares every reference row with the model at (a, b). Molecules are looked
/// up by name in `molecules`; unknown names throw InvalidParameter.
ScoreReport score_reference(const std::vector<ReferenceLevel>& ref,
                            const std::vector<Molecule>& molecules, double a, double b,
                            const ValidationSetup& setup);

struct CalibrationResult
{
    std::string anchor;   ///< molecule whose (0,0) level is matched
    double anchor_dev = 0.0;
    ScoreReport anchored; ///< all rows scored at the anchored (a, b)
    ScoreReport best_max; ///< grid point with the smallest max deviation over all rows
    double tolerance = 5e-3;
    bool reproduced() const;
};

/// Grid search over (a, b) in [lo, hi]^2 with `steps` points per axis.
CalibrationResult calibrate(const std::vector<ReferenceLevel>& ref,
                            const std::vector<Molecule>& molecules, const ValidationSetup& setup,
                            const std::string& anchor = "CH", int steps = 51, double lo = 0.0,
                            double hi = 5.0);

struct QualitativeChecks
{
    bool increasing_in_n = true;       ///< E(n+1, l) > E(n, l) for every molecule and l
    bool hcl_l_ordering = true;        ///< E(1,0) < E(1,1) for HCl
    std::vector<std::string> failures; ///< human-readable violations
};

/// Trend checks on model levels n <= n_max at (a, b).
QualitativeChecks qualitative_checks(const std::vector<Molecule>& molecules, double a, double b,
                                     const ValidationSetup& setup, int n_max = 5);

/// Plain-text report; every line starts with '#' except the CSV block of
/// `molecule,n,l,E_ref,E_model,deviation`.
void write_calibration_report(std::ostream& out, const CalibrationResult& r,
                              const QualitativeChecks& q);
void write_score_report(std::ostream& out, const ScoreReport& r);

} // namespace hgm
