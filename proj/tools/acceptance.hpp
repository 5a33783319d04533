#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgm::cli {

struct CriterionResult
{
    std::string id; ///< "AC-1" ... "AC-8"
    bool pass = false;
    std::string summary;
};

/// Runs every acceptance criterion; details go to `log`.
std::vector<CriterionResult> run_acceptance(std::ostream& log);

CriterionResult ac1_oracle_nonrel(std::ostream& log, double ab);
CriterionResult ac3_relativistic_residuals(std::ostream& log);
CriterionResult ac4_identities(std::ostream& log);
CriterionResult ac5_special_functions(std::ostream& log);
CriterionResult ac6_normalization(std::ostream& log);
CriterionResult ac7_reference_table(std::ostream& log);
CriterionResult ac8_box(std::ostream& log);

/// Independent norm check: composite Gauss-Legendre in s = e^{-alpha r}.
double norm_in_s(double omega, double phi_exp, int n, double alpha, double log_norm);

} // namespace hgm::cli
