#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hgm {

/// One computed level. Optional fields stay empty when not applicable.
struct SpectrumRow
{
    std::string molecule;
    std::string model; ///< nonrel | kg | dirac-spin | dirac-pseudospin
    int n = 0;
    int l = 0;
    std::optional<int> kappa;
    std::optional<int> dimension;
    std::optional<double> energy;
    std::optional<double> residual;
    std::optional<double> cross_check_residual;
    std::optional<double> oracle_energy;
    std::string status = "ok"; ///< "ok" or the error kind

    std::optional<double> abs_dev() const;
};

struct SpectrumTable
{
    std::vector<SpectrumRow> rows;

    bool any_ok() const;
    bool any_error() const;
    std::optional<double> max_abs_dev() const;
};

/// molecule,model,n,l,E_eV,oracle_E_eV,abs_dev_eV,status
void write_nonrel_csv(std::ostream& out, const SpectrumTable& t);

/// molecule,model,n,l,kappa,D,E_eV,residual,cross_check_residual,status
void write_rel_csv(std::ostream& out, const SpectrumTable& t);

/// Array of row objects; absent values are null.
void write_json(std::ostream& out, const SpectrumTable& t);

} // namespace hgm
