#include "hgm/spectrum_table.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <ostream>

#include "hgm/format.hpp"

namespace hgm {

std::optional<double> SpectrumRow::abs_dev() const
{
    if (!energy || !oracle_energy) return std::nullopt;
    return std::abs(*energy - *oracle_energy);
}

bool SpectrumTable::any_ok() const
{
    return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.status == "ok"; });
}

bool SpectrumTable::any_error() const
{
    return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.status != "ok"; });
}

std::optional<double> SpectrumTable::max_abs_dev() const
{
    std::optional<double> worst;
    for (const auto& r : rows)
        if (const auto d = r.abs_dev()) worst = std::max(worst.value_or(0.0), *d);
    return worst;
}

namespace {

std::string opt(const std::optional<double>& v)
{
    return v ? fmt_num(*v) : std::string();
}

std::string opt(const std::optional<int>& v)
{
    return v ? std::to_string(*v) : std::string();
}

} // namespace

void write_nonrel_csv(std::ostream& out, const SpectrumTable& t)
{
    out << "molecule,model,n,l,E_eV,oracle_E_eV,abs_dev_eV,status\n";
    for (const auto& r : t.rows)
        out << r.molecule << ',' << r.model << ',' << r.n << ',' << r.l << ',' << opt(r.energy)
            << ',' << opt(r.oracle_energy) << ',' << opt(r.abs_dev()) << ',' << r.status << '\n';
}

void write_rel_csv(std::ostream& out, const SpectrumTable& t)
{
    out << "molecule,model,n,l,kappa,D,E_eV,residual,cross_check_residual,status\n";
    for (const auto& r : t.rows)
        out << r.molecule << ',' << r.model << ',' << r.n << ',' << r.l << ',' << opt(r.kappa)
            << ',' << opt(r.dimension) << ',' << opt(r.energy) << ',' << opt(r.residual) << ','
            << opt(r.cross_check_residual) << ',' << r.status << '\n';
}

void write_json(std::ostream& out, const SpectrumTable& t)
{
    auto j = nlohmann::ordered_json::array();
    auto put = [](auto& obj, const char* key, const auto& v) {
        if (v)
            obj[key] = *v;
        else
            obj[key] = nullptr;
    };
    for (const auto& r : t.rows) {
        nlohmann::ordered_json row;
        row["molecule"] = r.molecule;
        row["model"] = r.model;
        row["n"] = r.n;
        row["l"] = r.l;
        put(row, "kappa", r.kappa);
        put(row, "D", r.dimension);
        put(row, "E_eV", r.energy);
        put(row, "residual", r.residual);
        put(row, "cross_check_residual", r.cross_check_residual);
        put(row, "oracle_E_eV", r.oracle_energy);
        put(row, "abs_dev_eV", r.abs_dev());
        row["status"] = r.status;
        j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
}

} // namespace hgm
