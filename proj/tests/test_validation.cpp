#include <doctest.h>

#include <sstream>

#include "hgm/error.hpp"
#include "hgm/molecules.hpp"
#include "hgm/spectra_nonrel.hpp"
#include "hgm/validation.hpp"

using namespace hgm;

namespace {

// reference rows generated by the model itself at a known (a, b)
std::vector<ReferenceLevel> synthetic(double a, double b)
{
    std::vector<ReferenceLevel> out;
    for (const auto& m : builtin_molecules()) {
        const auto [p, part] = to_potential_params(m, a, b, 0.025);
        for (int n = 0; n <= 2; ++n)
            for (int l = 0; l <= n; ++l) out.push_back({m.name, n, l, energy_nonrel(p, part, n, l)});
    }
    return out;
}

} // namespace

TEST_CASE("reference CSV parsing")
{
    std::istringstream in("# comment\nmolecule,n,l,E_eV\nCH,0,0,-2.5\nHCl,1,1,0.25\n");
    const auto ref = parse_reference_levels(in);
    REQUIRE(ref.size() == 2);
    CHECK(ref[1].molecule == "HCl");
    CHECK(ref[1].l == 1);
    CHECK(ref[1].energy == 0.25);

    std::istringstream bad("molecule,n,l,E_eV\nCH,0,0,-2.5\nCH,x,0,1\n");
    try {
        parse_reference_levels(bad);
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("scoring a self-generated table gives zero deviation")
{
    const auto ref = synthetic(2.0, 1.0);
    const auto rep = score_reference(ref, builtin_molecules(), 2.0, 1.0, {});
    CHECK(rep.missing == 0);
    CHECK(rep.max_abs < 1e-12);
    CHECK_THROWS_AS(score_reference({{"XY", 0, 0, 1.0}}, builtin_molecules(), 0, 0, {}),
                    InvalidParameter);
}

TEST_CASE("calibration recovers a known (a, b)")
{
    const auto cal = calibrate(synthetic(2.0, 1.0), builtin_molecules(), {}, "CH", 11, 0.0, 5.0);
    CHECK(cal.reproduced());
    CHECK(cal.best_max.a == doctest::Approx(2.0));
    CHECK(cal.best_max.b == doctest::Approx(1.0));
}

TEST_CASE("trend checks hold for the model")
{
    const auto q = qualitative_checks(builtin_molecules(), 0.0, 0.0, {});
    CHECK(q.increasing_in_n);
    CHECK(q.hcl_l_ordering);
    CHECK(q.failures.empty());
}
