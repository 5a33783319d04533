#include <doctest.h>

#include <sstream>

#include "hgm/error.hpp"
#include "hgm/molecules.hpp"

using namespace hgm;

TEST_CASE("builtin set")
{
    const auto& m = builtin_molecules();
    REQUIRE(m.size() == 5);
    const auto ch = find_molecule(m, "CH");
    REQUIRE(ch);
    CHECK(ch->De_cm == 31838.08);
    CHECK(ch->re_angstrom == 1.1198);
    CHECK(ch->mu_amu == 0.929931);
    CHECK_FALSE(find_molecule(m, "H2O"));
}

TEST_CASE("CSV round trip")
{
    std::stringstream s;
    write_molecules(s, builtin_molecules());
    CHECK(parse_molecules(s) == builtin_molecules());
}

TEST_CASE("parse errors carry the line number")
{
    std::istringstream bad("name,De_cm,re_angstrom,mu_amu\n# c\nX,1,2\n");
    try {
        parse_molecules(bad);
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    std::istringstream neg("name,De_cm,re_angstrom,mu_amu\nX,1,-2,1\n");
    CHECK_THROWS_AS(parse_molecules(neg), InvalidParameter);
    std::istringstream junk("name,De_cm,re_angstrom,mu_amu\nX,1,abc,1\n");
    CHECK_THROWS_AS(parse_molecules(junk), ParseError);
}

TEST_CASE("conversion to potential parameters")
{
    const auto [p, part] = to_potential_params(builtin_molecules()[0], 1.0, 2.0, 0.025);
    CHECK(p.De == doctest::Approx(31838.08 * 1.239841984e-4).epsilon(1e-15));
    CHECK(p.q == doctest::Approx(0.028390542455857863).epsilon(1e-15));
    CHECK(p.a == 1.0);
    CHECK(p.b == 2.0);
    CHECK(part.mu_energy == doctest::Approx(0.929931 * 931.49410242e6).epsilon(1e-15));
}
