#include <doctest.h>

#include <cmath>
#include <optional>

#include "hgm/error.hpp"
#include "hgm/rootfind.hpp"

using namespace hgm;

TEST_CASE("scan finds every sign change in order")
{
    const PartialFunction f = [](double x) -> std::optional<double> { return std::sin(x); };
    const auto br = scan_brackets(f, 0.5, 10.0, 200);
    REQUIRE(br.size() == 3);
    for (int k = 0; k < 3; ++k) {
        const auto r = bisect(f, br[k], 1e-13);
        CHECK(r.root == doctest::Approx((k + 1) * M_PI).epsilon(1e-13));
    }
}

TEST_CASE("undefined points break adjacency")
{
    const PartialFunction f = [](double x) -> std::optional<double> {
        if (std::abs(x) < 0.3) return std::nullopt;
        return x;
    };
    CHECK(scan_brackets(f, -1.0, 1.0, 101).empty());
}

TEST_CASE("bisection preconditions")
{
    const PartialFunction f = [](double x) -> std::optional<double> { return x * x + 1.0; };
    CHECK_THROWS_AS(bisect(f, {0.0, 1.0, 1.0, 2.0}, 1e-12), InvalidParameter);
    const PartialFunction g = [](double x) -> std::optional<double> { return x - 0.3; };
    CHECK_THROWS_AS(bisect(g, {0.0, 1.0, -0.3, 0.7}, 1e-300, 5), NonConvergence);
}
