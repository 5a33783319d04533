#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using hgm::cli::run;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("levels CSV")
{
    const auto r = call({"levels", "--molecule", "CH", "--n-max", "1", "--l-max", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("molecule,model,n,l,E_eV,oracle_E_eV,abs_dev_eV,status\n", 0) == 0);
    CHECK(r.out.find("CH,nonrel,1,0,0.2446917449359") != std::string::npos);
}

TEST_CASE("negative kappa values parse")
{
    const auto r = call({"levels", "--model", "dirac-spin", "--mass", "100", "--kappa", "-1", "2",
                         "--molecule", "CH", "--n-max", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",-1,") != std::string::npos);
    CHECK(r.out.find(",2,") != std::string::npos);
}

TEST_CASE("JSON output")
{
    const auto r = call({"levels", "--molecule", "HCl", "--n-max", "0", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"E_eV\"") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(call({"levels", "--bogus"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"levels", "--model", "kg", "--molecule", "CH"}).code == 2); // needs --mass
    CHECK(call({"levels", "--molecule", "XY"}).code == 2);
    CHECK(call({"levels", "--molecule", "CH", "--alpha", "50"}).code == 3);
}

TEST_CASE("potential and sweep")
{
    const auto p = call({"potential", "--molecule", "CH", "--samples", "3"});
    CHECK(p.code == 0);
    CHECK(p.out.rfind("r,V_exact,V_approx\n", 0) == 0);
    const auto s = call({"sweep", "--molecule", "CH", "--param", "alpha", "--from", "0.02", "--to",
                         "0.03", "--steps", "3", "--n-max", "0", "--l-max", "0"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("param_value,n,l,kappa,E_eV,status\n", 0) == 0);
}
