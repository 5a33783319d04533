// One PASS/FAIL line per acceptance criterion; details on stderr.
#include <iostream>

#include "acceptance.hpp"

int main()
{
    bool all = true;
    for (const auto& r : hgm::cli::run_acceptance(std::cerr)) {
        std::cout << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << "  " << r.summary << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
