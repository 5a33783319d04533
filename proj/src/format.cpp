#include "hgm/format.hpp"

#include <cmath>
#include <cstdio>

namespace hgm {

std::string fmt_num(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace hgm
