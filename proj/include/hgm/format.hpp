#pragma once

#include <string>

namespace hgm {

/// Decimal text with 17 significant digits ("%.17g"); "nan" for NaN.
std::string fmt_num(double v);

} // namespace hgm
