#include "mertensff/real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace mff {

std::string Real::str(std::size_t digits) const {
    if (mpfr_nan_p(x_)) return "nan";
    if (mpfr_inf_p(x_)) return mpfr_sgn(x_) > 0 ? "inf" : "-inf";
    if (digits == 0) {
        // enough decimal digits to round-trip the binary precision
        digits = static_cast<std::size_t>(static_cast<double>(prec()) * 0.30103) + 3;
    }
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%zuRg", digits);
    std::vector<char> buf(digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, x_);
    return std::string(buf.data());
}

} // namespace mff
