#include "tridiag_hira/dd_real.hpp"

#include <cstdio>

namespace tridiag_hira {

namespace {

DDReal pow10(int e) {
    DDReal result(1.0);
    DDReal base(10.0);
    unsigned m = static_cast<unsigned>(e < 0 ? -e : e);
    while (m != 0) {
        if (m & 1U) result *= base;
        base *= base;
        m >>= 1U;
    }
    return e < 0 ? DDReal(1.0) / result : result;
}

}  // namespace

std::string to_string(const DDReal& x, int digits) {
    if (!isfinite(x)) return std::to_string(x.hi());
    if (x.hi() == 0.0) return "0";
    std::string out = x.hi() < 0.0 ? "-" : "";
    DDReal y = abs(x);
    int e10 = static_cast<int>(std::floor(std::log10(y.hi())));
    y = y / pow10(e10);
    if (y.hi() >= 10.0) {
        y = y / 10.0;
        ++e10;
    } else if (y.hi() < 1.0) {
        y = y * 10.0;
        --e10;
    }
    // Truncating digit extraction; display only.
    for (int i = 0; i < digits; ++i) {
        double d = std::floor(y.hi());
        if (d == y.hi() && y.lo() < 0.0) d -= 1.0;
        if (d < 0.0) d = 0.0;
        if (d > 9.0) d = 9.0;
        out.push_back(static_cast<char>('0' + static_cast<int>(d)));
        if (i == 0) out.push_back('.');
        y = (y - d) * 10.0;
    }
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%+d", e10);
    return out + buf;
}

}  // namespace tridiag_hira
