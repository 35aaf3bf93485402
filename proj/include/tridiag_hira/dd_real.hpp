#pragma once
// Double-double arithmetic: a value is the unevaluated sum hi + lo of two
// binary64 numbers with |lo| <= ulp(hi)/2, giving roughly 31 decimal digits.
//
// The kernels follow Joldes, Muller and Popescu, "Tight and rigorous error
// bounds for basic building blocks of double-word arithmetic" (2017): the
// accurate sum (Alg. 6), the fma-based products (Alg. 9 and 12) and the
// division of Alg. 17.

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace tridiag_hira {

namespace eft {

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

// Requires |a| >= |b| (or a == 0).
inline void fast_two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    e = b - (s - a);
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

}  // namespace eft

class DDReal {
public:
    constexpr DDReal() = default;
    constexpr DDReal(double x) : hi_(x), lo_(0.0) {}  // NOLINT: implicit by design
    constexpr DDReal(int x) : hi_(static_cast<double>(x)), lo_(0.0) {}  // NOLINT
    constexpr DDReal(long x) : hi_(static_cast<double>(x)), lo_(0.0) {}  // NOLINT
    constexpr DDReal(long long x) : hi_(static_cast<double>(x)), lo_(0.0) {}  // NOLINT
    constexpr DDReal(unsigned long x) : hi_(static_cast<double>(x)), lo_(0.0) {}  // NOLINT

    // Builds from an arbitrary pair, renormalizing so the invariant holds.
    static DDReal from_pair(double a, double b) {
        DDReal r;
        eft::two_sum(a, b, r.hi_, r.lo_);
        return r;
    }

    constexpr double hi() const { return hi_; }
    constexpr double lo() const { return lo_; }

    friend DDReal operator-(const DDReal& a) { return raw(-a.hi_, -a.lo_); }

    friend DDReal operator+(const DDReal& x, const DDReal& y) {
        double sh, sl, th, tl;
        eft::two_sum(x.hi_, y.hi_, sh, sl);
        eft::two_sum(x.lo_, y.lo_, th, tl);
        double vh, vl;
        eft::fast_two_sum(sh, sl + th, vh, vl);
        DDReal z;
        eft::fast_two_sum(vh, tl + vl, z.hi_, z.lo_);
        return z;
    }
    friend DDReal operator+(const DDReal& x, double y) {
        double s, t;
        eft::two_sum(x.hi_, y, s, t);
        DDReal z;
        eft::fast_two_sum(s, x.lo_ + t, z.hi_, z.lo_);
        return z;
    }
    friend DDReal operator+(double x, const DDReal& y) { return y + x; }

    friend DDReal operator-(const DDReal& x, const DDReal& y) { return x + (-y); }
    friend DDReal operator-(const DDReal& x, double y) { return x + (-y); }
    friend DDReal operator-(double x, const DDReal& y) { return (-y) + x; }

    friend DDReal operator*(const DDReal& x, const DDReal& y) {
        double ch, cl1;
        eft::two_prod(x.hi_, y.hi_, ch, cl1);
        const double tl0 = x.lo_ * y.lo_;
        const double tl1 = std::fma(x.hi_, y.lo_, tl0);
        const double cl2 = std::fma(x.lo_, y.hi_, tl1);
        DDReal z;
        eft::fast_two_sum(ch, cl1 + cl2, z.hi_, z.lo_);
        return z;
    }
    friend DDReal operator*(const DDReal& x, double y) {
        double ch, cl1;
        eft::two_prod(x.hi_, y, ch, cl1);
        const double cl3 = std::fma(x.lo_, y, cl1);
        DDReal z;
        eft::fast_two_sum(ch, cl3, z.hi_, z.lo_);
        return z;
    }
    friend DDReal operator*(double x, const DDReal& y) { return y * x; }

    friend DDReal operator/(const DDReal& x, const DDReal& y) {
        const double th = x.hi_ / y.hi_;
        const DDReal r = y * th;
        const double ph = x.hi_ - r.hi_;
        const double dl = x.lo_ - r.lo_;
        const double tl = (ph + dl) / y.hi_;
        DDReal z;
        eft::fast_two_sum(th, tl, z.hi_, z.lo_);
        return z;
    }
    friend DDReal operator/(const DDReal& x, double y) { return x / DDReal(y); }
    friend DDReal operator/(double x, const DDReal& y) { return DDReal(x) / y; }

    DDReal& operator+=(const DDReal& y) { return *this = *this + y; }
    DDReal& operator-=(const DDReal& y) { return *this = *this - y; }
    DDReal& operator*=(const DDReal& y) { return *this = *this * y; }
    DDReal& operator/=(const DDReal& y) { return *this = *this / y; }

    friend bool operator==(const DDReal& a, const DDReal& b) {
        return a.hi_ == b.hi_ && a.lo_ == b.lo_;
    }
    friend std::partial_ordering operator<=>(const DDReal& a, const DDReal& b) {
        if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
        return a.lo_ <=> b.lo_;
    }

private:
    static constexpr DDReal raw(double h, double l) {
        DDReal r;
        r.hi_ = h;
        r.lo_ = l;
        return r;
    }

    double hi_ = 0.0;
    double lo_ = 0.0;
};

inline DDReal abs(const DDReal& x) { return x.hi() < 0.0 ? -x : x; }
inline DDReal fabs(const DDReal& x) { return abs(x); }

inline DDReal ldexp(const DDReal& x, int e) {
    return DDReal::from_pair(std::ldexp(x.hi(), e), std::ldexp(x.lo(), e));
}

// One Newton correction on the binary64 root.
inline DDReal sqrt(const DDReal& a) {
    if (a.hi() < 0.0) throw std::domain_error("dd sqrt of a negative value");
    if (a.hi() == 0.0) return DDReal(0.0);
    const double x = std::sqrt(a.hi());
    double p, e;
    eft::two_prod(x, x, p, e);
    const DDReal r = (a - p) - e;
    return DDReal::from_pair(x, r.hi() / (2.0 * x));
}

inline bool isfinite(double x) { return std::isfinite(x); }
inline bool isfinite(const DDReal& x) { return std::isfinite(x.hi()) && std::isfinite(x.lo()); }
inline bool signbit(const DDReal& x) { return std::signbit(x.hi()); }

inline double to_double(double x) { return x; }
inline double to_double(const DDReal& x) { return x.hi() + x.lo(); }

// Order-of-magnitude helpers shared by the templated recurrences.
inline int exponent_of(double x) { return std::ilogb(x); }
inline int exponent_of(const DDReal& x) { return std::ilogb(x.hi()); }

enum class DdOp { add, sub, mul, div, sqrt };

// Checked entry point: domain errors are reported instead of producing inf/nan.
inline DDReal dd_arith(DdOp op, const DDReal& a, const DDReal& b = DDReal()) {
    switch (op) {
        case DdOp::add: return a + b;
        case DdOp::sub: return a - b;
        case DdOp::mul: return a * b;
        case DdOp::div:
            if (b.hi() == 0.0) throw std::domain_error("dd division by zero");
            return a / b;
        case DdOp::sqrt: return sqrt(a);
    }
    throw std::invalid_argument("unknown dd operation");
}

inline std::partial_ordering dd_compare(const DDReal& a, const DDReal& b) { return a <=> b; }

// Decimal rendering with `digits` significant digits (display only).
std::string to_string(const DDReal& x, int digits = 32);

template <class Real>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr double unit_roundoff = 0x1p-53;
    static constexpr const char* name = "binary64";
};

template <>
struct ScalarTraits<DDReal> {
    static constexpr double unit_roundoff = 0x1p-106;
    static constexpr const char* name = "double-double";
};

}  // namespace tridiag_hira
