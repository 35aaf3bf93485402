#pragma once
// Values carried as mantissa * 2^exponent so that recurrences spanning
// hundreds of orders of magnitude stay inside the binary64 range.

#include <cmath>
#include <cstddef>
#include <vector>

#include "tridiag_hira/dd_real.hpp"

namespace tridiag_hira {

// Mantissas are renormalized once they leave [2^-kRescaleBits, 2^kRescaleBits].
inline constexpr int kRescaleBits = 512;

template <class Real>
struct ScaledValue {
    Real mantissa{};
    int exponent = 0;

    Real value() const {
        using std::ldexp;
        return ldexp(mantissa, exponent);
    }
    // mantissa rescaled to a different exponent (may underflow to zero).
    Real at_exponent(int e) const {
        using std::ldexp;
        return ldexp(mantissa, exponent - e);
    }
};

// Same value with the mantissa in [1, 2) in magnitude; zero and non-finite
// mantissas pass through.
template <class Real>
ScaledValue<Real> normalized(const ScaledValue<Real>& v) {
    using std::isfinite;
    using std::ldexp;
    if (v.mantissa == Real(0.0) || !isfinite(to_double(v.mantissa))) return v;
    const int e = exponent_of(v.mantissa);
    return {ldexp(v.mantissa, -e), v.exponent + e};
}

// Operands are normalized first so that mantissas near the rescale bound
// cannot overflow in the product.
template <class Real>
ScaledValue<Real> operator*(const ScaledValue<Real>& a, const ScaledValue<Real>& b) {
    const ScaledValue<Real> x = normalized(a), y = normalized(b);
    return {x.mantissa * y.mantissa, x.exponent + y.exponent};
}

// Coordinates first..last (1-based, inclusive), each with its own exponent.
template <class Real>
class ScaledSequence {
public:
    ScaledSequence() = default;
    ScaledSequence(std::size_t first, std::size_t last)
        : first_(first), mantissa_(last + 1 - first), exponent_(last + 1 - first, 0) {}

    std::size_t first() const { return first_; }
    std::size_t last() const { return first_ + mantissa_.size() - 1; }
    std::size_t size() const { return mantissa_.size(); }
    bool contains(std::size_t j) const { return j >= first_ && j <= last(); }

    const Real& mantissa(std::size_t j) const { return mantissa_[j - first_]; }
    int exponent(std::size_t j) const { return exponent_[j - first_]; }
    ScaledValue<Real> at(std::size_t j) const { return {mantissa(j), exponent(j)}; }
    Real value(std::size_t j) const { return at(j).value(); }

    void set(std::size_t j, const Real& m, int e) {
        mantissa_[j - first_] = m;
        exponent_[j - first_] = e;
    }
    void set(std::size_t j, const ScaledValue<Real>& v) { set(j, v.mantissa, v.exponent); }

    const std::vector<Real>& mantissas() const { return mantissa_; }
    const std::vector<int>& exponents() const { return exponent_; }

private:
    std::size_t first_ = 1;
    std::vector<Real> mantissa_;
    std::vector<int> exponent_;
};

// Sum of nonnegative scaled terms, aligned to the largest exponent.
template <class Real>
class ScaledAccumulator {
public:
    void add(const Real& m, int e) {
        if (m == Real(0.0)) return;
        const ScaledValue<Real> v = normalized(ScaledValue<Real>{m, e});
        terms_.push_back(v);
        if (v.exponent > top_) top_ = v.exponent;
    }
    void add(const ScaledValue<Real>& v) { add(v.mantissa, v.exponent); }

    ScaledValue<Real> total() const {
        Real sum(0.0);
        for (const auto& t : terms_) sum += t.at_exponent(top_);
        return {sum, terms_.empty() ? 0 : top_};
    }

private:
    std::vector<ScaledValue<Real>> terms_;
    int top_ = -(1 << 30);
};

// Square root with an even exponent split.
template <class Real>
ScaledValue<Real> scaled_sqrt(ScaledValue<Real> v) {
    using std::sqrt;
    v = normalized(v);
    if (v.exponent % 2 != 0) {
        v.mantissa = v.mantissa * 2.0;
        v.exponent -= 1;
    }
    return {sqrt(v.mantissa), v.exponent / 2};
}

}  // namespace tridiag_hira
