#pragma once
// J_0(x)..J_n(x) by the classical backward recurrence and, equivalently, as
// the middle coordinates of an eigenvector of the (2N+1)-dimensional matrix
// with A_j = 2 + 2j/x at lambda = 2 + 2(N+1)/x.

#include <cstddef>
#include <vector>

#include "tridiag_hira/dd_real.hpp"
#include "tridiag_hira/scaled.hpp"

namespace tridiag_hira {

template <class Real>
struct BesselRunT {
    double x = 0.0;
    std::size_t n = 0;
    std::size_t N = 0;
    std::vector<Real> values;  // J_0(x)..J_n(x)
    // Backward: d = sqrt(J~_0^2 + 2 sum J~_k^2). Eigenvector route: the
    // eigenvector normalizer.
    ScaledValue<Real> normalizer;
    bool fallback = false;  // eigenvector route fell back to the simplified algorithm
};
using BesselRun = BesselRunT<double>;

// Start from J~_N = 1, J~_{N+1} = 0 and recur J~_{k-1} = (2k/x) J~_k - J~_{k+1}
// down to k = 1. The full-line sum J_0^2 + 2 sum_k J_k^2 = 1 fixes the scale.
// Requires N > n and N > x.
template <class Real>
BesselRunT<Real> bessel_backward(double x, std::size_t n, std::size_t N);

BesselRun bessel_via_hira(double x, std::size_t n, std::size_t N);

// N = max(n, ceil(x)) + max(15, ceil(1.9 x^{1/3}) + 50), then raised until
// J_k for k = 0, 1, 2, n from N and N+20 agree to 13 digits (absolute,
// relative to the peak, for orders below x where J_k may sit near a zero).
std::size_t choose_N(double x, std::size_t n);

// Significant digits to which a and b agree: -log10(|a-b|/|b|), capped at 17.
double agreement_digits(double a, double b);

}  // namespace tridiag_hira
