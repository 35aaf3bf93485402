#pragma once
// Matrix-vector products and Sturm-sequence counting for the matrix class.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tridiag_hira/profile.hpp"

namespace tridiag_hira {

// M v with off-diagonals 1; `diag` holds A_1..A_n.
template <class Real>
std::vector<Real> apply(std::span<const Real> diag, std::span<const Real> v);

std::vector<double> apply(const TridiagMatrix& M, std::span<const double> v);

// max_j |(M v - lambda v)_j|
double residual_inf(const TridiagMatrix& M, double lambda, std::span<const double> v);

struct SturmScan {
    double sigma = 0.0;
    // Number of sign agreements in p_0(sigma)..p_n(sigma), which equals the
    // number of eigenvalues strictly greater than sigma.
    std::size_t agreements = 0;
    // Sign of p_j(sigma) for j = 0..n, each +1 or -1.
    std::vector<int> signs;
};

// Count only, via the ratio recurrence q_j = (A_j - sigma) - 1/q_{j-1}.
// A zero q_j is replaced by -tiny, i.e. given the sign opposite to its
// predecessor.
template <class Real>
std::size_t count_above(std::span<const Real> diag, const Real& sigma);

SturmScan sturm_count(const TridiagMatrix& M, double sigma);

// agree(a, b) = 1 if ab > 0 or (a == 0 and b != 0), else 0.
int agree(double a, double b);
std::size_t sign_agreements(std::span<const double> v);

// (lo, hi) with lo < lambda_k <= hi, from the lower bounds
// 2(1 - cos(pi k/(n+1))) and A_k - 2 and the upper bound A_k + 2.
std::pair<double, double> eigen_bounds(const TridiagMatrix& M, std::size_t k);

}  // namespace tridiag_hira
