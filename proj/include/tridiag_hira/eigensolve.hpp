#pragma once
// Sturm bisection for single eigenvalues and the inverse power method.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tridiag_hira/profile.hpp"

namespace tridiag_hira {

inline constexpr double kDefaultBisectTol = 4.0 * 0x1p-52;
inline constexpr double kDefaultBisectTolDD = 1e-30;
inline constexpr std::uint64_t kDefaultSeed = 20240615;

// Bisects the bracket down to relative width `tol`. Requires
// count_above(lo) >= n-k+1 and count_above(hi) <= n-k, so that
// lo < lambda_k <= hi; the returned value is the final hi.
template <class Real>
Real sturm_bisect(std::span<const Real> diag, std::size_t k, double tol, std::pair<Real, Real> bracket);

// k-th smallest eigenvalue (1-based). The initial bracket comes from
// eigen_bounds, checked by Sturm counts, with Gershgorin bounds as backup.
// The last bisection steps count on the double-double diagonal, so the
// relative tolerance also holds for eigenvalues much smaller than ||M||.
double sturm_bisect(const TridiagMatrix& M, std::size_t k, double tol = kDefaultBisectTol);

// Same eigenvalue in double-double: starts from the binary64 value and
// refines inside a verified narrow bracket.
DDReal sturm_bisect_dd(const TridiagMatrix& M, std::size_t k, double tol = kDefaultBisectTolDD);

struct NearestEigen {
    std::size_t k = 0;
    double lambda = 0.0;
};

// The eigenvalue closest to `target`, with its index.
NearestEigen nearest_eigenvalue(const TridiagMatrix& M, double target, double tol = kDefaultBisectTol);

// Solves (sigma I - M) w = rhs by Gaussian elimination with partial pivoting.
// Throws SingularSystemError on an exactly zero pivot.
std::vector<double> shifted_solve(const TridiagMatrix& M, double sigma, std::span<const double> rhs);

struct InversePowerTrace {
    // eta_j = vhat_j(i)/v_{j-1}(i) with i = argmax |v_{j-1}| and
    // vhat_j = (M - sigma I)^{-1} v_{j-1}.
    std::vector<double> eta;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> Y;  // unit vector, first nonzero coordinate positive
    double sigma = 0.0;     // shift actually used
    unsigned shift_nudges = 0;
};

// Power iteration on (M - sigma I)^{-1} from a fixed-seed random unit vector.
// Runs max_iters steps unless stop_tol > 0 and consecutive eta agree to it.
// Returns sigma + 1/eta_last and the trace.
std::pair<double, InversePowerTrace> inverse_power(const TridiagMatrix& M, double lambda0,
                                                   std::size_t max_iters = 30, double stop_tol = 0.0,
                                                   std::uint64_t seed = kDefaultSeed);

}  // namespace tridiag_hira
