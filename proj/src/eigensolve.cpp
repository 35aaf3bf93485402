#include "tridiag_hira/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "tridiag_hira/errors.hpp"
#include "tridiag_hira/tridiag.hpp"

namespace tridiag_hira {

namespace {

template <class Real>
bool brackets(std::span<const Real> diag, std::size_t k, const Real& lo, const Real& hi) {
    const std::size_t n = diag.size();
    return count_above(diag, lo) >= n - k + 1 && count_above(diag, hi) <= n - k;
}

}  // namespace

template <class Real>
Real sturm_bisect(std::span<const Real> diag, std::size_t k, double tol, std::pair<Real, Real> bracket) {
    const std::size_t n = diag.size();
    if (k < 1 || k > n) throw std::out_of_range("sturm_bisect: index out of range");
    using std::abs;
    auto [lo, hi] = bracket;
    for (int it = 0; it < 400; ++it) {
        const Real scale = std::max(abs(lo), abs(hi));
        if (hi - lo <= Real(tol) * scale) return hi;
        const Real mid = (lo + hi) * 0.5;
        if (!(mid > lo && mid < hi)) return hi;
        if (count_above(diag, mid) >= n - k + 1)
            lo = mid;
        else
            hi = mid;
    }
    throw NumericalError("sturm_bisect", "no convergence for k=" + std::to_string(k));
}

template double sturm_bisect<double>(std::span<const double>, std::size_t, double, std::pair<double, double>);
template DDReal sturm_bisect<DDReal>(std::span<const DDReal>, std::size_t, double, std::pair<DDReal, DDReal>);

double sturm_bisect(const TridiagMatrix& M, std::size_t k, double tol) {
    const std::size_t n = M.size();
    if (k < 1 || k > n) throw std::out_of_range("sturm_bisect: index out of range");
    if (!(tol >= kDefaultBisectTol)) throw std::invalid_argument("sturm_bisect: tol below 4 ulp");
    const auto diag = M.diagonal();
    auto [lo, hi] = eigen_bounds(M, k);
    // Widen slightly: the lower bound is attained by the constant-diagonal case.
    lo -= 8.0 * 0x1p-52 * std::max(1.0, std::abs(lo));
    hi += 8.0 * 0x1p-52 * std::max(1.0, std::abs(hi));
    if (!brackets<double>(diag, k, lo, hi)) {
        lo = diag.front() - 3.0;
        hi = diag.back() + 3.0;
    }
    const double coarse = sturm_bisect<double>(diag, k, tol, {lo, hi});

    // Double-precision counts are only reliable to about eps * ||M|| in
    // absolute terms, which is far from tol * |lambda| for small
    // eigenvalues. Finish on binary64 midpoints with counts taken on the
    // double-double diagonal.
    const auto dd = M.diagonal_dd();
    const double norm = M.diag(n) + 2.0;
    double width = 16.0 * 0x1p-52 * norm;
    for (int attempt = 0;; ++attempt) {
        lo = coarse - width;
        hi = coarse + width;
        if (brackets<DDReal>(dd, k, DDReal(lo), DDReal(hi))) break;
        if (attempt == 8) return coarse;  // counts disagree far beyond rounding; keep the double result
        width *= 16.0;
    }
    for (int it = 0; it < 200; ++it) {
        if (hi - lo <= tol * std::max(std::abs(lo), std::abs(hi))) break;
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (count_above<DDReal>(dd, DDReal(mid)) >= n - k + 1)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

DDReal sturm_bisect_dd(const TridiagMatrix& M, std::size_t k, double tol) {
    const double seed = sturm_bisect(M, k);
    const auto diag = M.diagonal_dd();
    for (double width : {1e-13, 1e-9, 1e-5}) {
        const double delta = width * std::max(1.0, std::abs(seed));
        const DDReal lo(seed - delta), hi(seed + delta);
        if (brackets<DDReal>(diag, k, lo, hi)) return sturm_bisect<DDReal>(diag, k, tol, {lo, hi});
    }
    return sturm_bisect<DDReal>(diag, k, tol, {DDReal(diag.front() - 3.0), DDReal(diag.back() + 3.0)});
}

NearestEigen nearest_eigenvalue(const TridiagMatrix& M, double target, double tol) {
    const std::size_t n = M.size();
    const std::size_t below = n - count_above<double>(M.diagonal(), target);
    NearestEigen best;
    double best_dist = INFINITY;
    for (std::size_t k : {below, below + 1}) {
        if (k < 1 || k > n) continue;
        const double lam = sturm_bisect(M, k, tol);
        if (std::abs(lam - target) < best_dist) {
            best_dist = std::abs(lam - target);
            best = {k, lam};
        }
    }
    return best;
}

std::vector<double> shifted_solve(const TridiagMatrix& M, double sigma, std::span<const double> rhs) {
    const std::size_t n = M.size();
    if (rhs.size() != n) throw std::invalid_argument("shifted_solve: dimension mismatch");
    std::vector<double> d(n), du(n, -1.0), dl(n, -1.0), du2(n, 0.0), b(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < n; ++i) d[i] = sigma - M.diag(i + 1);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0.0) throw SingularSystemError("shifted_solve", "zero pivot at row " + std::to_string(i + 1));
            const double fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
        } else {
            // Swap rows i and i+1; fill-in appears in du2.
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            const double temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            du[i] = temp;
            const double bi = b[i];
            b[i] = b[i + 1];
            b[i + 1] = bi - fact * b[i + 1];
        }
    }
    if (d[n - 1] == 0.0) throw SingularSystemError("shifted_solve", "zero pivot at row " + std::to_string(n));

    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    if (n > 2)
        for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    return b;
}

namespace {

std::vector<double> random_unit(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<double> v(n);
    double sum = 0.0;
    for (auto& x : v) {
        // Raw generator bits keep the sequence identical across standard libraries.
        x = 2.0 * (static_cast<double>(gen() >> 11) * 0x1p-53) - 1.0;
        sum += x * x;
    }
    const double inv = 1.0 / std::sqrt(sum);
    for (auto& x : v) x *= inv;
    return v;
}

double scaled_norm(const std::vector<double>& v) {
    double big = 0.0;
    for (double x : v) big = std::max(big, std::abs(x));
    if (big == 0.0) return 0.0;
    double sum = 0.0;
    for (double x : v) sum += (x / big) * (x / big);
    return big * std::sqrt(sum);
}

}  // namespace

std::pair<double, InversePowerTrace> inverse_power(const TridiagMatrix& M, double lambda0, std::size_t max_iters,
                                                   double stop_tol, std::uint64_t seed) {
    if (max_iters < 1) throw std::invalid_argument("inverse_power: max_iters must be >= 1");
    const std::size_t n = M.size();
    InversePowerTrace trace;
    trace.sigma = lambda0;
    std::vector<double> v = random_unit(n, seed);

    for (std::size_t it = 1; it <= max_iters; ++it) {
        std::vector<double> w;
        for (;;) {
            try {
                w = shifted_solve(M, trace.sigma, v);
                break;
            } catch (const SingularSystemError&) {
                // The shift hit an eigenvalue exactly; move it by a few ulps.
                if (++trace.shift_nudges > 16) throw;
                trace.sigma += 2.0 * 0x1p-52 * std::max(1.0, std::abs(trace.sigma)) * trace.shift_nudges;
            }
        }
        std::size_t imax = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
        for (auto& x : w) x = -x;
        for (double x : w)
            if (!std::isfinite(x)) throw NumericalError("inverse_power", "non-finite iterate");
        const double eta = w[imax] / v[imax];
        trace.eta.push_back(eta);
        const double norm = scaled_norm(w);
        if (!(norm > 0.0)) throw NumericalError("inverse_power", "zero iterate");
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        trace.iterations = it;
        if (stop_tol > 0.0 && it > 1 && std::abs(eta - trace.eta[it - 2]) <= stop_tol * std::abs(eta)) {
            trace.converged = true;
            break;
        }
    }
    if (!trace.converged && trace.eta.size() > 1) {
        const double a = trace.eta.back(), b = trace.eta[trace.eta.size() - 2];
        trace.converged = std::abs(a - b) <= 64.0 * 0x1p-52 * std::abs(a);
    }

    for (double x : v) {
        if (x != 0.0) {
            if (x < 0.0)
                for (auto& y : v) y = -y;
            break;
        }
    }
    trace.Y = std::move(v);
    return {trace.sigma + 1.0 / trace.eta.back(), std::move(trace)};
}

}  // namespace tridiag_hira
