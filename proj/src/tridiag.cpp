#include "tridiag_hira/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tridiag_hira {

template <class Real>
std::vector<Real> apply(std::span<const Real> diag, std::span<const Real> v) {
    const std::size_t n = diag.size();
    if (v.size() != n) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Real> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Real s = diag[j] * v[j];
        if (j > 0) s += v[j - 1];
        if (j + 1 < n) s += v[j + 1];
        out[j] = s;
    }
    return out;
}

template std::vector<double> apply<double>(std::span<const double>, std::span<const double>);
template std::vector<DDReal> apply<DDReal>(std::span<const DDReal>, std::span<const DDReal>);

std::vector<double> apply(const TridiagMatrix& M, std::span<const double> v) {
    return apply<double>(M.diagonal(), v);
}

double residual_inf(const TridiagMatrix& M, double lambda, std::span<const double> v) {
    const auto diag = M.diagonal();
    const std::size_t n = diag.size();
    if (v.size() != n) throw std::invalid_argument("residual_inf: dimension mismatch");
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = (diag[j] - lambda) * v[j];
        if (j > 0) s += v[j - 1];
        if (j + 1 < n) s += v[j + 1];
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

namespace {
constexpr double kTiny = 1e-300;
}

template <class Real>
std::size_t count_above(std::span<const Real> diag, const Real& sigma) {
    std::size_t count = 0;
    Real q(0.0);
    for (std::size_t j = 0; j < diag.size(); ++j) {
        const Real t = diag[j] - sigma;
        q = (j == 0) ? t : t - Real(1.0) / q;
        if (q == Real(0.0)) q = Real(-kTiny);
        if (q > Real(0.0)) ++count;
    }
    return count;
}

template std::size_t count_above<double>(std::span<const double>, const double&);
template std::size_t count_above<DDReal>(std::span<const DDReal>, const DDReal&);

SturmScan sturm_count(const TridiagMatrix& M, double sigma) {
    const auto diag = M.diagonal();
    SturmScan scan;
    scan.sigma = sigma;
    scan.signs.reserve(diag.size() + 1);
    scan.signs.push_back(1);
    double q = 0.0;
    for (std::size_t j = 0; j < diag.size(); ++j) {
        const double t = diag[j] - sigma;
        q = (j == 0) ? t : t - 1.0 / q;
        if (q == 0.0) q = -kTiny;
        if (q > 0.0) ++scan.agreements;
        scan.signs.push_back(q > 0.0 ? scan.signs.back() : -scan.signs.back());
    }
    return scan;
}

int agree(double a, double b) {
    if (b == 0.0) return 0;
    if (a == 0.0) return 1;
    return (a > 0.0) == (b > 0.0) ? 1 : 0;
}

std::size_t sign_agreements(std::span<const double> v) {
    std::size_t count = 0;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) count += static_cast<std::size_t>(agree(v[j], v[j + 1]));
    return count;
}

std::pair<double, double> eigen_bounds(const TridiagMatrix& M, std::size_t k) {
    const std::size_t n = M.size();
    if (k < 1 || k > n) throw std::out_of_range("eigen_bounds: index out of range");
    const double angle = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1);
    // 2(1 - cos t) written as 4 sin^2(t/2) to avoid cancellation for small t.
    const double half = std::sin(0.5 * angle);
    const double lo = std::max(4.0 * half * half, M.diag(k) - 2.0);
    return {lo, M.diag(k) + 2.0};
}

}  // namespace tridiag_hira
