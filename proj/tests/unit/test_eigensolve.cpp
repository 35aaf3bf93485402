#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "tridiag_hira/eigensolve.hpp"
#include "tridiag_hira/errors.hpp"
#include "tridiag_hira/hira.hpp"
#include "tridiag_hira/tridiag.hpp"

using namespace tridiag_hira;

namespace {

double rel_vs(double y, const DDReal& ref) { return std::abs(to_double(DDReal(y) - ref)) / std::abs(to_double(ref)); }

DDReal reference_first(const TridiagMatrix& M, std::size_t k) {
    return simplified_eigenvector_dd(M, sturm_bisect_dd(M, k)).X[0];
}

}  // namespace

TEST_CASE("closed-form spectrum of the constant-diagonal matrix") {
    const std::size_t n = 100;
    const TridiagMatrix B(DiagonalProfile::relaxed_for_testing(std::vector<double>(n, 0.0)));
    const double pi = std::numbers::pi;
    for (std::size_t k = 1; k <= n; ++k) {
        // k-th smallest: 2(cos(pi j/(n+1)) + 1) with j = n+1-k.
        const double want = 2.0 * (std::cos(pi * static_cast<double>(n + 1 - k) / (n + 1)) + 1.0);
        CHECK(std::abs(sturm_bisect(B, k) - want) <= 1e-12);
    }
}

TEST_CASE("one-by-one matrix") {
    const TridiagMatrix M(DiagonalProfile::from_values({5.0}));
    CHECK(sturm_bisect(M, 1) == 7.0);
}

TEST_CASE("argument checks") {
    const TridiagMatrix M(power_law_profile(2.0, 10.0, 20));
    CHECK_THROWS_AS(sturm_bisect(M, 0), std::out_of_range);
    CHECK_THROWS_AS(sturm_bisect(M, 21), std::out_of_range);
    CHECK_THROWS_AS(sturm_bisect(M, 3, 1e-17), std::invalid_argument);
}

TEST_CASE("bisection result sits on the eigenvalue boundary") {
    const TridiagMatrix M(power_law_profile(2.0, 100.0, 250));
    const std::size_t n = M.size();
    for (std::size_t k : {1, 2, 50, 173, 249, 250}) {
        const double lam = sturm_bisect(M, k);
        CHECK(count_above<DDReal>(M.diagonal_dd(), DDReal(lam)) <= n - k);
        CHECK(count_above<DDReal>(M.diagonal_dd(), DDReal(lam - kDefaultBisectTol * std::abs(lam))) >= n - k + 1);
        const DDReal dd = sturm_bisect_dd(M, k);
        CHECK(std::abs(to_double(dd - DDReal(lam))) <= kDefaultBisectTol * std::abs(lam));
    }
}

TEST_CASE("eigenvalue nearest the experiment target") {
    const TridiagMatrix M(power_law_profile(2.0, 100.0, 250));
    const auto near = nearest_eigenvalue(M, 5.1665);
    CHECK(near.k == 173);
    CHECK(std::abs(near.lambda - 5.1665) <= 5e-4);
}

TEST_CASE("eigenvalues are simple") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(1.0, 3.0), uc(5.0, 50.0);
    for (int trial = 0; trial < 5; ++trial) {
        const TridiagMatrix M(power_law_profile(ua(rng), uc(rng), 200));
        double prev = -1.0;
        for (std::size_t k = 1; k <= 200; ++k) {
            const double lam = sturm_bisect(M, k);
            if (k > 1) CHECK(lam - prev > 10.0 * kDefaultBisectTol * std::abs(lam));
            prev = lam;
        }
    }
}

TEST_CASE("shifted_solve") {
    const TridiagMatrix M(DiagonalProfile::from_values({1e-3, 2e-3, 3e-3}));
    const std::vector<double> e1{1.0, 0.0, 0.0};
    const auto w = shifted_solve(M, 1e6, e1);
    CHECK(w[0] == doctest::Approx(1.0 / (1e6 - M.diag(1))).epsilon(1e-6));
    CHECK(std::abs(w[1]) < 1e-11);

    const TridiagMatrix S(DiagonalProfile::from_values({1.0, 2.0, 3.0}));
    const auto v = shifted_solve(S, 0.0, e1);
    const auto Mv = tridiag_hira::apply(S, v);
    CHECK(Mv[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(Mv[1]) < 1e-14);
    CHECK(std::abs(Mv[2]) < 1e-14);

    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    const TridiagMatrix P(power_law_profile(2.0, 30.0, 90));
    std::vector<double> rhs(90);
    for (auto& x : rhs) x = g(rng);
    for (double sigma : {0.3, 2.9, 4.01, sturm_bisect(P, 40) + 1e-9}) {
        const auto sol = shifted_solve(P, sigma, rhs);
        const auto back = tridiag_hira::apply(P, sol);
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < 90; ++i) {
            worst = std::max(worst, std::abs(sigma * sol[i] - back[i] - rhs[i]));
            scale = std::max(scale, std::abs(sol[i]) * (std::abs(sigma) + P.diag(90) + 2.0));
        }
        CHECK(worst <= 1e-13 * scale);
    }
}

TEST_CASE("exactly singular shift") {
    const TridiagMatrix B(DiagonalProfile::relaxed_for_testing({0.0, 0.0}));
    CHECK_THROWS_AS(shifted_solve(B, 3.0, std::vector<double>{1.0, 0.0}), SingularSystemError);
    // inverse_power steps off the exact eigenvalue instead of failing.
    const auto [lam, trace] = inverse_power(B, 3.0, 5);
    CHECK(trace.shift_nudges >= 1);
    CHECK(lam == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("inverse power on the first experiment matrix") {
    const TridiagMatrix M(power_law_profile(2.0, 100.0, 250));
    const auto [lam, trace] = inverse_power(M, 5.1665, 30);
    CHECK(trace.iterations == 30);
    CHECK(trace.eta.size() == 30);
    CHECK(std::abs(lam - sturm_bisect(M, 173)) < 1e-13);
    CHECK(trace.Y[0] > 0.0);
    CHECK(trace.Y[0] == doctest::Approx(0.37636e-39).epsilon(1e-4));
    CHECK(rel_vs(trace.Y[0], reference_first(M, 173)) <= 1e-12);

    double norm2 = 0.0;
    for (double y : trace.Y) norm2 += y * y;
    CHECK(std::abs(std::sqrt(norm2) - 1.0) <= 1e-14);
    for (double e : trace.eta) CHECK(std::isfinite(e));
    CHECK(residual_inf(M, lam, trace.Y) <= 1e-13 * (2.0 + M.f_max()));
}

TEST_CASE("inverse power at the deepest second-experiment eigenvalue") {
    const TridiagMatrix M(power_law_profile(2.0, 1000.0, 2100));
    const auto near = nearest_eigenvalue(M, 4.2665);
    const auto [lam, trace] = inverse_power(M, near.lambda, 30);
    CHECK(trace.Y[0] == doctest::Approx(0.13675e-91).epsilon(1e-4));
    CHECK(rel_vs(trace.Y[0], reference_first(M, near.k)) <= 1e-11);
}

TEST_CASE("inverse power on the constant-diagonal matrix") {
    const TridiagMatrix B(DiagonalProfile::relaxed_for_testing({0.0, 0.0, 0.0}));
    const auto [lam, trace] = inverse_power(B, 3.9, 30);
    CHECK(lam == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
    const double pi = std::numbers::pi;
    const double s = std::sqrt(2.0);
    CHECK(trace.Y[0] == doctest::Approx(std::sin(pi / 4.0) / s).epsilon(1e-12));
    CHECK(trace.Y[1] == doctest::Approx(std::sin(pi / 2.0) / s).epsilon(1e-12));
    CHECK(trace.Y[2] == doctest::Approx(std::sin(3.0 * pi / 4.0) / s).epsilon(1e-12));
}

TEST_CASE("inverse power is deterministic and stops early on request") {
    const TridiagMatrix M(power_law_profile(1.5, 20.0, 100));
    const double lam0 = sturm_bisect(M, 60) + 1e-10;
    const auto a = inverse_power(M, lam0, 30, 0.0, 99);
    const auto b = inverse_power(M, lam0, 30, 0.0, 99);
    CHECK(a.first == b.first);
    CHECK(a.second.eta == b.second.eta);
    CHECK(a.second.Y == b.second.Y);

    const auto c = inverse_power(M, lam0, 30, 0.0, 100);
    for (std::size_t i = 0; i < 100; ++i) CHECK(c.second.Y[i] == doctest::Approx(a.second.Y[i]).epsilon(1e-10));

    const auto early = inverse_power(M, lam0, 30, 1e-12, 99);
    CHECK(early.second.converged);
    CHECK(early.second.iterations < 30);
    const auto& eta = early.second.eta;
    REQUIRE(eta.size() >= 2);
    CHECK(std::abs(eta[eta.size() - 1] - eta[eta.size() - 2]) <= 1e-12 * std::abs(eta.back()));
}
