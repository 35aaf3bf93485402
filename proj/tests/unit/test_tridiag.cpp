#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "tridiag_hira/eigensolve.hpp"
#include "tridiag_hira/hira.hpp"
#include "tridiag_hira/profile.hpp"
#include "tridiag_hira/tridiag.hpp"

using namespace tridiag_hira;

namespace {

TridiagMatrix small_matrix() { return TridiagMatrix(DiagonalProfile::from_values({1.0, 2.0, 3.0})); }

TridiagMatrix random_power_law(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> ua(1.0, 3.0), uc(5.0, 50.0);
    const double a = ua(rng), c = uc(rng);
    return TridiagMatrix(power_law_profile(a, c, n));
}

}  // namespace

TEST_CASE("power-law and Bessel profiles") {
    const auto p = power_law_profile(2.0, 100.0, 250);
    CHECK(p.size() == 250);
    CHECK(p.f(1) == 1e-4);
    CHECK(p.f(250) == 6.25);
    REQUIRE(p.power_law().has_value());
    CHECK(p.power_law()->c == 100.0);

    const auto unit = power_law_profile(1.0, 1.0, 3);
    CHECK(unit.values() == std::vector<double>{1.0, 2.0, 3.0});

    // a = 1, c = x/2 is the Bessel diagonal.
    const auto b = bessel_profile(7.0, 20);
    const auto pl = power_law_profile(1.0, 3.5, 41);
    for (std::size_t j = 1; j <= 41; ++j) CHECK(b.f(j) == doctest::Approx(pl.f(j)).epsilon(1e-15));

    CHECK(bessel_profile(2.0, 1).values() == std::vector<double>{1.0, 2.0, 3.0});
    const auto b100 = bessel_profile(100.0, 215);
    CHECK(b100.size() == 431);
    CHECK(b100.f(1) == 0.02);
    CHECK(bessel_profile(1000.0, 1250).size() == 2501);
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(power_law_profile(0.5, 10.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(power_law_profile(2.0, 0.5, 5), std::invalid_argument);
    CHECK_THROWS_AS(power_law_profile(2.0, 10.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalProfile::from_values({1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalProfile::from_values({0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalProfile::from_values({2.0, 1.0}), std::invalid_argument);
    CHECK_NOTHROW(DiagonalProfile::relaxed_for_testing({0.0, 0.0, 0.0}));
}

TEST_CASE("generated diagonals are correctly rounded") {
    const TridiagMatrix M(power_law_profile(3.0, 7.0, 60));
    const auto dd = M.diagonal_dd();
    for (std::size_t j = 1; j <= 60; ++j) {
        CHECK(M.diag(j) == to_double(dd[j - 1]));
        const DDReal q = DDReal(static_cast<double>(j)) / DDReal(7.0);
        const DDReal want = DDReal(2.0) + q * q * q;
        CHECK(std::abs(to_double(dd[j - 1] - want)) <= 1e-29 * to_double(want));
    }
}

TEST_CASE("apply") {
    const auto M = small_matrix();
    const std::vector<double> e1{1.0, 0.0, 0.0}, zero(3, 0.0), ones(3, 1.0);
    CHECK(tridiag_hira::apply(M, e1) == std::vector<double>{3.0, 1.0, 0.0});
    CHECK(tridiag_hira::apply(M, zero) == zero);
    CHECK(tridiag_hira::apply(M, ones) == std::vector<double>{4.0, 6.0, 6.0});
    CHECK_THROWS_AS(tridiag_hira::apply(M, std::vector<double>(2, 1.0)), std::invalid_argument);
}

TEST_CASE("apply is linear at double-double precision") {
    std::mt19937_64 rng(5);
    const auto M = random_power_law(rng, 150);
    std::normal_distribution<double> g;
    std::vector<DDReal> u(150), v(150), w(150);
    for (std::size_t i = 0; i < 150; ++i) {
        u[i] = DDReal(g(rng)) / DDReal(3.0);
        v[i] = DDReal(g(rng)) / DDReal(7.0);
        w[i] = u[i] + v[i];
    }
    const auto diag = M.diagonal_dd();
    const auto Mu = apply<DDReal>(diag, u), Mv = apply<DDReal>(diag, v), Mw = apply<DDReal>(diag, w);
    double worst = 0.0;
    for (std::size_t i = 0; i < 150; ++i)
        worst = std::max(worst, std::abs(to_double(Mw[i] - Mu[i] - Mv[i])) / std::abs(to_double(Mw[i])));
    CHECK(worst <= 1e-28);
}

TEST_CASE("residual of the closed-form eigenvector of the constant-diagonal matrix") {
    const TridiagMatrix B(DiagonalProfile::relaxed_for_testing({0.0, 0.0, 0.0}));
    const double pi = std::numbers::pi;
    const double lambda = 2.0 * (std::cos(pi / 4.0) + 1.0);
    std::vector<double> v{std::sin(pi / 4.0), std::sin(pi / 2.0), std::sin(3.0 * pi / 4.0)};
    for (auto& x : v) x /= std::sqrt(2.0);
    CHECK(residual_inf(B, lambda, v) <= 1e-15);

    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    std::vector<double> r(3);
    for (auto& x : r) x = g(rng);
    CHECK(residual_inf(small_matrix(), 0.0, r) > 0.0);
}

TEST_CASE("Sturm counts") {
    // Perturbed constant-diagonal matrix: eigenvalues 2 - sqrt2, 2 + (f1 + f3)/2
    // to first order, and 2 + sqrt2. The middle one moves up by 2e-15, so two
    // eigenvalues exceed 2 and one exceeds 2 + 1e-14.
    std::vector<double> f{1e-15, 2e-15, 3e-15};
    const TridiagMatrix B(DiagonalProfile::from_values(f));
    const auto scan = sturm_count(B, 2.0);
    CHECK(scan.agreements == 2);
    CHECK(scan.signs.size() == 4);
    CHECK(sturm_count(B, 2.0 + 1e-14).agreements == 1);
    CHECK(sturm_count(B, 2.0 - 1e-14).agreements == 2);

    const auto M = small_matrix();
    CHECK(sturm_count(M, -0.5).agreements == 3);
    CHECK(sturm_count(M, M.diag(3) + 2.0).agreements == 0);
}

TEST_CASE("Sturm count is non-increasing in the shift") {
    std::mt19937_64 rng(17);
    const auto M = random_power_law(rng, 120);
    std::uniform_real_distribution<double> u(-1.0, M.diag(120) + 3.0);
    std::vector<double> shifts(1000);
    for (auto& s : shifts) s = u(rng);
    std::sort(shifts.begin(), shifts.end());
    std::size_t prev = M.size();
    for (double s : shifts) {
        const std::size_t a = sturm_count(M, s).agreements;
        CHECK(a <= prev);
        CHECK(a <= M.size());
        prev = a;
    }
}

TEST_CASE("sign agreements") {
    CHECK(sign_agreements(std::vector<double>{1, 1, 1, 1}) == 3);
    CHECK(sign_agreements(std::vector<double>{1, -1, 1, -1}) == 0);
    CHECK(agree(0.0, 1.0) == 1);
    CHECK(agree(1.0, 0.0) == 0);
    CHECK(agree(-2.0, -3.0) == 1);
    CHECK(agree(2.0, -3.0) == 0);
}

TEST_CASE("eigen_bounds bracket every eigenvalue") {
    const TridiagMatrix M(power_law_profile(2.0, 100.0, 250));
    const std::size_t n = M.size();
    for (std::size_t k = 1; k <= n; ++k) {
        const auto [lo, hi] = eigen_bounds(M, k);
        CHECK(lo < hi);
        CHECK(count_above<double>(M.diagonal(), lo) >= n - k + 1);
        CHECK(count_above<double>(M.diagonal(), hi) <= n - k);
    }
    const auto [lo1, hi1] = eigen_bounds(M, 1);
    CHECK(sturm_bisect(M, 1) < M.diag(1));
    CHECK(lo1 < sturm_bisect(M, 1));
    CHECK(hi1 == M.diag(1) + 2.0);
    CHECK(sturm_bisect(M, n) > M.diag(n));
}

TEST_CASE("eigenvector of the k-th eigenvalue has k-1 sign agreements") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 3; ++trial) {
        const auto M = random_power_law(rng, 80 + 40 * trial);
        const std::size_t n = M.size();
        for (std::size_t k = 1; k <= n; ++k) {
            const DDReal lam = sturm_bisect_dd(M, k);
            const auto r = simplified_eigenvector_dd(M, lam);
            std::vector<double> mant(n);
            for (std::size_t j = 1; j <= n; ++j) mant[j - 1] = r.scaled.mantissa(j).hi();
            CHECK_MESSAGE(sign_agreements(mant) == k - 1, "n=" << n << " k=" << k);
        }
    }
}

TEST_CASE("profile files round-trip bit-exactly") {
    const auto p = power_law_profile(2.5, 33.0, 77);
    const auto dir = std::filesystem::temp_directory_path() / "tridiag_hira_profile_test";
    std::filesystem::create_directories(dir);
    write_profile_text(p, dir / "p.txt");
    write_profile_binary(p, dir / "p.bin");
    CHECK(read_profile_text(dir / "p.txt").values() == p.values());
    CHECK(read_profile_binary(dir / "p.bin").values() == p.values());
    CHECK(std::filesystem::file_size(dir / "p.bin") == 77 * 8);
    CHECK_THROWS(read_profile_text(dir / "missing.txt"));
    std::filesystem::remove_all(dir);
}
