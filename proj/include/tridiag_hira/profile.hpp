#pragma once
// The matrix class: symmetric tridiagonal, off-diagonal entries all equal to 1,
// diagonal A_j = 2 + f_j with 0 < f_1 < ... < f_n.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "tridiag_hira/dd_real.hpp"

namespace tridiag_hira {

struct PowerLawParams {
    double a = 0.0;
    double c = 0.0;
};

struct BesselParams {
    double x = 0.0;
    std::size_t N = 0;
};

class DiagonalProfile {
public:
    // Validates 0 < f_1 < ... < f_n; throws std::invalid_argument otherwise.
    static DiagonalProfile from_values(std::vector<double> f);

    // Skips validation. Only meant for tests that need matrices outside the
    // class, such as the constant-diagonal B matrix (f == 0).
    static DiagonalProfile relaxed_for_testing(std::vector<double> f);

    std::size_t size() const { return f_.size(); }
    // 1-based, as in the recurrences.
    double f(std::size_t j) const { return f_[j - 1]; }
    const std::vector<double>& values() const { return f_; }

    const std::optional<PowerLawParams>& power_law() const { return power_law_; }
    const std::optional<BesselParams>& bessel() const { return bessel_; }

    // f_j in double-double. Exact up to dd rounding when the profile came from
    // a generator; otherwise the stored binary64 values.
    std::vector<DDReal> values_dd() const;

private:
    friend DiagonalProfile power_law_profile(double a, double c, std::size_t n);
    friend DiagonalProfile bessel_profile(double x, std::size_t N);

    std::vector<double> f_;
    std::optional<PowerLawParams> power_law_;
    std::optional<BesselParams> bessel_;
};

// f_j = (j/c)^a. Requires a >= 1, c >= 1, n >= 2.
DiagonalProfile power_law_profile(double a, double c, std::size_t n);

// f_j = 2j/x for j = 1..2N+1.
DiagonalProfile bessel_profile(double x, std::size_t N);

class TridiagMatrix {
public:
    TridiagMatrix() = default;
    explicit TridiagMatrix(DiagonalProfile profile);

    std::size_t size() const { return profile_.size(); }
    const DiagonalProfile& profile() const { return profile_; }

    // A_j, 1-based.
    double diag(std::size_t j) const { return diag_[j - 1]; }
    // A_1..A_n as a 0-based span. For generated profiles each entry is the
    // correctly rounded value of 2 + f_j.
    std::span<const double> diagonal() const { return diag_; }
    std::span<const DDReal> diagonal_dd() const { return diag_dd_; }

    double f_max() const { return profile_.values().back(); }

private:
    DiagonalProfile profile_;
    std::vector<double> diag_;
    std::vector<DDReal> diag_dd_;
};

// Diagonal entries in the requested precision.
template <class Real>
std::span<const Real> diagonal_of(const TridiagMatrix& M);
template <>
inline std::span<const double> diagonal_of<double>(const TridiagMatrix& M) { return M.diagonal(); }
template <>
inline std::span<const DDReal> diagonal_of<DDReal>(const TridiagMatrix& M) { return M.diagonal_dd(); }

// One value per line, 17 significant digits.
void write_profile_text(const DiagonalProfile& p, const std::filesystem::path& path);
DiagonalProfile read_profile_text(const std::filesystem::path& path);

// Raw little-endian binary64 array, no header.
void write_profile_binary(const DiagonalProfile& p, const std::filesystem::path& path);
DiagonalProfile read_profile_binary(const std::filesystem::path& path);

}  // namespace tridiag_hira
