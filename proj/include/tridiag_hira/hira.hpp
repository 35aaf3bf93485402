#pragma once
// Eigenvectors with high relative accuracy in every coordinate.
//
// For an eigenvalue lambda, indices with lambda - A_j >= 2 form the growth
// region and indices with lambda - A_j <= -2 the decay region. The
// oscillatory region (|lambda - A_j| < 2) lies between them. Coordinates are built by the three-term
// recurrence only in directions where it is stable: forward through the growth
// region and a short run after it, backward through the decay region and a
// short run before it. Inside the oscillatory region each pair (x_j, x_{j+1})
// is replaced by one complex coefficient in a rotating basis, and the
// coefficient is advanced by a near-rotation. The two halves meet at p, the
// last index with lambda - A_p >= 0.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tridiag_hira/complex.hpp"
#include "tridiag_hira/dd_real.hpp"
#include "tridiag_hira/profile.hpp"
#include "tridiag_hira/scaled.hpp"

namespace tridiag_hira {

enum class RegionTag { G, OL, O, OR, D };
const char* tag_name(RegionTag tag);

struct RegionPartition {
    std::size_t n = 0;
    std::size_t k = 0;  // last j with lambda - A_j >= 2, 0 if none
    std::size_t l = 0;  // length of the forward run into the oscillatory region, 0 if none
    std::size_t p = 0;  // last j with lambda - A_j >= 0
    std::size_t m = 0;  // last j with lambda - A_j > -2
    std::size_t r = 0;  // length of the backward run into the oscillatory region, 0 if none

    bool growth_empty = false;
    bool decay_empty = false;
    bool left_run_missing = false;
    bool right_run_missing = false;
    bool order_violated = false;
    // Whether the chosen run also satisfies the upper threshold at its end
    // (see classify_regions).
    bool l_exact = false;
    bool r_exact = false;

    bool general() const {
        return !(growth_empty || decay_empty || left_run_missing || right_run_missing || order_violated);
    }
    std::string degeneracy() const;
    RegionTag tag(std::size_t j) const;
};

// k, p, m by threshold scans. l is the largest L >= 3 with
// (lambda - A_{k+L+1})/2 > cos(pi/(2L-1)) and k+L+1 <= p; r mirrors it with
// (A_{m-R} - lambda)/2 > cos(pi/(2R-1)) and m-R >= p+1. When the two-sided
// threshold (the next diagonal already below the cosine) has a solution, it
// is this same L.
template <class Real>
RegionPartition classify_regions(std::span<const Real> diag, const Real& lambda);
RegionPartition classify_regions(const TridiagMatrix& M, double lambda);

// x_1 = 1, x_2 = (lambda - A_1) x_1, x_{j+1} = (lambda - A_j) x_j - x_{j-1},
// for j up to `stop`, with power-of-two rescaling.
template <class Real>
ScaledSequence<Real> recur_forward(std::span<const Real> diag, const Real& lambda, std::size_t stop);

// xhat_n = 1, xhat_{n-1} = (lambda - A_n) xhat_n, and the recurrence run
// downward to `stop`.
template <class Real>
ScaledSequence<Real> recur_backward(std::span<const Real> diag, const Real& lambda, std::size_t stop);

// recur_forward plus the positivity every coordinate must have up to k+l-1.
// Throws NumericalError("grow_forward") when a coordinate is not positive.
template <class Real>
ScaledSequence<Real> grow_forward(std::span<const Real> diag, const Real& lambda, std::size_t stop);

// recur_backward, sign-normalized so that xhat_m > 0, checked for the
// alternating pattern sign(xhat_j) = (-1)^{m-j}.
template <class Real>
ScaledSequence<Real> decay_backward(std::span<const Real> diag, const Real& lambda, std::size_t stop);

// Coefficient with 2 Re(alpha) = x and 2 Re(alpha e^{i theta}) = y.
template <class Real>
Complex<Real> alpha_init(const Real& x, const Real& y, const Real& cos_theta, const Real& sin_theta);
Complex<double> alpha_init(double x, double y, double theta);

// Advances c_{i+1} = c_i e^{i t_i} - i Im[q_i c_i e^{i t_i} e^{i psi_i}] with
// psi_i = (t_i + t_{i+1})/2 and
// q_i = (cos t_i - cos t_{i+1}) / (sin t_{i+1} sin psi_i).
// `drops[i]` must hold cos t_i - cos t_{i+1}; callers form it from a diagonal
// difference so it carries no cancellation error.
template <class Real>
std::vector<Complex<Real>> rotation_sweep(std::span<const Real> cosines, std::span<const Real> sines,
                                          std::span<const Real> drops, const Complex<Real>& c0);

// Angle-based convenience forms (binary64).
std::vector<Complex<double>> alpha_sweep(std::span<const double> thetas, const Complex<double>& alpha0);
std::vector<Complex<double>> gamma_sweep(std::span<const double> phis, const Complex<double>& gamma0);

template <class Real>
struct OscillatorySweep {
    bool left = true;            // alpha_j for ascending j, otherwise gamma_j for descending j
    std::size_t first_index = 0;  // j of coeffs[0]
    std::vector<Real> cosines;    // cos theta_j (or cos phi_j)
    std::vector<Real> sines;
    std::vector<Complex<Real>> coeffs;
    int exponent = 0;  // common power-of-two scale of the coefficients

    std::size_t size() const { return coeffs.size(); }
    std::size_t index(std::size_t i) const { return left ? first_index + i : first_index - i; }
    double angle(std::size_t i) const;
    double radius(std::size_t i) const;  // |c_i| * 2^exponent
    double phase(std::size_t i) const;   // arg c_i
    // 4(|c|^2 + cos t Re(c^2 e^{it})), which equals the sum of squares of the
    // two coordinates the coefficient encodes (unscaled).
    Real norm_summand(std::size_t i) const;
};

// Scale s with x = s * xhat on the overlap, chosen from the larger of
// |xhat_p| and |xhat_{p+1}|. `flipped` reports whether the halves arrived with
// opposite orientation (x_p xhat_p + x_{p+1} xhat_{p+1} < 0).
template <class Real>
struct GlueResult {
    ScaledValue<Real> s;
    bool flipped = false;
    bool used_p = true;
};

template <class Real>
GlueResult<Real> glue(const ScaledValue<Real>& x_p, const ScaledValue<Real>& x_p1, const ScaledValue<Real>& xhat_p,
                      const ScaledValue<Real>& xhat_p1);
double glue(double x_p, double x_p1, double xhat_p, double xhat_p1);

enum class Method { hira, simplified, inverse_power };
const char* method_name(Method m);

template <class Real>
struct EigenvectorResult {
    Method method = Method::hira;
    bool fallback = false;
    std::string fallback_reason;
    Real lambda{};
    RegionPartition partition;
    ScaledSequence<Real> scaled;  // X_j = mantissa * 2^exponent, unit length
    std::vector<Real> X;          // plain values; may underflow to zero
    ScaledValue<Real> s;
    ScaledValue<Real> d;
    ScaledValue<Real> d_l;
    ScaledValue<Real> d_r;
    double predicted_rel_bound = 0.0;
    OscillatorySweep<Real> left_sweep;
    OscillatorySweep<Real> right_sweep;
};

template <class Real>
EigenvectorResult<Real> hira_eigenvector(std::span<const Real> diag, const Real& lambda);
template <class Real>
EigenvectorResult<Real> simplified_eigenvector(std::span<const Real> diag, const Real& lambda);

EigenvectorResult<double> hira_eigenvector(const TridiagMatrix& M, double lambda);
EigenvectorResult<double> simplified_eigenvector(const TridiagMatrix& M, double lambda);
EigenvectorResult<DDReal> hira_eigenvector_dd(const TridiagMatrix& M, const DDReal& lambda);
EigenvectorResult<DDReal> simplified_eigenvector_dd(const TridiagMatrix& M, const DDReal& lambda);

struct StabilityReport {
    double init_condition_left = 0.0;   // 4/(A_{k+l} - A_k)
    double init_condition_right = 0.0;  // 4/(A_m - A_{m-r})
    std::vector<double> alpha_step_ratios;  // (A_{j+2}-A_{j+1})/(A_{j+1}-A_{k+1}), j = k+l-1..p
    std::vector<double> gamma_step_ratios;  // (A_{j+2}-A_{j+1})/(A_m-A_{j+1}), j = p-1..m-r+1
    double max_alpha_step_ratio = 0.0;
    double max_gamma_step_ratio = 0.0;
    double kappa_left = 0.0;   // kappa(theta_{k+l-2})
    double kappa_right = 0.0;  // kappa(phi_{m-r+1})
    bool alpha_bound_ok = false;  // every alpha ratio < 1/2
    bool gamma_bound_ok = false;
    double predicted_rel_bound = 0.0;  // eps (l^4 + r^4)
    std::optional<double> asymptotic_prediction;  // eps c^{4a/(a+2)} for power-law profiles
};

// kappa(theta) = max(tan(theta/2), cot(theta/2)).
double basis_condition(double theta);

// Requires a general partition.
StabilityReport stability_report(const TridiagMatrix& M, double lambda, const RegionPartition& part);

}  // namespace tridiag_hira
