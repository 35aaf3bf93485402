#include "tridiag_hira/hira.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tridiag_hira/errors.hpp"

namespace tridiag_hira {

namespace {

constexpr double kPi = std::numbers::pi;

// (-1)^{a-b} for a >= b.
template <class Real>
Real alternating(std::size_t a, std::size_t b) {
    return ((a - b) % 2 == 0) ? Real(1.0) : Real(-1.0);
}

template <class Real>
double magnitude(const Real& v) {
    using std::abs;
    return to_double(abs(v));
}

template <class Real>
void rescale_pair(Real& prev, Real& cur, int& e) {
    using std::ldexp;
    const double big = std::max(magnitude(prev), magnitude(cur));
    if (big > 0x1p512) {
        prev = ldexp(prev, -kRescaleBits);
        cur = ldexp(cur, -kRescaleBits);
        e += kRescaleBits;
    } else if (big < 0x1p-512 && big > 0.0) {
        prev = ldexp(prev, kRescaleBits);
        cur = ldexp(cur, kRescaleBits);
        e -= kRescaleBits;
    }
}

template <class Real>
void require_finite(const Real& v, const char* stage, std::size_t j) {
    if (!isfinite(v)) throw NumericalError(stage, "non-finite value at index " + std::to_string(j));
}

template <class Real>
ScaledValue<Real> square(const ScaledValue<Real>& v) {
    return {v.mantissa * v.mantissa, 2 * v.exponent};
}

// Compares |a| and |b| after bringing both to a common exponent.
template <class Real>
bool abs_ge(const ScaledValue<Real>& a, const ScaledValue<Real>& b) {
    using std::abs;
    const int e = std::max(a.exponent, b.exponent);
    return abs(a.at_exponent(e)) >= abs(b.at_exponent(e));
}

template <class Real>
void normalize_into(EigenvectorResult<Real>& res, const ScaledSequence<Real>& x, const ScaledValue<Real>& d) {
    const std::size_t n = x.size();
    res.d = d;
    res.scaled = ScaledSequence<Real>(1, n);
    res.X.resize(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const ScaledValue<Real> v{x.mantissa(j) / d.mantissa, x.exponent(j) - d.exponent};
        res.scaled.set(j, v);
        res.X[j - 1] = v.value();
    }
}

}  // namespace

const char* tag_name(RegionTag tag) {
    switch (tag) {
        case RegionTag::G: return "G";
        case RegionTag::OL: return "OL";
        case RegionTag::O: return "O";
        case RegionTag::OR: return "OR";
        case RegionTag::D: return "D";
    }
    return "?";
}

const char* method_name(Method m) {
    switch (m) {
        case Method::hira: return "hira";
        case Method::simplified: return "simplified";
        case Method::inverse_power: return "invpow";
    }
    return "?";
}

std::string RegionPartition::degeneracy() const {
    std::string out;
    auto add = [&](const char* s) {
        if (!out.empty()) out += ", ";
        out += s;
    };
    if (growth_empty) add("empty growth region");
    if (decay_empty) add("empty decay region");
    if (!growth_empty && left_run_missing) add("no forward run into the oscillatory region");
    if (!decay_empty && right_run_missing) add("no backward run into the oscillatory region");
    if (order_violated) add("index ordering violated");
    return out;
}

RegionTag RegionPartition::tag(std::size_t j) const {
    if (j <= k) return RegionTag::G;
    if (j > m) return RegionTag::D;
    if (general()) {
        if (j <= k + l) return RegionTag::OL;
        if (j > m - r) return RegionTag::OR;
    }
    return RegionTag::O;
}

template <class Real>
RegionPartition classify_regions(std::span<const Real> diag, const Real& lambda) {
    RegionPartition part;
    const std::size_t n = diag.size();
    part.n = n;
    for (std::size_t j = 1; j <= n; ++j) {
        const Real t = lambda - diag[j - 1];
        if (t >= Real(2.0)) part.k = j;
        if (t >= Real(0.0)) part.p = j;
        if (t > Real(-2.0)) part.m = j;
    }
    part.growth_empty = part.k == 0;
    part.decay_empty = part.m == n;
    auto td = [&](std::size_t j) { return to_double(lambda - diag[j - 1]); };

    const std::size_t k = part.k, p = part.p, m = part.m;
    if (!part.growth_empty) {
        for (std::size_t L = 3; k + L + 1 <= p; ++L) {
            const double c = std::cos(kPi / static_cast<double>(2 * L - 1));
            if (!(td(k + L + 1) / 2.0 > c)) break;
            part.l = L;
            part.l_exact = k + L + 2 <= n && td(k + L + 2) / 2.0 <= c;
        }
    }
    if (!part.decay_empty) {
        for (std::size_t R = 3; m >= p + 1 + R; ++R) {
            const double c = std::cos(kPi / static_cast<double>(2 * R - 1));
            if (!(-td(m - R) / 2.0 > c)) break;
            part.r = R;
            part.r_exact = m >= R + 2 && -td(m - R - 1) / 2.0 <= c;
        }
    }
    part.left_run_missing = part.l == 0;
    part.right_run_missing = part.r == 0;
    if (part.l != 0 && part.r != 0) {
        const std::size_t l = part.l, r = part.r;
        part.order_violated = !(k >= 1 && k + l + 1 <= p && p + 1 <= m - r && m < n);
    }
    return part;
}

template RegionPartition classify_regions<double>(std::span<const double>, const double&);
template RegionPartition classify_regions<DDReal>(std::span<const DDReal>, const DDReal&);

RegionPartition classify_regions(const TridiagMatrix& M, double lambda) {
    return classify_regions<double>(M.diagonal(), lambda);
}

template <class Real>
ScaledSequence<Real> recur_forward(std::span<const Real> diag, const Real& lambda, std::size_t stop) {
    const std::size_t n = diag.size();
    if (stop < 1 || stop > n) throw std::out_of_range("recur_forward: stop out of range");
    ScaledSequence<Real> seq(1, stop);
    Real prev(0.0), cur(1.0);
    int e = 0;
    seq.set(1, cur, e);
    for (std::size_t j = 1; j < stop; ++j) {
        const Real next = (lambda - diag[j - 1]) * cur - prev;
        prev = cur;
        cur = next;
        rescale_pair(prev, cur, e);
        require_finite(cur, "recur_forward", j + 1);
        seq.set(j + 1, cur, e);
    }
    return seq;
}

template <class Real>
ScaledSequence<Real> recur_backward(std::span<const Real> diag, const Real& lambda, std::size_t stop) {
    const std::size_t n = diag.size();
    if (stop < 1 || stop > n) throw std::out_of_range("recur_backward: stop out of range");
    ScaledSequence<Real> seq(stop, n);
    Real prev(0.0), cur(1.0);
    int e = 0;
    seq.set(n, cur, e);
    for (std::size_t j = n; j > stop; --j) {
        const Real next = (lambda - diag[j - 1]) * cur - prev;
        prev = cur;
        cur = next;
        rescale_pair(prev, cur, e);
        require_finite(cur, "recur_backward", j - 1);
        seq.set(j - 1, cur, e);
    }
    return seq;
}

template <class Real>
ScaledSequence<Real> grow_forward(std::span<const Real> diag, const Real& lambda, std::size_t stop) {
    ScaledSequence<Real> seq = recur_forward(diag, lambda, stop);
    for (std::size_t j = 1; j <= stop; ++j) {
        if (!(seq.mantissa(j) > Real(0.0)))
            throw NumericalError("grow_forward", "coordinate " + std::to_string(j) +
                                                     " is not positive; lambda is inconsistent with the partition");
    }
    return seq;
}

template <class Real>
ScaledSequence<Real> decay_backward(std::span<const Real> diag, const Real& lambda, std::size_t stop) {
    const std::size_t n = diag.size();
    std::size_t m = 0;
    for (std::size_t j = 1; j <= n; ++j)
        if (lambda - diag[j - 1] > Real(-2.0)) m = j;
    ScaledSequence<Real> seq = recur_backward(diag, lambda, stop);
    const std::size_t anchor = std::clamp(m, stop, n);
    if (seq.mantissa(anchor) < Real(0.0)) {
        ScaledSequence<Real> flipped(stop, n);
        for (std::size_t j = stop; j <= n; ++j) flipped.set(j, -seq.mantissa(j), seq.exponent(j));
        seq = std::move(flipped);
    }
    for (std::size_t j = stop; j <= n; ++j) {
        const bool positive = seq.mantissa(j) > Real(0.0);
        const bool want_positive = (j <= anchor) ? (anchor - j) % 2 == 0 : (j - anchor) % 2 == 0;
        if (positive != want_positive || seq.mantissa(j) == Real(0.0))
            throw NumericalError("decay_backward", "sign pattern broken at coordinate " + std::to_string(j) +
                                                       "; lambda is inconsistent with the partition");
    }
    return seq;
}

#define TRIDIAG_HIRA_INSTANTIATE_RECURRENCES(Real)                                                      \
    template ScaledSequence<Real> recur_forward<Real>(std::span<const Real>, const Real&, std::size_t);  \
    template ScaledSequence<Real> recur_backward<Real>(std::span<const Real>, const Real&, std::size_t); \
    template ScaledSequence<Real> grow_forward<Real>(std::span<const Real>, const Real&, std::size_t);   \
    template ScaledSequence<Real> decay_backward<Real>(std::span<const Real>, const Real&, std::size_t);
TRIDIAG_HIRA_INSTANTIATE_RECURRENCES(double)
TRIDIAG_HIRA_INSTANTIATE_RECURRENCES(DDReal)
#undef TRIDIAG_HIRA_INSTANTIATE_RECURRENCES

template <class Real>
Complex<Real> alpha_init(const Real& x, const Real& y, const Real& cos_theta, const Real& sin_theta) {
    if (!(sin_theta > Real(0.0))) throw NumericalError("alpha_init", "singular basis (theta is 0 or pi)");
    // i/(2 sin t) (e^{-it} x - y), written out in real and imaginary parts.
    return {x * 0.5, (x * cos_theta - y) / (sin_theta * 2.0)};
}

template Complex<double> alpha_init<double>(const double&, const double&, const double&, const double&);
template Complex<DDReal> alpha_init<DDReal>(const DDReal&, const DDReal&, const DDReal&, const DDReal&);

Complex<double> alpha_init(double x, double y, double theta) {
    if (!(theta > 0.0 && theta < kPi)) throw NumericalError("alpha_init", "theta must lie in (0, pi)");
    return alpha_init<double>(x, y, std::cos(theta), std::sin(theta));
}

template <class Real>
std::vector<Complex<Real>> rotation_sweep(std::span<const Real> cosines, std::span<const Real> sines,
                                          std::span<const Real> drops, const Complex<Real>& c0) {
    const std::size_t count = cosines.size();
    if (sines.size() != count || (count > 0 && drops.size() + 1 < count))
        throw std::invalid_argument("rotation_sweep: inconsistent lengths");
    std::vector<Complex<Real>> out(count);
    if (count == 0) return out;
    out[0] = c0;
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const Complex<Real> beta = out[i] * Complex<Real>(cosines[i], sines[i]);
        // q Im(beta e^{i psi}) = (drop / sin t') (Re beta + Im beta cot psi), where
        // cot psi = (cos t + cos t') / (sin t + sin t').
        const Real cot_psi = (cosines[i] + cosines[i + 1]) / (sines[i] + sines[i + 1]);
        const Real corr = drops[i] / sines[i + 1] * (beta.re + beta.im * cot_psi);
        out[i + 1] = {beta.re, beta.im - corr};
        if (!isfinite(out[i + 1].re) || !isfinite(out[i + 1].im))
            throw NumericalError("sweep", "non-finite coefficient at step " + std::to_string(i + 1));
    }
    return out;
}

template std::vector<Complex<double>> rotation_sweep<double>(std::span<const double>, std::span<const double>,
                                                             std::span<const double>, const Complex<double>&);
template std::vector<Complex<DDReal>> rotation_sweep<DDReal>(std::span<const DDReal>, std::span<const DDReal>,
                                                             std::span<const DDReal>, const Complex<DDReal>&);

namespace {

std::vector<Complex<double>> sweep_from_angles(std::span<const double> angles, const Complex<double>& c0) {
    std::vector<double> c(angles.size()), s(angles.size()), drops(angles.empty() ? 0 : angles.size() - 1);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] > 0.0 && angles[i] < kPi)) throw NumericalError("sweep", "angle outside (0, pi)");
        c[i] = std::cos(angles[i]);
        s[i] = std::sin(angles[i]);
    }
    for (std::size_t i = 0; i + 1 < angles.size(); ++i) drops[i] = c[i] - c[i + 1];
    return rotation_sweep<double>(c, s, drops, c0);
}

}  // namespace

std::vector<Complex<double>> alpha_sweep(std::span<const double> thetas, const Complex<double>& alpha0) {
    return sweep_from_angles(thetas, alpha0);
}

std::vector<Complex<double>> gamma_sweep(std::span<const double> phis, const Complex<double>& gamma0) {
    return sweep_from_angles(phis, gamma0);
}

template <class Real>
double OscillatorySweep<Real>::angle(std::size_t i) const {
    return std::atan2(to_double(sines[i]), to_double(cosines[i]));
}

template <class Real>
double OscillatorySweep<Real>::radius(std::size_t i) const {
    using std::sqrt;
    return std::ldexp(to_double(sqrt(coeffs[i].norm())), exponent);
}

template <class Real>
double OscillatorySweep<Real>::phase(std::size_t i) const {
    return std::atan2(to_double(coeffs[i].im), to_double(coeffs[i].re));
}

template <class Real>
Real OscillatorySweep<Real>::norm_summand(std::size_t i) const {
    const Complex<Real>& c = coeffs[i];
    const Complex<Real> c2e = (c * c) * Complex<Real>(cosines[i], sines[i]);
    return (c.norm() + cosines[i] * c2e.re) * 4.0;
}

template struct OscillatorySweep<double>;
template struct OscillatorySweep<DDReal>;

template <class Real>
GlueResult<Real> glue(const ScaledValue<Real>& x_p, const ScaledValue<Real>& x_p1, const ScaledValue<Real>& xhat_p,
                      const ScaledValue<Real>& xhat_p1) {
    GlueResult<Real> g;
    const ScaledValue<Real> a = x_p * xhat_p, b = x_p1 * xhat_p1;
    const int e = std::max(a.exponent, b.exponent);
    g.flipped = a.at_exponent(e) + b.at_exponent(e) < Real(0.0);
    g.used_p = abs_ge(xhat_p, xhat_p1);
    const ScaledValue<Real>& num = g.used_p ? x_p : x_p1;
    const ScaledValue<Real>& den = g.used_p ? xhat_p : xhat_p1;
    if (den.mantissa == Real(0.0)) throw NumericalError("glue", "both overlap coordinates of the right half vanish");
    g.s = {num.mantissa / den.mantissa, num.exponent - den.exponent};
    if (g.s.mantissa == Real(0.0) || !isfinite(g.s.mantissa))
        throw NumericalError("glue", "scale is zero or non-finite");
    return g;
}

template GlueResult<double> glue<double>(const ScaledValue<double>&, const ScaledValue<double>&,
                                         const ScaledValue<double>&, const ScaledValue<double>&);
template GlueResult<DDReal> glue<DDReal>(const ScaledValue<DDReal>&, const ScaledValue<DDReal>&,
                                         const ScaledValue<DDReal>&, const ScaledValue<DDReal>&);

double glue(double x_p, double x_p1, double xhat_p, double xhat_p1) {
    return glue<double>({x_p, 0}, {x_p1, 0}, {xhat_p, 0}, {xhat_p1, 0}).s.value();
}

template <class Real>
EigenvectorResult<Real> simplified_eigenvector(std::span<const Real> diag, const Real& lambda) {
    const std::size_t n = diag.size();
    if (n == 0) throw std::invalid_argument("simplified_eigenvector: empty matrix");
    EigenvectorResult<Real> res;
    res.method = Method::simplified;
    res.lambda = lambda;
    res.partition = classify_regions(diag, lambda);
    if (n == 1) {
        ScaledSequence<Real> x(1, 1);
        x.set(1, Real(1.0), 0);
        normalize_into(res, x, {Real(1.0), 0});
        return res;
    }
    const std::size_t p = std::clamp<std::size_t>(res.partition.p, 1, n - 1);
    const ScaledSequence<Real> fwd = recur_forward(diag, lambda, p + 1);
    const ScaledSequence<Real> bwd = recur_backward(diag, lambda, p);
    const GlueResult<Real> g = glue(fwd.at(p), fwd.at(p + 1), bwd.at(p), bwd.at(p + 1));
    res.s = g.s;

    ScaledSequence<Real> x(1, n);
    ScaledAccumulator<Real> acc;
    for (std::size_t j = 1; j <= n; ++j) {
        const ScaledValue<Real> v = (j <= p + 1) ? fwd.at(j) : g.s * bwd.at(j);
        require_finite(v.mantissa, "simplified_eigenvector", j);
        x.set(j, v);
        acc.add(square(v));
    }
    normalize_into(res, x, scaled_sqrt(acc.total()));
    return res;
}

template <class Real>
EigenvectorResult<Real> hira_eigenvector(std::span<const Real> diag, const Real& lambda) {
    using std::sqrt;
    const std::size_t n = diag.size();
    if (n == 0) throw std::invalid_argument("hira_eigenvector: empty matrix");
    const RegionPartition part = classify_regions(diag, lambda);
    if (!part.general()) {
        EigenvectorResult<Real> res = simplified_eigenvector(diag, lambda);
        res.fallback = true;
        res.fallback_reason = part.degeneracy();
        return res;
    }
    const std::size_t k = part.k, l = part.l, p = part.p, m = part.m, r = part.r;
    auto A = [&](std::size_t j) -> const Real& { return diag[j - 1]; };
    auto t = [&](std::size_t j) { return lambda - A(j); };

    EigenvectorResult<Real> res;
    res.method = Method::hira;
    res.lambda = lambda;
    res.partition = part;
    const double kl = static_cast<double>(l), kr = static_cast<double>(r);
    res.predicted_rel_bound = ScalarTraits<Real>::unit_roundoff * (kl * kl * kl * kl + kr * kr * kr * kr);

    // Left half: recurrence up to k+l-1, then alpha_{k+l-2} .. alpha_p.
    const ScaledSequence<Real> fwd = grow_forward(diag, lambda, k + l - 1);
    OscillatorySweep<Real>& L = res.left_sweep;
    const std::size_t a0 = k + l - 2;
    const std::size_t na = p - a0 + 1;
    L.left = true;
    L.first_index = a0;
    L.cosines.resize(na);
    L.sines.resize(na);
    std::vector<Real> drops(na - 1);
    for (std::size_t i = 0; i < na; ++i) {
        const std::size_t j = a0 + i;
        const Real c = t(j + 1) * 0.5;
        L.cosines[i] = c;
        L.sines[i] = sqrt((Real(1.0) - c) * (Real(1.0) + c));
        if (i + 1 < na) drops[i] = (A(j + 2) - A(j + 1)) * 0.5;
    }
    L.exponent = fwd.exponent(a0 + 1);
    L.coeffs = rotation_sweep<Real>(L.cosines, L.sines, drops,
                                    alpha_init(fwd.at(a0).at_exponent(L.exponent), fwd.mantissa(a0 + 1),
                                               L.cosines[0], L.sines[0]));

    // Right half: recurrence down to m-r+2, then gamma_{m-r+1} .. gamma_{p-1}.
    // gamma_j encodes the pair (u_{j+2}, u_{j+1}) with u_i = (-1)^{m-i} xhat_i.
    const ScaledSequence<Real> bwd = decay_backward(diag, lambda, m - r + 2);
    OscillatorySweep<Real>& R = res.right_sweep;
    const std::size_t g0 = m - r + 1;
    const std::size_t ng = g0 - p + 2;
    R.left = false;
    R.first_index = g0;
    R.cosines.resize(ng);
    R.sines.resize(ng);
    drops.assign(ng - 1, Real(0.0));
    for (std::size_t i = 0; i < ng; ++i) {
        const std::size_t j = g0 - i;
        const Real c = -t(j + 1) * 0.5;
        R.cosines[i] = c;
        R.sines[i] = sqrt((Real(1.0) - c) * (Real(1.0) + c));
        if (i + 1 < ng) drops[i] = (A(j + 1) - A(j)) * 0.5;
    }
    R.exponent = bwd.exponent(m - r + 2);
    const Real u_hi = alternating<Real>(m, m - r + 3) * bwd.at(m - r + 3).at_exponent(R.exponent);
    const Real u_lo = alternating<Real>(m, m - r + 2) * bwd.mantissa(m - r + 2);
    R.coeffs = rotation_sweep<Real>(R.cosines, R.sines, drops, alpha_init(u_hi, u_lo, R.cosines[0], R.sines[0]));

    // Coordinates of each half.
    ScaledSequence<Real> x(1, n);
    for (std::size_t j = 1; j <= k + l - 1; ++j) x.set(j, fwd.at(j));
    for (std::size_t j = k + l; j <= p; ++j) x.set(j, L.coeffs[j - a0].re * 2.0, L.exponent);
    {
        const Complex<Real> last = L.coeffs[na - 1] * Complex<Real>(L.cosines[na - 1], L.sines[na - 1]);
        x.set(p + 1, last.re * 2.0, L.exponent);
    }
    ScaledSequence<Real> xh(p, n);
    for (std::size_t j = m - r + 2; j <= n; ++j) xh.set(j, bwd.at(j));
    for (std::size_t idx = m - r + 1; idx >= p + 1; --idx)
        xh.set(idx, alternating<Real>(m, idx) * R.coeffs[g0 + 2 - idx].re * 2.0, R.exponent);
    {
        const Complex<Real> last = R.coeffs[ng - 1] * Complex<Real>(R.cosines[ng - 1], R.sines[ng - 1]);
        xh.set(p, alternating<Real>(m, p) * last.re * 2.0, R.exponent);
    }

    // Glue.
    const GlueResult<Real> g = glue(x.at(p), x.at(p + 1), xh.at(p), xh.at(p + 1));
    res.s = g.s;
    for (std::size_t j = p + 2; j <= n; ++j) x.set(j, g.s * xh.at(j));
    for (std::size_t j = 1; j <= n; ++j) require_finite(x.mantissa(j), "hira_eigenvector", j);

    // Norm: squared coordinates outside the sweeps, and the sweep sums with
    // their boundary coordinates counted half.
    auto sweep_sum = [](const OscillatorySweep<Real>& sw, std::size_t from, std::size_t to) {
        Real sum(0.0);
        for (std::size_t i = from; i <= to; ++i) {
            const Real term = sw.norm_summand(i);
            if (term < Real(0.0)) {
                if (to_double(-term) > 1e-10 * to_double(sw.coeffs[i].norm()) * 4.0)
                    throw NumericalError("norm_factor", "negative summand in the oscillatory norm");
                continue;
            }
            sum += term;
        }
        return ScaledValue<Real>{sum, 2 * sw.exponent};
    };
    res.d_l = sweep_sum(L, 1, na - 1);
    res.d_r = sweep_sum(R, 0, ng - 2);

    ScaledAccumulator<Real> acc;
    for (std::size_t j = 1; j <= k + l - 2; ++j) acc.add(square(x.at(j)));
    for (std::size_t j = m - r + 4; j <= n; ++j) acc.add(square(x.at(j)));
    const ScaledValue<Real> half{Real(0.5), 0};
    acc.add(half * square(x.at(k + l - 1)));
    acc.add(half * square(x.at(m - r + 3)));
    acc.add(half * res.d_l);
    acc.add(half * square(g.s) * res.d_r);
    normalize_into(res, x, scaled_sqrt(acc.total()));
    return res;
}

#define TRIDIAG_HIRA_INSTANTIATE_SOLVERS(Real)                                                                   \
    template EigenvectorResult<Real> hira_eigenvector<Real>(std::span<const Real>, const Real&);       \
    template EigenvectorResult<Real> simplified_eigenvector<Real>(std::span<const Real>, const Real&);
TRIDIAG_HIRA_INSTANTIATE_SOLVERS(double)
TRIDIAG_HIRA_INSTANTIATE_SOLVERS(DDReal)
#undef TRIDIAG_HIRA_INSTANTIATE_SOLVERS

EigenvectorResult<double> hira_eigenvector(const TridiagMatrix& M, double lambda) {
    return hira_eigenvector<double>(M.diagonal(), lambda);
}
EigenvectorResult<double> simplified_eigenvector(const TridiagMatrix& M, double lambda) {
    return simplified_eigenvector<double>(M.diagonal(), lambda);
}
EigenvectorResult<DDReal> hira_eigenvector_dd(const TridiagMatrix& M, const DDReal& lambda) {
    return hira_eigenvector<DDReal>(M.diagonal_dd(), lambda);
}
EigenvectorResult<DDReal> simplified_eigenvector_dd(const TridiagMatrix& M, const DDReal& lambda) {
    return simplified_eigenvector<DDReal>(M.diagonal_dd(), lambda);
}

double basis_condition(double theta) {
    const double half = 0.5 * theta;
    const double tn = std::tan(half);
    return std::max(tn, 1.0 / tn);
}

StabilityReport stability_report(const TridiagMatrix& M, double lambda, const RegionPartition& part) {
    if (!part.general()) throw std::invalid_argument("stability_report: partition is degenerate");
    const std::size_t k = part.k, l = part.l, p = part.p, m = part.m, r = part.r;
    auto A = [&](std::size_t j) { return M.diag(j); };
    StabilityReport rep;
    rep.init_condition_left = 4.0 / (A(k + l) - A(k));
    rep.init_condition_right = 4.0 / (A(m) - A(m - r));
    for (std::size_t j = k + l - 1; j <= p; ++j)
        rep.alpha_step_ratios.push_back((A(j + 2) - A(j + 1)) / (A(j + 1) - A(k + 1)));
    for (std::size_t j = p - 1; j <= m - r + 1; ++j)
        rep.gamma_step_ratios.push_back((A(j + 2) - A(j + 1)) / (A(m) - A(j + 1)));
    rep.max_alpha_step_ratio = *std::max_element(rep.alpha_step_ratios.begin(), rep.alpha_step_ratios.end());
    rep.max_gamma_step_ratio = *std::max_element(rep.gamma_step_ratios.begin(), rep.gamma_step_ratios.end());
    rep.alpha_bound_ok = rep.max_alpha_step_ratio < 0.5;
    rep.gamma_bound_ok = rep.max_gamma_step_ratio < 0.5;
    rep.kappa_left = basis_condition(std::acos((lambda - A(k + l - 1)) / 2.0));
    rep.kappa_right = basis_condition(std::acos((A(m - r + 2) - lambda) / 2.0));
    const double eps = ScalarTraits<double>::unit_roundoff;
    const double dl = static_cast<double>(l), dr = static_cast<double>(r);
    rep.predicted_rel_bound = eps * (dl * dl * dl * dl + dr * dr * dr * dr);
    if (const auto& pl = M.profile().power_law())
        rep.asymptotic_prediction = eps * std::pow(pl->c, 4.0 * pl->a / (pl->a + 2.0));
    return rep;
}

}  // namespace tridiag_hira
