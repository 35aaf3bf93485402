#include "tridiag_hira/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tridiag_hira/hira.hpp"
#include "tridiag_hira/profile.hpp"

namespace tridiag_hira {

template <class Real>
BesselRunT<Real> bessel_backward(double x, std::size_t n, std::size_t N) {
    using std::abs;
    using std::ldexp;
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("bessel_backward: x must be positive");
    if (!(N > n) || !(static_cast<double>(N) > x)) throw std::invalid_argument("bessel_backward: need N > n and N > x");

    // J~_k stored at position k+1.
    ScaledSequence<Real> J(1, N + 1);
    Real prev(0.0), cur(1.0);
    int e = 0;
    J.set(N + 1, cur, e);
    const Real rx(x);
    for (std::size_t k = N; k >= 1; --k) {
        const Real next = Real(2.0 * static_cast<double>(k)) / rx * cur - prev;
        prev = cur;
        cur = next;
        const double big = std::max(to_double(abs(prev)), to_double(abs(cur)));
        if (big > 0x1p512) {
            prev = ldexp(prev, -kRescaleBits);
            cur = ldexp(cur, -kRescaleBits);
            e += kRescaleBits;
        }
        J.set(k, cur, e);
    }

    ScaledAccumulator<Real> acc;
    acc.add(J.mantissa(1) * J.mantissa(1), 2 * J.exponent(1));
    for (std::size_t k = 1; k <= N; ++k) acc.add(J.mantissa(k + 1) * J.mantissa(k + 1) * 2.0, 2 * J.exponent(k + 1));
    const ScaledValue<Real> d = scaled_sqrt(acc.total());

    BesselRunT<Real> run;
    run.x = x;
    run.n = n;
    run.N = N;
    run.normalizer = d;
    run.values.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        run.values[k] = ScaledValue<Real>{J.mantissa(k + 1) / d.mantissa, J.exponent(k + 1) - d.exponent}.value();
    return run;
}

template BesselRunT<double> bessel_backward<double>(double, std::size_t, std::size_t);
template BesselRunT<DDReal> bessel_backward<DDReal>(double, std::size_t, std::size_t);

BesselRun bessel_via_hira(double x, std::size_t n, std::size_t N) {
    if (!(N > n) || !(static_cast<double>(N) > x)) throw std::invalid_argument("bessel_via_hira: need N > n and N > x");
    const TridiagMatrix M(bessel_profile(x, N));
    // Same expression as A_{N+1}, so lambda - A_{N+1} is exactly zero.
    const double lambda = to_double(DDReal(2.0) + DDReal(2.0 * static_cast<double>(N + 1)) / DDReal(x));
    const EigenvectorResult<double> res = hira_eigenvector(M, lambda);
    BesselRun run;
    run.x = x;
    run.n = n;
    run.N = N;
    run.normalizer = res.d;
    run.fallback = res.fallback;
    run.values.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) run.values[k] = res.X[N - k];
    return run;
}

double agreement_digits(double a, double b) {
    if (a == b) return 17.0;
    if (b == 0.0) return 0.0;
    return std::min(17.0, -std::log10(std::abs(a - b) / std::abs(b)));
}

std::size_t choose_N(double x, std::size_t n) {
    if (!(x > 0.0)) throw std::invalid_argument("choose_N: x must be positive");
    const std::size_t base = std::max<std::size_t>(n, static_cast<std::size_t>(std::ceil(x)));
    const std::size_t margin =
        std::max<std::size_t>(15, static_cast<std::size_t>(std::ceil(1.9 * std::cbrt(x))) + 50);
    std::size_t N = base + margin;
    for (int attempt = 0; attempt < 32; ++attempt) {
        const BesselRun a = bessel_backward<double>(x, n, N);
        const BesselRun b = bessel_backward<double>(x, n, N + 20);
        double peak = 0.0;
        for (double v : b.values) peak = std::max(peak, std::abs(v));
        // Same orders the experiment compares across paired N.
        bool stable = true;
        for (std::size_t k : {std::size_t{0}, std::min<std::size_t>(1, n), std::min<std::size_t>(2, n), n}) {
            // Orders below x oscillate; near a zero only absolute agreement is meaningful.
            const double scale = static_cast<double>(k) >= x ? std::abs(b.values[k])
                                                              : std::max(std::abs(b.values[k]), 1e-2 * peak);
            stable = stable && std::abs(a.values[k] - b.values[k]) <= 1e-13 * scale;
        }
        if (stable) return N;
        N += std::max<std::size_t>(20, N / 8);
    }
    return N;
}

}  // namespace tridiag_hira
