#include "tridiag_hira/profile.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tridiag_hira {

namespace {

void require_increasing(const std::vector<double>& f) {
    if (f.empty()) throw std::invalid_argument("profile must be non-empty");
    if (!(f[0] > 0.0) || !std::isfinite(f[0]))
        throw std::invalid_argument("profile must start with a positive finite value");
    for (std::size_t j = 1; j < f.size(); ++j) {
        if (!(f[j] > f[j - 1]) || !std::isfinite(f[j]))
            throw std::invalid_argument("profile must be strictly increasing at index " +
                                        std::to_string(j + 1));
    }
}

bool is_small_integer(double a) { return a == std::floor(a) && a >= 1.0 && a <= 64.0; }

DDReal dd_pow(DDReal base, int e) {
    DDReal r(1.0);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::runtime_error io_error(const std::filesystem::path& path, const std::string& what) {
    return std::runtime_error(path.string() + ": " + what);
}

}  // namespace

DiagonalProfile DiagonalProfile::from_values(std::vector<double> f) {
    require_increasing(f);
    DiagonalProfile p;
    p.f_ = std::move(f);
    return p;
}

DiagonalProfile DiagonalProfile::relaxed_for_testing(std::vector<double> f) {
    if (f.empty()) throw std::invalid_argument("profile must be non-empty");
    DiagonalProfile p;
    p.f_ = std::move(f);
    return p;
}

std::vector<DDReal> DiagonalProfile::values_dd() const {
    std::vector<DDReal> out(f_.size());
    if (power_law_ && is_small_integer(power_law_->a)) {
        const int a = static_cast<int>(power_law_->a);
        const DDReal c(power_law_->c);
        for (std::size_t j = 0; j < f_.size(); ++j)
            out[j] = dd_pow(DDReal(static_cast<double>(j + 1)) / c, a);
    } else if (bessel_) {
        const DDReal x(bessel_->x);
        for (std::size_t j = 0; j < f_.size(); ++j)
            out[j] = DDReal(2.0 * static_cast<double>(j + 1)) / x;
    } else {
        for (std::size_t j = 0; j < f_.size(); ++j) out[j] = DDReal(f_[j]);
    }
    return out;
}

DiagonalProfile power_law_profile(double a, double c, std::size_t n) {
    if (!(a >= 1.0)) throw std::invalid_argument("power law exponent must be >= 1");
    if (!(c >= 1.0)) throw std::invalid_argument("power law scale must be >= 1");
    if (n < 2) throw std::invalid_argument("dimension must be >= 2");
    DiagonalProfile p;
    p.power_law_ = PowerLawParams{a, c};
    p.f_.resize(n);
    if (is_small_integer(a)) {
        const auto dd = p.values_dd();
        for (std::size_t j = 0; j < n; ++j) p.f_[j] = to_double(dd[j]);
    } else {
        for (std::size_t j = 0; j < n; ++j)
            p.f_[j] = std::pow(static_cast<double>(j + 1) / c, a);
    }
    require_increasing(p.f_);
    return p;
}

DiagonalProfile bessel_profile(double x, std::size_t N) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("bessel argument must be positive");
    if (N < 1) throw std::invalid_argument("bessel half-dimension must be >= 1");
    DiagonalProfile p;
    p.bessel_ = BesselParams{x, N};
    p.f_.resize(2 * N + 1);
    const auto dd = p.values_dd();
    for (std::size_t j = 0; j < p.f_.size(); ++j) p.f_[j] = to_double(dd[j]);
    require_increasing(p.f_);
    return p;
}

TridiagMatrix::TridiagMatrix(DiagonalProfile profile) : profile_(std::move(profile)) {
    const auto f_dd = profile_.values_dd();
    diag_.resize(f_dd.size());
    diag_dd_.resize(f_dd.size());
    for (std::size_t j = 0; j < f_dd.size(); ++j) {
        diag_dd_[j] = DDReal(2.0) + f_dd[j];
        diag_[j] = to_double(diag_dd_[j]);
    }
}

void write_profile_text(const DiagonalProfile& p, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error(path, "cannot open for writing");
    char buf[40];
    for (double v : p.values()) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        out << buf;
    }
    if (!out) throw io_error(path, "write failed");
}

DiagonalProfile read_profile_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error(path, "cannot open for reading");
    std::vector<double> f;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        char* end = nullptr;
        const double v = std::strtod(line.c_str(), &end);
        if (end == line.c_str()) throw io_error(path, "bad number on line " + std::to_string(lineno));
        f.push_back(v);
    }
    return DiagonalProfile::from_values(std::move(f));
}

void write_profile_binary(const DiagonalProfile& p, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error(path, "cannot open for writing");
    for (double v : p.values()) {
        std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
        unsigned char bytes[8];
        for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
        out.write(reinterpret_cast<const char*>(bytes), 8);
    }
    if (!out) throw io_error(path, "write failed");
}

DiagonalProfile read_profile_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error(path, "cannot open for reading");
    std::vector<double> f;
    unsigned char bytes[8];
    while (in.read(reinterpret_cast<char*>(bytes), 8)) {
        std::uint64_t bits = 0;
        for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
        f.push_back(std::bit_cast<double>(bits));
    }
    if (in.gcount() != 0) throw io_error(path, "trailing partial value");
    return DiagonalProfile::from_values(std::move(f));
}

}  // namespace tridiag_hira
