// tridiag-hira: command-line front end for the solvers and the experiment runners.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tridiag_hira/bessel.hpp"
#include "tridiag_hira/csv.hpp"
#include "tridiag_hira/eigensolve.hpp"
#include "tridiag_hira/errors.hpp"
#include "tridiag_hira/experiments.hpp"
#include "tridiag_hira/hira.hpp"
#include "tridiag_hira/profile.hpp"

namespace th = tridiag_hira;
namespace fs = std::filesystem;

namespace {

constexpr int kExitNumerical = 2;
constexpr int kExitUsage = 3;

// Wall time goes to stderr only; the CSV stays reproducible.
void report_times(const std::vector<th::ExperimentRecord>& records) {
    for (const auto& r : records)
        std::fprintf(stderr, "experiment %s %-10s k=%zu index=%zu  %.2e s\n", r.experiment.c_str(), r.method.c_str(),
                     r.k, r.index, r.wall_seconds);
}

void emit(const th::CsvTable& t, const std::string& out) {
    if (out.empty() || out == "-")
        t.write(std::cout);
    else
        t.write(fs::path(out));
}

th::CsvTable eigvec_table(const th::EigenvectorResult<double>& r) {
    th::CsvTable t({"index", "mantissa", "exponent_shift", "value", "region_tag"});
    for (std::size_t j = 1; j <= r.X.size(); ++j) {
        t.add_row({std::to_string(j), th::format_double(r.scaled.mantissa(j)),
                   std::to_string(r.scaled.exponent(j)), th::format_double(r.X[j - 1]),
                   th::tag_name(r.partition.tag(j))});
    }
    return t;
}

th::CsvTable invpow_table(const th::TridiagMatrix& M, const th::InversePowerTrace& tr) {
    const auto part = th::classify_regions(M, tr.sigma);
    th::CsvTable t({"index", "mantissa", "exponent_shift", "value", "region_tag"});
    for (std::size_t j = 1; j <= tr.Y.size(); ++j) {
        t.add_row({std::to_string(j), th::format_double(tr.Y[j - 1]), "0", th::format_double(tr.Y[j - 1]),
                   th::tag_name(part.tag(j))});
    }
    return t;
}

void write_experiment(const std::string& dir, const std::string& name, const th::CsvTable& t) {
    if (dir.empty()) {
        std::cout << "# " << name << '\n';
        t.write(std::cout);
        return;
    }
    fs::create_directories(dir);
    t.write(fs::path(dir) / name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High relative accuracy eigenvectors of tridiagonal matrices with unit off-diagonals"};
    app.require_subcommand(1);

    double a = 2.0, c = 100.0, tol = th::kDefaultBisectTol, lambda = 0.0;
    std::size_t n = 0, k = 0, iters = 30;
    std::string method = "hira", out;
    std::uint64_t seed = th::kDefaultSeed;

    auto* lam = app.add_subcommand("lambda", "k-th smallest eigenvalue by Sturm bisection");
    lam->add_option("--a", a, "power-law exponent")->required();
    lam->add_option("--c", c, "band limit")->required();
    lam->add_option("--n", n, "dimension")->required();
    lam->add_option("--k", k, "eigenvalue index, 1-based")->required();
    lam->add_option("--tol", tol, "relative bracket width");

    auto* ev = app.add_subcommand("eigvec", "eigenvector for a given eigenvalue");
    ev->add_option("--a", a)->required();
    ev->add_option("--c", c)->required();
    ev->add_option("--n", n)->required();
    ev->add_option("--lambda", lambda)->required();
    ev->add_option("--method", method)->check(CLI::IsMember({"hira", "simplified", "invpow"}));
    ev->add_option("--iters", iters, "inverse power iterations");
    ev->add_option("--seed", seed);
    ev->add_option("--out", out, "CSV path, stdout if omitted");

    double x = 0.0;
    std::size_t order = 0, N = 0;
    std::string bmethod = "both";
    auto* bes = app.add_subcommand("bessel", "J_0(x)..J_n(x)");
    bes->add_option("--x", x)->required()->check(CLI::PositiveNumber);
    bes->add_option("--n", order)->required();
    bes->add_option("--N", N, "start order, chosen automatically if omitted");
    bes->add_option("--method", bmethod)->check(CLI::IsMember({"backward", "hira", "both"}));
    bes->add_option("--out", out);

    int which = 1;
    std::string outdir;
    unsigned threads = 0;
    double exp_c = 100.0;
    auto* ex = app.add_subcommand("experiment", "reproduce an experiment and write CSV tables");
    ex->add_option("which", which)->required()->check(CLI::IsMember({1, 2, 3}));
    auto* c_opt = ex->add_option("--c", exp_c, "band limit (experiment 1) or largest x (experiment 3)");
    ex->add_option("--seed", seed);
    ex->add_option("--iters", iters);
    ex->add_option("--threads", threads);
    ex->add_option("--out", outdir, "output directory, stdout if omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*lam) {
            const th::TridiagMatrix M(th::power_law_profile(a, c, n));
            if (k < 1 || k > n) throw std::invalid_argument("--k must lie in [1, n]");
            std::printf("%.17g\n", th::sturm_bisect(M, k, tol));
        } else if (*ev) {
            const th::TridiagMatrix M(th::power_law_profile(a, c, n));
            // Every eigenvalue lies in (0, A_n + 2].
            if (!(lambda > 0.0 && lambda <= M.diag(n) + 2.0))
                throw th::NumericalError("eigvec", "lambda lies outside the spectrum bounds (0, A_n + 2]");
            if (method == "hira")
                emit(eigvec_table(th::hira_eigenvector(M, lambda)), out);
            else if (method == "simplified")
                emit(eigvec_table(th::simplified_eigenvector(M, lambda)), out);
            else
                emit(invpow_table(M, th::inverse_power(M, lambda, iters, 0.0, seed).second), out);
        } else if (*bes) {
            if (N == 0) N = th::choose_N(x, order);
            const bool both = bmethod == "both";
            th::BesselRun back, viah;
            if (bmethod != "hira") back = th::bessel_backward<double>(x, order, N);
            if (bmethod != "backward") viah = th::bessel_via_hira(x, order, N);
            std::vector<std::string> header{"order", "value"};
            if (both) header = {"order", "backward", "hira", "digits"};
            th::CsvTable t(header);
            for (std::size_t j = 0; j <= order; ++j) {
                if (both)
                    t.add_row({std::to_string(j), th::format_double(back.values[j]),
                               th::format_double(viah.values[j]),
                               th::format_double(th::agreement_digits(viah.values[j], back.values[j]))});
                else
                    t.add_row({std::to_string(j),
                               th::format_double(bmethod == "backward" ? back.values[j] : viah.values[j])});
            }
            emit(t, out);
        } else if (*ex) {
            th::ExperimentOptions opts{seed, iters, threads};
            if (which == 1) {
                const auto r = th::run_experiment1(exp_c, opts);
                write_experiment(outdir, "experiment1_summary.csv", th::records_table(r.records));
                write_experiment(outdir, "experiment1_coordinates.csv", th::coordinate_table(r.eigen));
                report_times(r.records);
            } else if (which == 2) {
                const auto r = th::run_experiment2(opts);
                write_experiment(outdir, "experiment2_summary.csv", th::records_table(r.records));
                report_times(r.records);
            } else {
                const auto r = th::run_experiment3(c_opt->count() ? exp_c : 1e4, opts);
                write_experiment(outdir, "experiment3_summary.csv", th::records_table(r.records));
                report_times(r.records);
            }
        }
    } catch (const th::NumericalError& e) {
        std::cerr << "numerical failure in " << e.stage() << ": " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
