#pragma once
// Reproduction harness: error statistics against a double-double reference,
// and the runners behind the `experiment` subcommand.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tridiag_hira/bessel.hpp"
#include "tridiag_hira/csv.hpp"
#include "tridiag_hira/eigensolve.hpp"
#include "tridiag_hira/hira.hpp"
#include "tridiag_hira/profile.hpp"

namespace tridiag_hira {

struct ErrorStats {
    double rel_first = 0.0;
    double max_abs = 0.0;
    double max_rel = 0.0;
    double avg_abs = 0.0;
    double avg_rel = 0.0;
    std::size_t count = 0;
    std::size_t excluded = 0;  // zero reference coordinates left out of the relative aggregates
};

ErrorStats error_stats(std::span<const double> approx, std::span<const DDReal> reference);
ErrorStats error_stats(std::span<const double> approx, std::span<const double> reference);

// Agreement between the double-double runs of the simplified and the
// principal algorithm, used before the simplified run serves as reference.
struct OracleCheck {
    double min_digits_growth_decay = 0.0;  // coordinate-wise, growth and decay regions
    double max_abs_diff = 0.0;             // over all coordinates
    bool trusted = false;                  // min_digits_growth_decay >= 25
};

OracleCheck check_oracle(const EigenvectorResult<DDReal>& simplified, const EigenvectorResult<DDReal>& hira);

// One eigenpair computed every available way.
struct EigenCase {
    TridiagMatrix M;
    std::size_t k = 0;
    double lambda = 0.0;
    DDReal lambda_dd;
    EigenvectorResult<double> hira;
    EigenvectorResult<double> simplified;
    double lambda_invpow = 0.0;
    InversePowerTrace invpow;
    EigenvectorResult<DDReal> ref_simplified;
    EigenvectorResult<DDReal> ref_hira;
    OracleCheck oracle;
    double seconds_hira = 0.0;
    double seconds_simplified = 0.0;
    double seconds_invpow = 0.0;

    std::span<const DDReal> reference() const { return ref_simplified.X; }
};

struct CaseOptions {
    double invpow_shift = 0.0;  // used when use_invpow_shift is set, otherwise lambda
    bool use_invpow_shift = false;
    std::size_t invpow_iters = 30;
    std::uint64_t seed = kDefaultSeed;
};

EigenCase solve_case(TridiagMatrix M, std::size_t k, double lambda, const CaseOptions& opts = {});

struct PartitionSummary {
    std::size_t k = 0, l = 0, p = 0, m = 0, r = 0;
    bool fallback = false;
};

struct ExperimentRecord {
    std::string experiment;
    double a = 0.0;
    double c = 0.0;
    std::size_t n = 0;
    std::size_t N = 0;  // Bessel start order, 0 otherwise
    std::size_t k = 0;  // eigenvalue index, 0 for Bessel rows
    double lambda = 0.0;
    std::string method;
    std::size_t index = 1;  // coordinate (1-based) or Bessel order reported in value
    double value = 0.0;
    double reference = 0.0;
    double rel_error = 0.0;
    ErrorStats stats;
    double residual = 0.0;
    double wall_seconds = 0.0;  // not written to CSV, so reruns stay byte-identical
    PartitionSummary partition;
};

// Header plus one row per record.
CsvTable records_table(const std::vector<ExperimentRecord>& records);
void csv_emit(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);

struct ExperimentOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t invpow_iters = 30;
    unsigned threads = 0;  // 0: TRIDIAG_HIRA_THREADS or hardware concurrency
};

// Thread count after applying TRIDIAG_HIRA_THREADS.
unsigned worker_threads(unsigned requested);

// Experiment 1: A_j = 2 + (j/c)^2, eigenvalue nearest
// 4 + (160/pi) ln(10)/c, inverse power shifted by that target.
std::size_t experiment1_dimension(double c);
double experiment1_target(double c);

struct Experiment1Result {
    double c = 0.0;
    double target = 0.0;
    EigenCase eigen;
    std::vector<ExperimentRecord> records;
};
Experiment1Result run_experiment1(double c, const ExperimentOptions& opts = {});

// One row per coordinate: the computed values beside the reference, with errors.
CsvTable coordinate_table(const EigenCase& ec);

// Experiment 2: c = 1000, n = 2100, fourteen eigenvalues.
inline constexpr std::array<double, 14> kExperiment2Lambdas = {
    4.0351, 4.0471, 4.0595, 4.0705, 4.0836, 4.0932, 4.1069,
    4.1168, 4.1289, 4.1392, 4.1537, 4.1643, 4.1728, 4.2665};
inline constexpr double kExperiment2Window = 5e-4;

struct Experiment2Result {
    std::vector<EigenCase> cases;
    std::vector<ExperimentRecord> records;
};
Experiment2Result run_experiment2(const ExperimentOptions& opts = {});
// A single row of experiment 2 (index into kExperiment2Lambdas).
EigenCase experiment2_case(std::size_t row, const ExperimentOptions& opts = {});

// Experiment 3: Bessel functions at x = c.
struct BesselRow {
    double c = 0.0;
    std::size_t n = 0;
    std::size_t N = 0;
    std::size_t N_alt = 0;
};
inline constexpr std::array<BesselRow, 4> kExperiment3Grid = {{
    {1e2, 200, 215, 235},
    {1e3, 1200, 1250, 1270},
    {1e4, 10490, 10550, 10570},
    {1e5, 101000, 101150, 101200},
}};

struct BesselCase {
    BesselRow row;
    BesselRun backward;
    BesselRun hira;
    BesselRun backward_alt;
    BesselRun invpow;
    BesselRunT<DDReal> reference;
    double method_digits = 0.0;   // backward vs eigenvector route, orders 0, 1, 2, n
    double paired_N_digits = 0.0;  // N vs N_alt, orders 0, 1, 2, n
};

BesselCase experiment3_case(const BesselRow& row, const ExperimentOptions& opts = {});

struct Experiment3Result {
    std::vector<BesselCase> cases;
    std::vector<ExperimentRecord> records;
};
// Rows with c <= max_c.
Experiment3Result run_experiment3(double max_c = 1e4, const ExperimentOptions& opts = {});

}  // namespace tridiag_hira
