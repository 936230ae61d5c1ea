#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pareto/analysis.hpp"
#include "pareto/archive.hpp"
#include "pareto/bsp_archive.hpp"
#include "pareto/datagen.hpp"

namespace pareto::bench {

/// Malformed or inconsistent input data (as opposed to bad flags).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Point = ObjectiveVector<double>;

// --- point CSV ---------------------------------------------------------
//
// One objective vector per line, comma-separated decimal coordinates. An
// optional first line starting with '#' is a header. The first row fixes the
// dimension. Blank lines are ignored.

std::vector<Point> read_points_csv(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);
void write_points_csv(std::ostream& out, const std::vector<Point>& points);
void write_points_file(const std::string& path, const std::vector<Point>& points);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

// --- archives ------------------------------------------------------------

enum class ArchiveKind { Array, Bi, Bsp };

const char* to_string(ArchiveKind kind);
ArchiveKind parse_archive_kind(const std::string& name);

/// "all" or a comma-separated list of array|bi|bsp. `m` drops "bi" from
/// "all" when it is not 2; an explicit "bi" with m != 2 is a usage error.
std::vector<ArchiveKind> parse_archive_list(const std::string& spec, std::optional<Eigen::Index> m = std::nullopt);

struct BenchResult {
    ArchiveKind archive = ArchiveKind::Array;
    std::size_t m = 0;
    std::size_t n_total = 0;
    std::size_t n_nondominated_final = 0;
    double c = 1.0;
    double d = 0.0;
    std::uint64_t seed = 0;
    std::size_t bucket_capacity = 0;
    double z = 0.0;
    double mean_ns_per_point = 0.0;
    std::uint64_t total_point_comparisons = 0;
    std::uint64_t total_nodes_visited = 0;
    std::uint64_t rebalances = 0;

    friend bool operator==(const BenchResult&, const BenchResult&) = default;
};

std::string bench_csv_header();
std::string to_csv_row(const BenchResult& r);
BenchResult parse_bench_row(const std::string& line);
void write_bench_csv(std::ostream& out, const std::vector<BenchResult>& rows);
std::vector<BenchResult> read_bench_csv(std::istream& in);

/// Workload provenance copied into each result row.
struct RunMeta {
    double c = 1.0;
    double d = 0.0;
    std::uint64_t seed = 0;
};

struct RunOutput {
    BenchResult result;
    std::vector<Point> front;
    std::vector<ProcessOutcome> outcomes;
};

/// Feeds `points` in order through a fresh archive of the given kind. Only
/// the processing loop is timed.
RunOutput run_archive(ArchiveKind kind, const std::vector<Point>& points, const BspConfig& config,
                      const RunMeta& meta = {}, bool keep_outcomes = false);

// --- sweeps --------------------------------------------------------------

struct SweepGrid {
    std::vector<Eigen::Index> m{3};
    std::vector<int> log2_n{8, 9, 10, 11, 12};
    /// log₂ of the non-dominated count; empty means N = n (no shifted points).
    std::vector<int> log2_nondominated;
    std::vector<double> c{1.0};
    double shift = 1.0;
    std::uint64_t base_seed = 0;
    std::size_t repeat = 1;
    std::string archives = "all";
    BspConfig config;
    unsigned threads = 0;  ///< 0: hardware concurrency
};

/// One row per (m, c, n, N, seed, archive) cell, in that nesting order,
/// independent of the completion order of parallel workers. Cells with
/// N > n are skipped.
std::vector<BenchResult> run_sweep(const SweepGrid& grid);

// --- scaling fits --------------------------------------------------------

enum class CostColumn { Comparisons, Nodes, Work, Time };

CostColumn parse_cost_column(const std::string& name);
/// Per-point cost of a result row in the chosen column.
double per_point_cost(const BenchResult& r, CostColumn column);

struct ArchiveFit {
    ArchiveKind archive;
    analysis::ScalingFit fit;
};

/// Fits per-point cost against n_total separately for each archive kind
/// present in `rows`, in order of first appearance.
std::vector<ArchiveFit> fit_by_archive(const std::vector<BenchResult>& rows, CostColumn column);

}  // namespace pareto::bench
