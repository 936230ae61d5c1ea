#include "pareto/bench.hpp"

#include <atomic>
#include <chrono>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "pareto/array_archive.hpp"
#include "pareto/bi_archive.hpp"

namespace pareto::bench {

const char* to_string(ArchiveKind kind) {
    switch (kind) {
        case ArchiveKind::Array: return "array";
        case ArchiveKind::Bi: return "bi";
        case ArchiveKind::Bsp: return "bsp";
    }
    return "?";
}

ArchiveKind parse_archive_kind(const std::string& name) {
    if (name == "array") return ArchiveKind::Array;
    if (name == "bi" || name == "biobjective") return ArchiveKind::Bi;
    if (name == "bsp") return ArchiveKind::Bsp;
    throw usage_error("unknown archive '" + name + "' (expected array, bi, bsp or all)");
}

std::vector<ArchiveKind> parse_archive_list(const std::string& spec, std::optional<Eigen::Index> m) {
    std::vector<ArchiveKind> kinds;
    if (spec == "all") {
        kinds = {ArchiveKind::Array, ArchiveKind::Bi, ArchiveKind::Bsp};
        if (m && *m != 2) kinds.erase(kinds.begin() + 1);
        return kinds;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const ArchiveKind k = parse_archive_kind(item);
        if (k == ArchiveKind::Bi && m && *m != 2)
            throw usage_error("the bi-objective archive needs m = 2, got m = " + std::to_string(*m));
        kinds.push_back(k);
    }
    if (kinds.empty()) throw usage_error("empty archive list");
    return kinds;
}

// --- result CSV ------------------------------------------------------------

std::string bench_csv_header() {
    return "archive,m,n_total,n_nondominated_final,c,d,seed,bucket_capacity,z,mean_ns_per_point,"
           "total_point_comparisons,total_nodes_visited,rebalances";
}

std::string to_csv_row(const BenchResult& r) {
    std::ostringstream os;
    os << to_string(r.archive) << ',' << r.m << ',' << r.n_total << ',' << r.n_nondominated_final << ','
       << format_double(r.c) << ',' << format_double(r.d) << ',' << r.seed << ',' << r.bucket_capacity << ','
       << format_double(r.z) << ',' << format_double(r.mean_ns_per_point) << ',' << r.total_point_comparisons
       << ',' << r.total_nodes_visited << ',' << r.rebalances;
    return os.str();
}

namespace {

template <typename T>
T parse_field(const std::string& text, const char* name) {
    T v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw input_error(std::string("bad value '") + text + "' in column " + name);
    return v;
}

}  // namespace

BenchResult parse_bench_row(const std::string& line) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty() && item.back() == '\r') item.pop_back();
        f.push_back(item);
    }
    if (f.size() != 13) throw input_error("result row has " + std::to_string(f.size()) + " fields, expected 13");
    BenchResult r;
    try {
        r.archive = parse_archive_kind(f[0]);
    } catch (const usage_error& e) {
        throw input_error(e.what());
    }
    r.m = parse_field<std::size_t>(f[1], "m");
    r.n_total = parse_field<std::size_t>(f[2], "n_total");
    r.n_nondominated_final = parse_field<std::size_t>(f[3], "n_nondominated_final");
    r.c = parse_field<double>(f[4], "c");
    r.d = parse_field<double>(f[5], "d");
    r.seed = parse_field<std::uint64_t>(f[6], "seed");
    r.bucket_capacity = parse_field<std::size_t>(f[7], "bucket_capacity");
    r.z = parse_field<double>(f[8], "z");
    r.mean_ns_per_point = parse_field<double>(f[9], "mean_ns_per_point");
    r.total_point_comparisons = parse_field<std::uint64_t>(f[10], "total_point_comparisons");
    r.total_nodes_visited = parse_field<std::uint64_t>(f[11], "total_nodes_visited");
    r.rebalances = parse_field<std::uint64_t>(f[12], "rebalances");
    return r;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchResult>& rows) {
    out << bench_csv_header() << '\n';
    for (const auto& r : rows) out << to_csv_row(r) << '\n';
}

std::vector<BenchResult> read_bench_csv(std::istream& in) {
    std::vector<BenchResult> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (line.rfind("archive,", 0) == 0) continue;
        try {
            rows.push_back(parse_bench_row(line));
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return rows;
}

// --- running ---------------------------------------------------------------

namespace {

template <typename Archive>
RunOutput drive(Archive archive, ArchiveKind kind, const std::vector<Point>& points, bool keep_outcomes) {
    RunOutput out;
    if (keep_outcomes) out.outcomes.reserve(points.size());
    const auto start = std::chrono::steady_clock::now();
    for (const Point& y : points) {
        const ProcessOutcome o = archive.process(y);
        if (keep_outcomes) out.outcomes.push_back(o);
    }
    const auto stop = std::chrono::steady_clock::now();

    const ArchiveCounters counters = archive.counters();
    BenchResult& r = out.result;
    r.archive = kind;
    r.m = static_cast<std::size_t>(archive.dimension());
    r.n_total = points.size();
    r.n_nondominated_final = archive.size();
    const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
    r.mean_ns_per_point = points.empty() ? 0.0 : ns / static_cast<double>(points.size());
    r.total_point_comparisons = counters.point_comparisons;
    r.total_nodes_visited = counters.nodes_visited;
    r.rebalances = counters.rebalances;
    out.front = archive.export_points();
    return out;
}

}  // namespace

RunOutput run_archive(ArchiveKind kind, const std::vector<Point>& points, const BspConfig& config,
                      const RunMeta& meta, bool keep_outcomes) {
    RunOutput out;
    if (points.empty()) {
        out.result.archive = kind;
    } else {
        const Eigen::Index m = points.front().dimension();
        switch (kind) {
            case ArchiveKind::Array: out = drive(ArrayArchive<double>(m), kind, points, keep_outcomes); break;
            case ArchiveKind::Bi:
                if (m != 2) throw usage_error("the bi-objective archive needs m = 2, got m = " + std::to_string(m));
                out = drive(BiArchive<double>(), kind, points, keep_outcomes);
                break;
            case ArchiveKind::Bsp: out = drive(BspArchive<double>(m, config), kind, points, keep_outcomes); break;
        }
    }
    out.result.c = meta.c;
    out.result.d = meta.d;
    out.result.seed = meta.seed;
    if (kind == ArchiveKind::Bsp) {
        out.result.bucket_capacity = config.bucket_capacity;
        out.result.z = config.rebalance ? config.rebalance_ratio : 0.0;
    }
    return out;
}

// --- sweeps ----------------------------------------------------------------

std::vector<BenchResult> run_sweep(const SweepGrid& grid) {
    struct Cell {
        SequenceSpec spec;
        std::vector<ArchiveKind> kinds;
    };
    std::vector<Cell> cells;
    for (Eigen::Index m : grid.m) {
        const auto kinds = parse_archive_list(grid.archives, m);
        for (double c : grid.c)
            for (int ln : grid.log2_n) {
                std::vector<int> nondominated = grid.log2_nondominated.empty() ? std::vector<int>{ln}
                                                                               : grid.log2_nondominated;
                for (int lN : nondominated) {
                    if (lN > ln || ln < 0 || lN < 0 || ln > 40) continue;
                    for (std::size_t s = 0; s < grid.repeat; ++s) {
                        SequenceSpec spec;
                        spec.m = m;
                        spec.nondominated = std::size_t{1} << lN;
                        spec.dominated = (std::size_t{1} << ln) - spec.nondominated;
                        spec.shift = grid.shift;
                        spec.bias = c;
                        spec.seed = grid.base_seed + s;
                        spec.validate();
                        cells.push_back({spec, kinds});
                    }
                }
            }
    }

    std::vector<std::vector<BenchResult>> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const Cell& cell = cells[i];
            const auto seq = generate<double>(cell.spec);
            const RunMeta meta{cell.spec.bias, cell.spec.dominated ? cell.spec.shift : 0.0, cell.spec.seed};
            for (ArchiveKind k : cell.kinds)
                results[i].push_back(run_archive(k, seq.points, grid.config, meta).result);
        }
    };
    unsigned threads = grid.threads ? grid.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cells.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::vector<BenchResult> rows;
    for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
    return rows;
}

// --- scaling fits ----------------------------------------------------------

CostColumn parse_cost_column(const std::string& name) {
    if (name == "comparisons") return CostColumn::Comparisons;
    if (name == "nodes") return CostColumn::Nodes;
    if (name == "work") return CostColumn::Work;
    if (name == "time") return CostColumn::Time;
    throw usage_error("unknown cost column '" + name + "' (expected comparisons, nodes, work or time)");
}

double per_point_cost(const BenchResult& r, CostColumn column) {
    if (r.n_total == 0) return 0.0;
    const double n = static_cast<double>(r.n_total);
    switch (column) {
        case CostColumn::Comparisons: return static_cast<double>(r.total_point_comparisons) / n;
        case CostColumn::Nodes: return static_cast<double>(r.total_nodes_visited) / n;
        case CostColumn::Work:
            return static_cast<double>(r.total_point_comparisons + r.total_nodes_visited) / n;
        case CostColumn::Time: return r.mean_ns_per_point;
    }
    return 0.0;
}

std::vector<ArchiveFit> fit_by_archive(const std::vector<BenchResult>& rows, CostColumn column) {
    std::vector<ArchiveKind> order;
    for (const auto& r : rows)
        if (std::find(order.begin(), order.end(), r.archive) == order.end()) order.push_back(r.archive);

    std::vector<ArchiveFit> fits;
    for (ArchiveKind k : order) {
        std::vector<std::pair<double, double>> samples;
        for (const auto& r : rows)
            if (r.archive == k) samples.emplace_back(static_cast<double>(r.n_total), per_point_cost(r, column));
        if (samples.size() < 2)
            throw input_error(std::string("need at least 2 rows for archive ") + to_string(k));
        fits.push_back({k, analysis::fit_exponent(samples)});
    }
    return fits;
}

}  // namespace pareto::bench
