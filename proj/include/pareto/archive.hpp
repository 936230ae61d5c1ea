#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pareto/objective_vector.hpp"

namespace pareto {

/// Result of one archive update.
struct ProcessOutcome {
    enum class Kind { Dominated, Inserted };

    Kind kind = Kind::Dominated;
    std::size_t removed = 0;  ///< points deleted by the insertion; always 0 for Dominated

    static constexpr ProcessOutcome dominated() { return {Kind::Dominated, 0}; }
    static constexpr ProcessOutcome inserted(std::size_t removed) { return {Kind::Inserted, removed}; }

    constexpr bool was_inserted() const { return kind == Kind::Inserted; }

    friend constexpr bool operator==(const ProcessOutcome&, const ProcessOutcome&) = default;
};

/// Cumulative, per-instance cost instrumentation.
struct ArchiveCounters {
    std::uint64_t point_comparisons = 0;
    std::uint64_t nodes_visited = 0;
    std::uint64_t rebalances = 0;

    friend constexpr bool operator==(const ArchiveCounters&, const ArchiveCounters&) = default;
};

/// A stored point together with its payload tag.
template <typename Scalar>
struct Entry {
    ObjectiveVector<Scalar> point;
    Payload payload;
};

/// The contract shared by every archive backend. Instances are single-writer.
template <typename A>
concept ParetoArchive = requires(A& a, const A& ca, const ObjectiveVector<typename A::scalar_type>& y) {
    typename A::scalar_type;
    { a.process(y) } -> std::same_as<ProcessOutcome>;
    { a.process(y, Payload{}) } -> std::same_as<ProcessOutcome>;
    { ca.size() } -> std::convertible_to<std::size_t>;
    { ca.dimension() } -> std::convertible_to<Eigen::Index>;
    { ca.export_points() } -> std::same_as<std::vector<ObjectiveVector<typename A::scalar_type>>>;
    { ca.export_entries() } -> std::same_as<std::vector<Entry<typename A::scalar_type>>>;
    { ca.counters() } -> std::same_as<ArchiveCounters>;
};

namespace detail {

template <typename Scalar>
void check_dimension(const ObjectiveVector<Scalar>& y, Eigen::Index m) {
    if (y.dimension() != m)
        throw usage_error("archive has dimension " + std::to_string(m) + ", point has " +
                          std::to_string(y.dimension()));
}

}  // namespace detail

}  // namespace pareto
