#pragma once

#include <vector>

#include "pareto/archive.hpp"
#include "pareto/dominance.hpp"
#include "pareto/point_block.hpp"

namespace pareto {

/// Brute-force baseline: one flat block of points, a full linear scan per
/// update. Θ(n m) per call in the worst case.
template <typename Scalar = double>
class ArrayArchive {
public:
    using scalar_type = Scalar;

    explicit ArrayArchive(Eigen::Index dimension) : points_(dimension) {
        if (dimension < 2) throw usage_error("archive dimension must be at least 2");
    }

    ProcessOutcome process(const ObjectiveVector<Scalar>& y, Payload payload = {}) {
        detail::check_dimension(y, dimension());
        const auto& yc = y.coords();

        // A stored point weakly dominating y cannot coexist with one that y
        // strictly dominates, so the early return never follows a removal.
        std::size_t removed = 0;
        std::size_t i = 0;
        while (i < points_.size()) {
            ++counters_.point_comparisons;
            const Dominance rel = detail::compare_unchecked(points_.point(i), yc);
            if (rel == Dominance::Dominates || rel == Dominance::Equal) return ProcessOutcome::dominated();
            if (rel == Dominance::DominatedBy) {
                points_.swap_remove(i);  // slot i now holds the former last point
                ++removed;
            } else {
                ++i;
            }
        }
        points_.append(yc, std::move(payload));
        return ProcessOutcome::inserted(removed);
    }

    template <typename Derived>
    ProcessOutcome process(const Eigen::MatrixBase<Derived>& y, Payload payload = {}) {
        return process(ObjectiveVector<Scalar>(y), std::move(payload));
    }

    std::size_t size() const { return points_.size(); }
    Eigen::Index dimension() const { return points_.dimension(); }
    ArchiveCounters counters() const { return counters_; }

    /// Column view of the stored points, in storage order.
    auto points() const { return points_.points(); }

    std::vector<ObjectiveVector<Scalar>> export_points() const {
        std::vector<ObjectiveVector<Scalar>> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.emplace_back(points_.point(i));
        return out;
    }

    std::vector<Entry<Scalar>> export_entries() const {
        std::vector<Entry<Scalar>> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.push_back(points_.entry(i));
        return out;
    }

private:
    PointBlock<Scalar> points_;
    ArchiveCounters counters_;
};

}  // namespace pareto
