#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "pareto/archive.hpp"

namespace pareto {

/// Specialized archive for two objectives. The front is kept in a red-black
/// tree keyed by the first objective (ascending); on a valid front the second
/// objective is then strictly descending, so the ℓ/r neighbors of a candidate
/// decide dominance and delimit the run of points it dominates.
///
/// nodes_visited counts key comparisons performed inside the ordered tree,
/// i.e. the descent steps of every search, insert and erase.
template <typename Scalar = double>
class BiArchive {
    struct CountingLess {
        std::uint64_t* steps;
        bool operator()(Scalar a, Scalar b) const {
            ++*steps;
            return a < b;
        }
    };
    struct Stored {
        Scalar second;
        Payload payload;
    };
    using Front = std::map<Scalar, Stored, CountingLess>;

public:
    using scalar_type = Scalar;

    struct Neighbors {
        std::optional<ObjectiveVector<Scalar>> left;   ///< rightmost point with first objective ≤ y₁
        std::optional<ObjectiveVector<Scalar>> right;  ///< leftmost point with first objective ≥ y₁
    };

    BiArchive() : counters_(std::make_unique<ArchiveCounters>()), front_(CountingLess{&counters_->nodes_visited}) {}

    // The tree's comparator points into counters_, so copies would alias it.
    BiArchive(const BiArchive&) = delete;
    BiArchive& operator=(const BiArchive&) = delete;
    BiArchive(BiArchive&&) noexcept = default;
    BiArchive& operator=(BiArchive&&) noexcept = default;

    ProcessOutcome process(const ObjectiveVector<Scalar>& y, Payload payload = {}) {
        detail::check_dimension(y, 2);
        const Scalar y1 = y[0];
        const Scalar y2 = y[1];

        auto [left, right] = locate(front_, y1);
        if (left != front_.end()) {
            ++counters_->point_comparisons;
            if (left->second.second <= y2) return ProcessOutcome::dominated();
        }

        // Points from r onward have first objective ≥ y₁ and descending second
        // objective; the ones with second objective ≥ y₂ form a prefix.
        std::size_t removed = 0;
        while (right != front_.end()) {
            ++counters_->point_comparisons;
            if (right->second.second < y2) break;
            right = front_.erase(right);
            ++removed;
        }
        front_.emplace_hint(right, y1, Stored{y2, std::move(payload)});
        return ProcessOutcome::inserted(removed);
    }

    template <typename Derived>
    ProcessOutcome process(const Eigen::MatrixBase<Derived>& y, Payload payload = {}) {
        return process(ObjectiveVector<Scalar>(y), std::move(payload));
    }

    Neighbors neighbor_indices(const ObjectiveVector<Scalar>& y) const {
        detail::check_dimension(y, 2);
        auto [left, right] = locate(front_, y[0]);
        Neighbors out;
        if (left != front_.end()) out.left.emplace(to_point(*left));
        if (right != front_.end()) out.right.emplace(to_point(*right));
        return out;
    }

    std::size_t size() const { return front_.size(); }
    Eigen::Index dimension() const { return 2; }
    ArchiveCounters counters() const { return *counters_; }

    /// Points in ascending order of the first objective.
    std::vector<ObjectiveVector<Scalar>> export_points() const {
        std::vector<ObjectiveVector<Scalar>> out;
        out.reserve(size());
        for (const auto& kv : front_) out.push_back(to_point(kv));
        return out;
    }

    std::vector<Entry<Scalar>> export_entries() const {
        std::vector<Entry<Scalar>> out;
        out.reserve(size());
        for (const auto& kv : front_) out.push_back({to_point(kv), kv.second.payload});
        return out;
    }

private:
    // One tree search yields both neighbors; end() encodes absence.
    template <typename Map>
    static auto locate(Map& front, Scalar y1) {
        const auto upper = front.upper_bound(y1);
        if (upper == front.begin()) return std::pair{front.end(), upper};
        const auto left = std::prev(upper);
        const bool tie = !(left->first < y1);
        return std::pair{left, tie ? left : upper};
    }

    static ObjectiveVector<Scalar> to_point(const typename Front::value_type& kv) {
        return ObjectiveVector<Scalar>{kv.first, kv.second.second};
    }

    std::unique_ptr<ArchiveCounters> counters_;
    Front front_;
};

}  // namespace pareto
