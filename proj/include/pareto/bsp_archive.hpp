#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pareto/archive.hpp"
#include "pareto/dominance.hpp"
#include "pareto/point_block.hpp"

namespace pareto {

/// Tuning knobs of the BSP archive.
struct BspConfig {
    std::size_t bucket_capacity = 20;  ///< maximum points per leaf before it splits
    double rebalance_ratio = 6.0;      ///< z: child-count ratio that triggers a rebalance
    std::size_t rebalance_min_subtree = 80;
    bool rebalance = true;

    /// Defaults with the minimum rebalanced subtree tied to the bucket size.
    static BspConfig with_bucket(std::size_t bucket, double z = 6.0) {
        BspConfig c;
        c.bucket_capacity = bucket;
        c.rebalance_ratio = z;
        c.rebalance_min_subtree = 4 * bucket;
        return c;
    }

    void validate() const {
        if (bucket_capacity < 1) throw usage_error("bucket capacity must be at least 1");
        if (!(rebalance_ratio > 1.0)) throw usage_error("rebalance ratio z must exceed 1");
        if (rebalance_min_subtree < 1) throw usage_error("minimum rebalanced subtree must be at least 1");
    }
};

/// True when the child counts violate the ratio bound z in either direction.
inline bool unbalanced(std::size_t left, std::size_t right, double z) {
    return static_cast<double>(left) > z * static_cast<double>(right) ||
           static_cast<double>(right) > z * static_cast<double>(left);
}

/// Objectives in which a candidate lies strictly below ("better") or
/// strictly above ("worse") the coordinate range of a tree cell. Updated in
/// place while descending and restored on the way back up.
class ObjectiveSets {
public:
    enum class State : std::uint8_t { Inside, Better, Worse };

    explicit ObjectiveSets(Eigen::Index dimension) : state_(static_cast<std::size_t>(dimension), State::Inside) {}

    std::size_t dimension() const { return state_.size(); }
    std::size_t better_count() const { return better_; }
    std::size_t worse_count() const { return worse_; }
    bool all_better() const { return better_ == state_.size(); }
    bool all_worse() const { return worse_ == state_.size(); }
    /// Both sets non-empty: every point of the cell is incomparable to the candidate.
    bool incomparable() const { return better_ != 0 && worse_ != 0; }
    bool is_better(std::size_t j) const { return state_[j] == State::Better; }
    bool is_worse(std::size_t j) const { return state_[j] == State::Worse; }

    /// Moves objective j to `to`, returning the previous state for restore().
    State assign(std::size_t j, State to) {
        const State from = state_[j];
        set(j, to);
        return from;
    }
    void restore(std::size_t j, State previous) { set(j, previous); }

private:
    void set(std::size_t j, State to) {
        State& s = state_[j];
        if (s == to) return;
        if (s == State::Better) --better_;
        if (s == State::Worse) --worse_;
        if (to == State::Better) ++better_;
        if (to == State::Worse) ++worse_;
        s = to;
    }

    std::vector<State> state_;
    std::size_t better_ = 0;
    std::size_t worse_ = 0;
};

/// A split decision: points with coordinate `objective` below `threshold` go left.
template <typename Scalar>
struct Split {
    Eigen::Index objective;
    Scalar threshold;
    std::size_t left_count;
};

/// Picks the threshold between two adjacent distinct values that balances
/// the two sides best, breaking ties toward a heavier left side. Returns
/// nothing when all values are equal.
template <typename Scalar>
std::optional<std::pair<Scalar, std::size_t>> choose_threshold(std::vector<Scalar> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    std::optional<std::pair<Scalar, std::size_t>> best;
    std::size_t best_imbalance = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 1; i < n; ++i) {
        if (!(values[i - 1] < values[i])) continue;
        const std::size_t imbalance = i > n - i ? 2 * i - n : n - 2 * i;
        if (imbalance < best_imbalance || (imbalance == best_imbalance && i > best->second)) {
            Scalar theta = std::midpoint(values[i - 1], values[i]);
            // Adjacent floating-point values may round the midpoint down onto the lower one.
            if (!(values[i - 1] < theta)) theta = values[i];
            best.emplace(theta, i);
            best_imbalance = imbalance;
        }
    }
    return best;
}

/// Split selection for an overflowing leaf. `ancestor_splits` lists the split
/// objectives on the path from the root down to the leaf's parent (the parent
/// is the last element). Prefers the objective whose most recent use is
/// furthest up the path (never used counts as infinitely far); ties go to the
/// lower index. Only objectives with at least two distinct values qualify.
template <typename Scalar>
Split<Scalar> choose_split(const PointBlock<Scalar>& leaf, std::span<const Eigen::Index> ancestor_splits) {
    const Eigen::Index m = leaf.dimension();
    const std::size_t never = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> distance(static_cast<std::size_t>(m), never);
    for (std::size_t k = 1; k <= ancestor_splits.size(); ++k) {
        const auto j = static_cast<std::size_t>(ancestor_splits[ancestor_splits.size() - k]);
        if (distance[j] == never) distance[j] = k;
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return distance[static_cast<std::size_t>(a)] > distance[static_cast<std::size_t>(b)];
    });

    std::vector<Scalar> values(leaf.size());
    for (Eigen::Index j : order) {
        for (std::size_t i = 0; i < leaf.size(); ++i) values[i] = leaf.point(i)[j];
        if (auto t = choose_threshold(values)) return {j, t->first, t->second};
    }
    throw std::logic_error("leaf holds no two distinct points; archive invariant broken");
}

template <typename Scalar>
Split<Scalar> choose_split(const PointBlock<Scalar>& leaf, std::initializer_list<Eigen::Index> ancestor_splits) {
    return choose_split(leaf, std::span<const Eigen::Index>(ancestor_splits.begin(), ancestor_splits.size()));
}

/// Pareto archive stored in a k-d tree with bucketed leaves.
///
/// Each interior node splits its cell on one objective at a threshold; the
/// left cell holds coordinates strictly below it, the right cell the rest.
/// Dominance checks descend only into cells whose relation to the candidate
/// is not already decided by the splits above them: cells the candidate is
/// worse than in every objective prove it dominated, cells it beats in every
/// objective are dropped wholesale, and cells where it is better in some
/// objective and worse in another are skipped.
template <typename Scalar = double>
class BspArchive {
    struct Node {
        std::size_t count = 0;
        Eigen::Index objective = -1;  // < 0 for leaves
        Scalar threshold{};
        std::unique_ptr<Node> left;
        std::unique_ptr<Node> right;
        PointBlock<Scalar> bucket;

        bool is_leaf() const { return objective < 0; }
    };

    struct CheckResult {
        std::size_t removed = 0;
        bool dominated = false;
    };

public:
    using scalar_type = Scalar;

    explicit BspArchive(Eigen::Index dimension, BspConfig config = {})
        : dimension_(dimension), config_(config), sets_(dimension) {
        if (dimension < 2) throw usage_error("archive dimension must be at least 2");
        config_.validate();
        root_ = make_leaf();
    }

    ProcessOutcome process(const ObjectiveVector<Scalar>& y, Payload payload = {}) {
        detail::check_dimension(y, dimension_);
        const CheckResult check = check_dominance(*root_, y.coords());
        if (root_->count == 0 && !root_->is_leaf()) root_ = make_leaf();
        if (check.dominated) return ProcessOutcome::dominated();

        path_.clear();
        insert_below(*root_, y.coords(), std::move(payload));
        if (config_.rebalance) rebalance_path();
        return ProcessOutcome::inserted(check.removed);
    }

    template <typename Derived>
    ProcessOutcome process(const Eigen::MatrixBase<Derived>& y, Payload payload = {}) {
        return process(ObjectiveVector<Scalar>(y), std::move(payload));
    }

    std::size_t size() const { return root_->count; }
    Eigen::Index dimension() const { return dimension_; }
    ArchiveCounters counters() const { return counters_; }
    const BspConfig& config() const { return config_; }

    std::vector<ObjectiveVector<Scalar>> export_points() const {
        std::vector<ObjectiveVector<Scalar>> out;
        out.reserve(size());
        for_each_leaf(*root_, [&](const Node& leaf) {
            for (std::size_t i = 0; i < leaf.bucket.size(); ++i) out.emplace_back(leaf.bucket.point(i));
        });
        return out;
    }

    std::vector<Entry<Scalar>> export_entries() const {
        std::vector<Entry<Scalar>> out;
        out.reserve(size());
        for_each_leaf(*root_, [&](const Node& leaf) {
            for (std::size_t i = 0; i < leaf.bucket.size(); ++i) out.push_back(leaf.bucket.entry(i));
        });
        return out;
    }

    std::size_t leaf_count() const {
        std::size_t n = 0;
        for_each_leaf(*root_, [&](const Node&) { ++n; });
        return n;
    }

    std::size_t depth() const { return depth_of(*root_); }

    /// Full structural audit. Returns a description of the first violation found.
    std::optional<std::string> check_invariants() const {
        std::vector<Bound> bounds;
        return audit(*root_, bounds, true);
    }

private:
    // --- dominance check -------------------------------------------------

    template <typename Derived>
    CheckResult check_dominance(Node& node, const Eigen::MatrixBase<Derived>& y) {
        ++counters_.nodes_visited;
        if (node.is_leaf()) return scan_leaf(node, y);

        const auto j = static_cast<std::size_t>(node.objective);
        const bool below = y.coeff(node.objective) < node.threshold;
        CheckResult result;

        if (below) {
            // Left cell keeps the context; the right cell lies above y in objective j.
            merge(result, check_dominance(*node.left, y));
            if (!result.dominated) {
                const auto previous = sets_.assign(j, ObjectiveSets::State::Better);
                if (sets_.all_better()) {
                    result.removed += node.right->count;
                    node.right->count = 0;
                } else if (!sets_.incomparable()) {
                    merge(result, check_dominance(*node.right, y));
                }
                sets_.restore(j, previous);
            }
        } else {
            // Left cell lies below y in objective j; the right cell keeps the context.
            const auto previous = sets_.assign(j, ObjectiveSets::State::Worse);
            if (sets_.all_worse()) {
                sets_.restore(j, previous);
                return {0, true};
            }
            if (!sets_.incomparable()) merge(result, check_dominance(*node.left, y));
            sets_.restore(j, previous);
            if (!result.dominated) merge(result, check_dominance(*node.right, y));
        }

        node.count -= result.removed;
        collapse(node);
        return result;
    }

    template <typename Derived>
    CheckResult scan_leaf(Node& leaf, const Eigen::MatrixBase<Derived>& y) {
        CheckResult result;
        PointBlock<Scalar>& bucket = leaf.bucket;
        std::size_t i = 0;
        while (i < bucket.size()) {
            ++counters_.point_comparisons;
            const Dominance rel = detail::compare_unchecked(bucket.point(i), y);
            if (rel == Dominance::Dominates || rel == Dominance::Equal) {
                result.dominated = true;
                break;
            }
            if (rel == Dominance::DominatedBy) {
                bucket.swap_remove(i);
                ++result.removed;
            } else {
                ++i;
            }
        }
        leaf.count = bucket.size();
        return result;
    }

    static void merge(CheckResult& into, const CheckResult& part) {
        into.removed += part.removed;
        into.dominated = into.dominated || part.dominated;
    }

    // Replace an interior node that has exactly one empty child by the other child.
    static void collapse(Node& node) {
        const bool left_empty = node.left->count == 0;
        const bool right_empty = node.right->count == 0;
        if (left_empty == right_empty) return;
        std::unique_ptr<Node> survivor = std::move(left_empty ? node.right : node.left);
        node = std::move(*survivor);
    }

    // --- insertion -------------------------------------------------------

    // Descends from `start` (whose ancestors' split objectives are already in
    // path_objectives_) to the leaf cell containing y, counting y on the way.
    template <typename Derived>
    void insert_below(Node& start, const Eigen::MatrixBase<Derived>& y, Payload payload) {
        Node* node = &start;
        while (!node->is_leaf()) {
            ++node->count;
            path_.push_back(node);
            path_objectives_.push_back(node->objective);
            node = y.coeff(node->objective) < node->threshold ? node->left.get() : node->right.get();
        }
        node->bucket.append(y, std::move(payload));
        node->count = node->bucket.size();
        if (node->count > config_.bucket_capacity) split_leaf(*node);
        path_objectives_.clear();
    }

    void split_leaf(Node& leaf) {
        const Split<Scalar> split = choose_split(leaf.bucket, std::span<const Eigen::Index>(path_objectives_));
        auto left = make_leaf();
        auto right = make_leaf();
        for (std::size_t i = 0; i < leaf.bucket.size(); ++i) {
            Node& side = leaf.bucket.point(i)[split.objective] < split.threshold ? *left : *right;
            side.bucket.append(leaf.bucket.point(i), leaf.bucket.payload(i));
        }
        left->count = left->bucket.size();
        right->count = right->bucket.size();
        assert(left->count == split.left_count && right->count > 0);
        leaf.objective = split.objective;
        leaf.threshold = split.threshold;
        leaf.left = std::move(left);
        leaf.right = std::move(right);
        leaf.bucket = PointBlock<Scalar>();
    }

    // --- balancing -------------------------------------------------------

    // Inspects the interior nodes of the last insertion path, deepest first,
    // and rebuilds at most one of them.
    void rebalance_path() {
        for (std::size_t k = path_.size(); k-- > 0;) {
            Node& node = *path_[k];
            if (node.is_leaf() || node.count < config_.rebalance_min_subtree) continue;
            if (!unbalanced(node.left->count, node.right->count, config_.rebalance_ratio)) continue;

            std::vector<Eigen::Index> above;
            above.reserve(k);
            for (std::size_t a = 0; a < k; ++a) above.push_back(path_[a]->objective);
            rebalance(node, above);
            break;
        }
        path_.clear();
    }

    // The smaller child is detached, the larger one takes the node's place and
    // the detached points are re-inserted below it. Stored points are mutually
    // non-dominated, so no dominance checks are needed.
    void rebalance(Node& node, const std::vector<Eigen::Index>& above) {
        ++counters_.rebalances;
        const bool left_smaller = node.left->count < node.right->count;
        std::unique_ptr<Node> smaller = std::move(left_smaller ? node.left : node.right);
        std::unique_ptr<Node> larger = std::move(left_smaller ? node.right : node.left);
        node = std::move(*larger);

        for_each_leaf(*smaller, [&](const Node& leaf) {
            for (std::size_t i = 0; i < leaf.bucket.size(); ++i) {
                path_.clear();
                path_objectives_ = above;
                insert_below(node, leaf.bucket.point(i), leaf.bucket.payload(i));
            }
        });
        path_.clear();
    }

    // --- traversal and audit ---------------------------------------------

    template <typename Fn>
    static void for_each_leaf(const Node& node, Fn&& fn) {
        if (node.is_leaf()) {
            fn(node);
            return;
        }
        for_each_leaf(*node.left, fn);
        for_each_leaf(*node.right, fn);
    }

    static std::size_t depth_of(const Node& node) {
        if (node.is_leaf()) return 0;
        return 1 + std::max(depth_of(*node.left), depth_of(*node.right));
    }

    struct Bound {
        Eigen::Index objective;
        Scalar threshold;
        bool left;
    };

    std::optional<std::string> audit(const Node& node, std::vector<Bound>& bounds, bool is_root) const {
        if (node.is_leaf()) {
            if (node.count != node.bucket.size()) return "leaf count differs from bucket size";
            if (node.bucket.size() > config_.bucket_capacity) return "leaf exceeds bucket capacity";
            if (node.bucket.dimension() != dimension_ && !node.bucket.empty()) return "leaf has wrong dimension";
            if (!is_root && node.count == 0) return "empty leaf below the root";
            for (std::size_t i = 0; i < node.bucket.size(); ++i) {
                const auto p = node.bucket.point(i);
                for (const Bound& b : bounds) {
                    const bool in_left = p[b.objective] < b.threshold;
                    if (in_left != b.left) return "point outside its cell";
                }
            }
            return std::nullopt;
        }
        if (!node.left || !node.right) return "interior node lacks a child";
        if (node.left->count == 0 || node.right->count == 0) return "interior node has an empty child";
        if (node.count != node.left->count + node.right->count) return "interior count differs from children";
        bounds.push_back({node.objective, node.threshold, true});
        if (auto err = audit(*node.left, bounds, false)) return err;
        bounds.back().left = false;
        if (auto err = audit(*node.right, bounds, false)) return err;
        bounds.pop_back();
        return std::nullopt;
    }

    std::unique_ptr<Node> make_leaf() const {
        auto leaf = std::make_unique<Node>();
        leaf->bucket = PointBlock<Scalar>(dimension_, static_cast<Eigen::Index>(config_.bucket_capacity + 1));
        return leaf;
    }

    Eigen::Index dimension_;
    BspConfig config_;
    std::unique_ptr<Node> root_;
    ArchiveCounters counters_;

    // Scratch state reused across calls.
    ObjectiveSets sets_;
    std::vector<Node*> path_;
    std::vector<Eigen::Index> path_objectives_;
};

}  // namespace pareto
