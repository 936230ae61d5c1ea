#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "pareto/archive.hpp"
#include "pareto/objective_vector.hpp"

/// Brute-force reference semantics for testing. Deliberately quadratic and
/// written without any of the archive code paths.
namespace pareto::oracle {

namespace detail {

// Row-major copy of the input: point i occupies [i*m, (i+1)*m).
template <typename Scalar>
struct Flat {
    std::size_t m = 0;
    std::vector<Scalar> v;

    explicit Flat(const std::vector<ObjectiveVector<Scalar>>& points) {
        if (points.empty()) return;
        m = static_cast<std::size_t>(points.front().dimension());
        v.reserve(points.size() * m);
        for (const auto& p : points) {
            if (static_cast<std::size_t>(p.dimension()) != m) throw usage_error("point set mixes dimensions");
            for (std::size_t k = 0; k < m; ++k) v.push_back(p[static_cast<Eigen::Index>(k)]);
        }
    }
    const Scalar* operator[](std::size_t i) const { return v.data() + i * m; }
};

// a_k <= b_k for all k
template <typename Scalar>
bool no_worse(const Scalar* a, const Scalar* b, std::size_t m) {
    for (std::size_t k = 0; k < m; ++k)
        if (b[k] < a[k]) return false;
    return true;
}

template <typename Scalar>
bool same(const Scalar* a, const Scalar* b, std::size_t m) {
    return std::equal(a, a + m, b);
}

}  // namespace detail

/// Every input point not strictly dominated by another input point, with
/// exact duplicates collapsed to their first occurrence.
template <typename Scalar>
std::vector<ObjectiveVector<Scalar>> non_dominated_subset(const std::vector<ObjectiveVector<Scalar>>& points) {
    const detail::Flat<Scalar> f(points);
    // Only points no larger in the first objective can weakly dominate, so
    // candidates are scanned in that order and the scan stops past y_0.
    std::vector<std::size_t> by_first(points.size());
    std::iota(by_first.begin(), by_first.end(), std::size_t{0});
    std::stable_sort(by_first.begin(), by_first.end(), [&](std::size_t a, std::size_t b) { return f[a][0] < f[b][0]; });

    std::vector<ObjectiveVector<Scalar>> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool keep = true;
        for (std::size_t j : by_first) {
            if (f[i][0] < f[j][0]) break;
            if (j == i || !detail::no_worse(f[j], f[i], f.m)) continue;
            // j weakly dominates i: drop i unless j is a later duplicate
            if (!detail::same(f[j], f[i], f.m) || j < i) {
                keep = false;
                break;
            }
        }
        if (keep) out.push_back(points[i]);
    }
    return out;
}

/// Per-step outcomes of the online archive contract, simulated on a plain list.
template <typename Scalar>
std::vector<ProcessOutcome> sequential_outcomes(const std::vector<ObjectiveVector<Scalar>>& points) {
    const detail::Flat<Scalar> f(points);
    std::vector<std::size_t> stored;
    std::vector<ProcessOutcome> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Scalar* y = f[i];
        const bool rejected = std::any_of(stored.begin(), stored.end(),
                                          [&](std::size_t p) { return detail::no_worse(f[p], y, f.m); });
        if (rejected) {
            out.push_back(ProcessOutcome::dominated());
            continue;
        }
        // y is not weakly dominated by anything stored, so y <= p means y strictly beats p
        const auto kept = std::remove_if(stored.begin(), stored.end(),
                                         [&](std::size_t p) { return detail::no_worse(y, f[p], f.m); });
        out.push_back(ProcessOutcome::inserted(static_cast<std::size_t>(stored.end() - kept)));
        stored.erase(kept, stored.end());
        stored.push_back(i);
    }
    return out;
}

}  // namespace pareto::oracle
