#pragma once

#include <string>

#include <Eigen/Core>

#include "pareto/objective_vector.hpp"

namespace pareto {

/// Outcome of comparing a against b under Pareto dominance (minimization).
enum class Dominance {
    Dominates,    ///< a ≺ b
    DominatedBy,  ///< b ≺ a
    Equal,
    Incomparable,
};

inline const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::Dominates: return "dominates";
        case Dominance::DominatedBy: return "dominated-by";
        case Dominance::Equal: return "equal";
        case Dominance::Incomparable: return "incomparable";
    }
    return "?";
}

namespace detail {

// Stops as soon as each side has been seen strictly better somewhere.
template <typename DA, typename DB>
Dominance compare_unchecked(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    bool a_better = false;
    bool b_better = false;
    const Eigen::Index m = a.size();
    for (Eigen::Index k = 0; k < m; ++k) {
        if (a.coeff(k) < b.coeff(k)) {
            if (b_better) return Dominance::Incomparable;
            a_better = true;
        } else if (b.coeff(k) < a.coeff(k)) {
            if (a_better) return Dominance::Incomparable;
            b_better = true;
        }
    }
    if (a_better) return Dominance::Dominates;
    if (b_better) return Dominance::DominatedBy;
    return Dominance::Equal;
}

template <typename DA, typename DB>
void require_same_dimension(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    if (a.size() != b.size())
        throw usage_error("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
}

}  // namespace detail

template <typename DA, typename DB>
Dominance compare(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    detail::require_same_dimension(a, b);
    return detail::compare_unchecked(a, b);
}

template <typename Scalar>
Dominance compare(const ObjectiveVector<Scalar>& a, const ObjectiveVector<Scalar>& b) {
    return compare(a.coords(), b.coords());
}

/// a ⪯ b: a is no worse than b in every coordinate (equality counts).
template <typename DA, typename DB>
bool weakly_dominates(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    detail::require_same_dimension(a, b);
    return (a.array() <= b.array()).all();
}

template <typename Scalar>
bool weakly_dominates(const ObjectiveVector<Scalar>& a, const ObjectiveVector<Scalar>& b) {
    return weakly_dominates(a.coords(), b.coords());
}

}  // namespace pareto
