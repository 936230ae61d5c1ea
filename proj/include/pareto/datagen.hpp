#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "pareto/objective_vector.hpp"

namespace pareto {

/// Parameters of a synthetic benchmark sequence.
///
/// Points are Gaussian with unit variance in the hyperplane orthogonal to the
/// all-ones vector. `nondominated` of them are centered at the origin and are
/// therefore mutually non-dominated; `dominated` of them are shifted along the
/// all-ones direction by shift·n/k at sequence position k (1-based), so early
/// shifted points are far behind the front. `bias` > 1 pulls shifted points
/// toward the start of the sequence.
struct SequenceSpec {
    Eigen::Index m = 3;
    std::size_t nondominated = 0;
    std::size_t dominated = 0;
    double shift = 1.0;
    double bias = 1.0;
    std::uint64_t seed = 0;

    std::size_t total() const { return nondominated + dominated; }

    void validate() const {
        if (m < 2) throw usage_error("m must be at least 2");
        if (total() < 1) throw usage_error("sequence must contain at least one point");
        if (!(bias >= 1.0) || !std::isfinite(bias)) throw usage_error("order bias c must be at least 1");
        if (!(shift >= 0.0) || !std::isfinite(shift)) throw usage_error("shift d must be non-negative");
    }
};

template <typename Scalar = double>
struct Sequence {
    std::vector<ObjectiveVector<Scalar>> points;
    std::vector<bool> shifted;  ///< per position: drawn from the shifted population
};

/// g − mean(g)·1: orthogonal projection onto the zero-sum hyperplane.
template <typename Derived>
Coords<typename Derived::Scalar> project_to_hyperplane(const Eigen::MatrixBase<Derived>& g) {
    return (g.array() - g.mean()).matrix();
}

/// Probability that the next position receives a shifted point, clipped at 1.
inline double shifted_probability(double bias, std::size_t remaining_nondominated, std::size_t remaining_dominated) {
    const std::size_t left = remaining_nondominated + remaining_dominated;
    if (left == 0 || remaining_dominated == 0) return 0.0;
    return std::min(1.0, bias * static_cast<double>(remaining_dominated) / static_cast<double>(left));
}

/// Deterministic in `spec.seed`: std::mt19937_64 feeds both the ordering
/// coin and std::normal_distribution.
template <typename Scalar = double>
Sequence<Scalar> generate(const SequenceSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const std::size_t n = spec.total();
    std::size_t nondominated_left = spec.nondominated;
    std::size_t dominated_left = spec.dominated;

    Sequence<Scalar> out;
    out.points.reserve(n);
    out.shifted.reserve(n);
    Eigen::VectorXd g(spec.m);
    for (std::size_t k = 1; k <= n; ++k) {
        const double p = shifted_probability(spec.bias, nondominated_left, dominated_left);
        const bool shifted = dominated_left > 0 && (nondominated_left == 0 || unit(rng) < p);
        (shifted ? dominated_left : nondominated_left) -= 1;

        for (Eigen::Index j = 0; j < spec.m; ++j) g[j] = normal(rng);
        Eigen::VectorXd y = project_to_hyperplane(g);
        if (shifted) y.array() += spec.shift * static_cast<double>(n) / static_cast<double>(k);

        out.points.emplace_back(y.cast<Scalar>());
        out.shifted.push_back(shifted);
    }
    return out;
}

/// Checks that the zero-sum members of `points` are pairwise non-dominated.
/// Points whose coordinate sum exceeds `tolerance` in magnitude are ignored.
template <typename Scalar>
bool hyperplane_nondominance_check(const std::vector<ObjectiveVector<Scalar>>& points, double tolerance = 1e-9) {
    std::vector<const ObjectiveVector<Scalar>*> zero_sum;
    for (const auto& p : points)
        if (std::abs(static_cast<double>(p.coords().sum())) <= tolerance) zero_sum.push_back(&p);
    for (std::size_t a = 0; a < zero_sum.size(); ++a)
        for (std::size_t b = a + 1; b < zero_sum.size(); ++b) {
            const auto& pa = zero_sum[a]->coords();
            const auto& pb = zero_sum[b]->coords();
            const bool a_weak = (pa.array() <= pb.array()).all();
            const bool b_weak = (pb.array() <= pa.array()).all();
            if ((a_weak || b_weak) && !(pa == pb)) return false;
        }
    return true;
}

}  // namespace pareto
