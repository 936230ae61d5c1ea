#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace pareto::analysis {

/// Probability table Q(d, k) that a random tree node at depth d has order k
/// (the number of objectives in which the candidate lies outside the node's
/// cell) when every split objective is drawn uniformly from m objectives.
/// Rows are depths 0..d_max, columns orders 0..m.
using OrderDistribution = Eigen::MatrixXd;

OrderDistribution q_table(int m, int d_max);

/// Largest |row sum − 1| over the table.
double max_row_sum_error(const OrderDistribution& q);

/// binom(n, k) in floating point via the multiplicative recurrence.
double binomial(int n, int k);

/// Expected number of depth-d nodes comparable to a random candidate when no
/// objective repeats along a root-to-leaf path: 1 + Σ_{k=1..d} 2^{1−k} C(d,k).
double expected_comparable_nodes(int d);

/// Closed form of the same quantity: 2^{d·log₂(3/2)+1} − 1.
double expected_comparable_nodes_closed(int d);

struct ScalingFit {
    double exponent = 0.0;   ///< slope of log₂ cost against log₂ size
    double intercept = 0.0;  ///< log₂ cost at size 1
    double residual = 0.0;   ///< root-mean-square residual in log₂ space
    std::size_t samples = 0;
};

/// Least-squares power-law fit cost ≈ 2^intercept · size^exponent. Needs at
/// least two distinct positive sizes and positive costs.
ScalingFit fit_exponent(const std::vector<std::pair<double, double>>& samples);

}  // namespace pareto::analysis
