#include "pareto/analysis.hpp"

#include <cmath>
#include <string>

#include "pareto/objective_vector.hpp"

namespace pareto::analysis {

OrderDistribution q_table(int m, int d_max) {
    if (m < 1) throw usage_error("q_table needs m >= 1");
    if (d_max < 0) throw usage_error("q_table needs d_max >= 0");
    OrderDistribution q = OrderDistribution::Zero(d_max + 1, m + 1);
    q(0, 0) = 1.0;
    const double md = m;
    for (int d = 1; d <= d_max; ++d) {
        q(d, 0) = 0.5 * q(d - 1, 0);
        for (int k = 1; k <= m; ++k) {
            q(d, k) = 0.5 * (q(d - 1, k - 1) * (md - k + 1) / md + q(d - 1, k) * (md + k) / md);
        }
    }
    return q;
}

double max_row_sum_error(const OrderDistribution& q) {
    return (q.rowwise().sum().array() - 1.0).abs().maxCoeff();
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

double expected_comparable_nodes(int d) {
    if (d < 0) throw usage_error("depth must be non-negative");
    double sum = 1.0;
    double c = 1.0;  // C(d, k), advanced by the recurrence
    for (int k = 1; k <= d; ++k) {
        c = c * (d - k + 1) / k;
        sum += std::ldexp(c, 1 - k);
    }
    return sum;
}

double expected_comparable_nodes_closed(int d) {
    if (d < 0) throw usage_error("depth must be non-negative");
    return std::exp2(d * std::log2(1.5) + 1.0) - 1.0;
}

ScalingFit fit_exponent(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 2) throw usage_error("scaling fit needs at least 2 samples");
    Eigen::ArrayXd x(static_cast<Eigen::Index>(samples.size()));
    Eigen::ArrayXd y(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const auto [n, t] = samples[static_cast<std::size_t>(i)];
        if (!(n > 0.0) || !(t > 0.0))
            throw usage_error("scaling fit needs positive sizes and costs (sample " + std::to_string(i) + ")");
        x[i] = std::log2(n);
        y[i] = std::log2(t);
    }
    const Eigen::ArrayXd dx = x - x.mean();
    const double sxx = dx.square().sum();
    if (!(sxx > 0.0)) throw usage_error("scaling fit needs at least 2 distinct sizes");

    ScalingFit fit;
    fit.samples = samples.size();
    fit.exponent = (dx * (y - y.mean())).sum() / sxx;
    fit.intercept = y.mean() - fit.exponent * x.mean();
    const Eigen::ArrayXd r = y - (fit.intercept + fit.exponent * x);
    fit.residual = std::sqrt(r.square().mean());
    return fit;
}

}  // namespace pareto::analysis
