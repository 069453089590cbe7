#include "fracsub/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracsub {

std::vector<double> gl_weights(double order, std::size_t n)
{
    if (!(order > 0.0) || order > 1.0 || !std::isfinite(order))
        throw std::invalid_argument("gl_weights: order must lie in (0, 1], got " +
                                    std::to_string(order));
    std::vector<double> w(n + 1);
    w[0] = 1.0;
    for (std::size_t l = 1; l <= n; ++l)
        w[l] = w[l - 1] * ((static_cast<double>(l) - 1.0 - order) / static_cast<double>(l));
    return w;
}

std::vector<double> shifted_weights(double order, std::size_t n)
{
    if (!(order > 0.0 && order < 1.0))
        throw std::invalid_argument("shifted_weights: order must lie in (0, 1), got " +
                                    std::to_string(order));
    const std::vector<double> w = gl_weights(order, n);
    const double cp = 0.5 * (1.0 + order);
    const double cm = 0.5 * (1.0 - order);
    std::vector<double> g(n + 1);
    g[0] = cp * w[0];
    for (std::size_t l = 1; l <= n; ++l)
        g[l] = cp * w[l] + cm * w[l - 1];
    return g;
}

WeightTable WeightTable::build(double order, std::size_t n)
{
    WeightTable t;
    t.order = order;
    t.raw = gl_weights(order, n);
    t.shifted = shifted_weights(order, n);
    return t;
}

CombinedWeights combined_weights(double alpha, double beta,
                                 double diff_a, double diff_b,
                                 double tau, double h, std::size_t n)
{
    if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("combined_weights: exponents must lie in (0, 1)");
    if (!(diff_a > 0.0) || !(diff_b > 0.0))
        throw std::invalid_argument("combined_weights: diffusion coefficients must be positive");
    if (!(tau > 0.0) || !(h > 0.0))
        throw std::invalid_argument("combined_weights: tau and h must be positive");

    CombinedWeights c;
    c.alpha = alpha;
    c.beta = beta;
    c.mu_alpha = std::pow(tau, alpha) * diff_a / (h * h);
    c.mu_beta = std::pow(tau, beta) * diff_b / (h * h);
    const std::vector<double> ga = shifted_weights(1.0 - alpha, n);
    const std::vector<double> gb = shifted_weights(1.0 - beta, n);
    c.values.resize(n + 1);
    for (std::size_t l = 0; l <= n; ++l)
        c.values[l] = c.mu_alpha * ga[l] + c.mu_beta * gb[l];
    return c;
}

}  // namespace fracsub
