#pragma once

#include <cstddef>
#include <vector>

namespace fracsub {

// Binomial weights of the fractional difference operator of a given order,
// w[l] = (-1)^l * C(order, l), generated by the multiplicative recurrence
//   w[0] = 1,  w[l] = w[l-1] * (l - 1 - order) / l.
// For order in (0,1) every w[l] with l >= 1 is negative and the full series
// sums to zero.  Exact for order = 1 (collapses to [1, -1, 0, ...]).
std::vector<double> gl_weights(double order, std::size_t n);

// Shifted weights giving second-order accuracy at the half time point:
//   g[0] = (1+order)/2,
//   g[l] = (1+order)/2 * w[l] + (1-order)/2 * w[l-1],  l >= 1.
// Requires order in (0,1).
std::vector<double> shifted_weights(double order, std::size_t n);

/// Raw and shifted weight sequences for one fractional order.
struct WeightTable {
    double order = 0.0;
    std::vector<double> raw;      // w[0..n]
    std::vector<double> shifted;  // g[0..n]

    std::size_t length() const { return raw.empty() ? 0 : raw.size() - 1; }

    static WeightTable build(double order, std::size_t n);
};

/// Scheme weights g[l] = mu_alpha * g^(1-alpha)[l] + mu_beta * g^(1-beta)[l]
/// with mu_alpha = tau^alpha * A / h^2 and mu_beta = tau^beta * B / h^2.
/// Computed once per (tau, h, n) and reused for the whole time loop.
struct CombinedWeights {
    double alpha = 0.0, beta = 0.0;
    double mu_alpha = 0.0, mu_beta = 0.0;
    std::vector<double> values;   // g[0..n]

    std::size_t length() const { return values.empty() ? 0 : values.size() - 1; }
};

CombinedWeights combined_weights(double alpha, double beta,
                                 double diff_a, double diff_b,
                                 double tau, double h, std::size_t n);

}  // namespace fracsub
