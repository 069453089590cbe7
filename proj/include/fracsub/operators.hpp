#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracsub {

enum class SchemeKind { Compact6, Compact8 };

/// Constant interior row of a symmetric banded Toeplitz operator.
struct CompactStencil {
    int half_bandwidth = 0;
    std::array<double, 7> row{};  // centered at index 3

    double at(int offset) const { return row[static_cast<std::size_t>(offset + 3)]; }
    int points() const { return 2 * half_bandwidth + 1; }
};

// Implicit operator applied to the time-derivative and source sides:
//   Compact6: 1 - d4/90   -> [-1/90, 2/45, 14/15, 2/45, -1/90]
//   Compact8: 1 + d6/560  -> [1/560, -3/280, 3/112, 27/28, 3/112, -3/280, 1/560]
CompactStencil compact_mass(SchemeKind k);

// High-order discrete Laplacian row (times h^2):
//   Compact6: d2 - d4/12          -> [-1/12, 4/3, -5/2, 4/3, -1/12]
//   Compact8: d2 - d4/12 + d6/90  -> [1/90, -3/20, 3/2, -49/18, 3/2, -3/20, 1/90]
CompactStencil compact_laplacian(SchemeKind k);

// Centered difference power d^p (p in {2, 4, 6}) applied where the stencil
// fits; output length is u.size() - p.
std::vector<double> central_difference_power(int p, std::span<const double> u);

// Convolution of u with the stencil row at fully interior indices;
// output length is u.size() - 2 * half_bandwidth.
std::vector<double> apply_stencil(const CompactStencil& s, std::span<const double> u);

// Least-squares slope of log r(h) vs log h where
//   r(h) = max_j | mass * u''(x_j)  -  laplacian * u(x_j) / h^2 |
// over interior nodes of a unit-interval grid, for each h in hs.
// Needs at least 3 grid levels.
double compact_residual_order(SchemeKind k,
                              const std::function<double(double)>& u,
                              const std::function<double(double)>& u_xx,
                              std::span<const double> hs);

// Discrete Riemann-Liouville derivative of the given order at the half point
// t_{k+1/2}: history holds u(t_0)..u(t_{k+1}) at one spatial point and the
// value returned is tau^(-order) * sum_l g[l] * u(t_{k+1-l}).
double rl_derivative_halfpoint(double order, std::span<const double> history, double tau);

}  // namespace fracsub
