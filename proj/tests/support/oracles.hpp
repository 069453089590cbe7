#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <vector>

namespace oracles {

using Rational = boost::multiprecision::cpp_rational;

// exact rational weight sequences for order = num/den
std::vector<Rational> rational_gl_weights(long num, long den, int n);
std::vector<Rational> rational_shifted_weights(long num, long den, int n);

// eigenvalues of a symmetric matrix by the cyclic Jacobi method, ascending
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a,
                                       double tol = 1e-14);

// dense LU with partial pivoting and retro-swapped L, so that L*U = P*A
struct DenseLU {
    std::vector<int> perm;                 // row i of P*A is row perm[i] of A
    std::vector<std::vector<double>> lower, upper;
};
DenseLU dense_lu(std::vector<std::vector<double>> a);
std::vector<double> dense_solve(const DenseLU& lu, std::vector<double> b);

// max |L*U - P*A| / max |A|
double lu_reconstruction_residual(const DenseLU& lu,
                                  const std::vector<std::vector<double>>& a);

// analytic Riemann-Liouville derivative of t^p (base point 0)
double rl_power(double order, double p, double t);

// second derivative by Richardson-extrapolated central differences
double second_derivative(const std::function<double(double)>& f, double x,
                         double h0 = 0.005);

// least-squares slope of log(y) against log(x)
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace oracles
