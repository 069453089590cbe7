#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fracsub {

using SpaceTimeFn = std::function<double(double, double)>;
using SpaceFn = std::function<double(double)>;
using TimeFn = std::function<double(double)>;

// Initial-boundary-value problem
//   u_t = (A * D^(1-alpha) + B * D^(1-beta)) u_xx + f   on (0, L) x (0, T],
//   u(x, 0) = initial(x),  u(0, t) = boundary_left(t),  u(L, t) = boundary_right(t),
// with D the Riemann-Liouville derivative in time.  The source must be
// evaluable on a margin of three grid spacings outside [0, L]: the assembled
// right-hand side samples it at ghost abscissae next to the boundary.
struct ProblemSpec {
    std::string name;
    double alpha = 0.5, beta = 0.5;    // fractional exponents, in (0, 1)
    double diff_a = 1.0, diff_b = 1.0; // anomalous diffusion coefficients
    double length = 1.0;               // L
    double horizon = 1.0;              // T
    SpaceTimeFn source;
    SpaceFn initial;
    TimeFn boundary_left, boundary_right;
    SpaceTimeFn exact;                  // optional; enables error reporting

    bool has_exact() const { return static_cast<bool>(exact); }
};

// Returns the list of violated invariants (empty means valid):
// exponents strictly inside (0,1), positive coefficients and extents,
// corner compatibility initial(0)=boundary_left(0), initial(L)=boundary_right(0)
// to 1e-12 absolute, all data functions present.
std::vector<std::string> validate(const ProblemSpec& spec);

// Throws std::invalid_argument listing all violations; returns spec unchanged otherwise.
ProblemSpec validated(ProblemSpec spec);

// Built-in manufactured benchmark on [0,1] x [0,1]:
//   u(x,t) = t^(alpha+beta+2) x^12 (1-x)^12 sin(pi x)
double example_exact(double x, double t, double alpha, double beta);

// Source that makes the manufactured u satisfy the equation with A = B = 1;
// globally defined in x, so ghost abscissae are fine.
double example_source(double x, double t, double alpha, double beta);

// ProblemSpec for the manufactured benchmark (reserved name "paper-example").
ProblemSpec example_problem(double alpha, double beta);

// Load a problem from a JSON description (see README for the schema) or
// resolve the reserved name.  alpha/beta, when given, override the stored values.
ProblemSpec load_problem(const std::string& name_or_path,
                         std::optional<double> alpha = std::nullopt,
                         std::optional<double> beta = std::nullopt);

ProblemSpec load_problem_json(const std::string& path,
                              std::optional<double> alpha = std::nullopt,
                              std::optional<double> beta = std::nullopt);

}  // namespace fracsub
