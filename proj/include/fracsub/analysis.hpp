#pragma once

#include <span>
#include <vector>

#include "fracsub/operators.hpp"
#include "fracsub/problem.hpp"
#include "fracsub/solver.hpp"

namespace fracsub {

// Sufficient stability bound for the scheme: the condition value
//   (tau^alpha (-alpha^2+4alpha-2) A + tau^beta (-beta^2+4beta-2) B) / h^2
// must not exceed 37/120 (Compact6) resp. 279/952 (Compact8).  When both
// exponents are at most 2-sqrt(2) the quadratics are nonpositive and the
// condition holds for every tau and h.
struct StabilityReport {
    SchemeKind scheme = SchemeKind::Compact6;
    double alpha = 0, beta = 0, diff_a = 0, diff_b = 0, tau = 0, h = 0;
    double condition_value = 0;
    double bound = 0;
    bool satisfied = false;
    bool unconditional = false;
    double worst_ratio = 0;      // max |P/Q| over the sigma sweep
    bool p_nonnegative = false;  // P >= -1e-12 everywhere on the sweep
    double min_eigenvalue = 0;   // min of the closed-form circulant eigenvalues
    int eigen_cells = 0;         // M used for the eigenvalue column
};

// Amplification numerator/denominator of one Fourier mode at
// sigma = sin^2(theta/2) in [0, 1]:
//   Q = base(sigma) + g0 * weight(sigma),  P = base(sigma) - g1 * weight(sigma)
// where base = 1 - (8/45) sigma^2 and weight = 4 sigma (1 + sigma/3) for
// Compact6, base = 1 - (4/35) sigma^3 and weight = 4 sigma (1 + sigma/3 +
// (8/45) sigma^2) for Compact8.
struct SymbolPair {
    double Q = 0, P = 0;
};

SymbolPair amplification_symbols(SchemeKind k, double g0, double g1, double sigma);

// condition fields of the report only (worst_ratio etc. left zero)
StabilityReport stability_condition(SchemeKind k, double alpha, double beta,
                                    double diff_a, double diff_b, double tau, double h);

struct SweepResult {
    double worst_ratio = 0;
    double min_p = 0;
    bool p_nonnegative = false;
};

SweepResult amplification_sweep(SchemeKind k, double g0, double g1,
                                std::span<const double> sigmas);

// uniform sigma grid on [0, 1], endpoints always included
std::vector<double> sigma_grid(int samples);

// Closed-form eigenvalues of the circulant model of the system matrix,
// lambda_j = Q(sin^2(pi j / (M-1))), j = 1..M-1; all positive for g0 > 0.
std::vector<double> circulant_eigenvalues(SchemeKind k, int cells, double g0);

// Full report: condition, sweep over `sigma_samples` points, eigenvalue minimum.
StabilityReport analyze_stability(SchemeKind k, double alpha, double beta,
                                  double diff_a, double diff_b, double tau, double h,
                                  int eigen_cells = 100, int sigma_samples = 1001);

// max over interior nodes and all stored levels of |U - exact|
double max_error(const SolutionHistory& history, const SpaceTimeFn& exact);

double temporal_order(double e_coarse, double e_fine);          // log2(e_coarse/e_fine)
double spatial_order(double e1, double h1, double e2, double h2);  // ln(e1/e2)/ln(h1/h2)

}  // namespace fracsub
