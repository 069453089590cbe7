#include "fracsub/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracsub/weights.hpp"

namespace fracsub {

namespace {

double stability_bound(SchemeKind k)
{
    return k == SchemeKind::Compact6 ? 37.0 / 120.0 : 279.0 / 952.0;
}

double quadratic(double g)
{
    return -g * g + 4.0 * g - 2.0;  // nonpositive iff g <= 2 - sqrt(2) on (0,1)
}

}  // namespace

SymbolPair amplification_symbols(SchemeKind k, double g0, double g1, double sigma)
{
    double base, weight;
    if (k == SchemeKind::Compact6) {
        base = 1.0 - (8.0 / 45.0) * sigma * sigma;
        weight = 4.0 * sigma * (1.0 + sigma / 3.0);
    } else {
        base = 1.0 - (4.0 / 35.0) * sigma * sigma * sigma;
        weight = 4.0 * sigma * (1.0 + sigma / 3.0 + (8.0 / 45.0) * sigma * sigma);
    }
    return SymbolPair{base + g0 * weight, base - g1 * weight};
}

StabilityReport stability_condition(SchemeKind k, double alpha, double beta,
                                    double diff_a, double diff_b, double tau, double h)
{
    if (!(alpha > 0 && alpha < 1) || !(beta > 0 && beta < 1))
        throw std::invalid_argument("stability_condition: exponents must lie in (0, 1)");
    if (!(diff_a > 0) || !(diff_b > 0) || !(tau > 0) || !(h > 0))
        throw std::invalid_argument("stability_condition: scale parameters must be positive");

    StabilityReport r;
    r.scheme = k;
    r.alpha = alpha;
    r.beta = beta;
    r.diff_a = diff_a;
    r.diff_b = diff_b;
    r.tau = tau;
    r.h = h;
    r.condition_value = (std::pow(tau, alpha) * quadratic(alpha) * diff_a +
                         std::pow(tau, beta) * quadratic(beta) * diff_b) /
                        (h * h);
    r.bound = stability_bound(k);
    r.satisfied = r.condition_value <= r.bound;
    const double edge = 2.0 - std::sqrt(2.0);
    r.unconditional = alpha <= edge && beta <= edge;
    return r;
}

SweepResult amplification_sweep(SchemeKind k, double g0, double g1,
                                std::span<const double> sigmas)
{
    if (!(g0 > 0.0))
        throw std::invalid_argument("amplification_sweep: g0 must be positive");
    SweepResult out;
    out.min_p = std::numeric_limits<double>::infinity();
    for (double s : sigmas) {
        const SymbolPair sp = amplification_symbols(k, g0, g1, s);
        out.worst_ratio = std::max(out.worst_ratio, std::fabs(sp.P / sp.Q));
        out.min_p = std::min(out.min_p, sp.P);
    }
    out.p_nonnegative = out.min_p >= -1e-12;
    return out;
}

std::vector<double> sigma_grid(int samples)
{
    if (samples < 2) throw std::invalid_argument("sigma_grid: need at least 2 samples");
    std::vector<double> s(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
        s[static_cast<std::size_t>(i)] = static_cast<double>(i) / (samples - 1);
    s.back() = 1.0;
    return s;
}

std::vector<double> circulant_eigenvalues(SchemeKind k, int cells, double g0)
{
    if (cells < 3) throw std::invalid_argument("circulant_eigenvalues: need cells >= 3");
    if (!(g0 > 0.0)) throw std::invalid_argument("circulant_eigenvalues: g0 must be positive");
    std::vector<double> lam(static_cast<std::size_t>(cells - 1));
    for (int j = 1; j <= cells - 1; ++j) {
        const double s = std::sin(M_PI * j / (cells - 1));
        lam[static_cast<std::size_t>(j - 1)] =
            amplification_symbols(k, g0, 0.0, s * s).Q;
    }
    return lam;
}

StabilityReport analyze_stability(SchemeKind k, double alpha, double beta,
                                  double diff_a, double diff_b, double tau, double h,
                                  int eigen_cells, int sigma_samples)
{
    StabilityReport r = stability_condition(k, alpha, beta, diff_a, diff_b, tau, h);
    const CombinedWeights w = combined_weights(alpha, beta, diff_a, diff_b, tau, h, 1);
    const std::vector<double> sigmas = sigma_grid(sigma_samples);
    const SweepResult sweep = amplification_sweep(k, w.values[0], w.values[1], sigmas);
    r.worst_ratio = sweep.worst_ratio;
    r.p_nonnegative = sweep.p_nonnegative;
    const std::vector<double> lam = circulant_eigenvalues(k, eigen_cells, w.values[0]);
    r.min_eigenvalue = *std::min_element(lam.begin(), lam.end());
    r.eigen_cells = eigen_cells;
    return r;
}

double max_error(const SolutionHistory& history, const SpaceTimeFn& exact)
{
    if (!exact) throw std::invalid_argument("max_error: exact solution missing");
    const int m = history.cells();
    double e = 0.0;
    for (int k = 0; k <= history.steps(); ++k) {
        const double t = k * history.tau;
        for (int j = 1; j <= m - 1; ++j)
            e = std::max(e, std::fabs(history.levels[static_cast<std::size_t>(k)]
                                                    [static_cast<std::size_t>(j)] -
                                      exact(j * history.h, t)));
    }
    return e;
}

double temporal_order(double e_coarse, double e_fine)
{
    if (!(e_coarse > 0.0) || !(e_fine > 0.0))
        throw std::invalid_argument("temporal_order: errors must be positive");
    return std::log2(e_coarse / e_fine);
}

double spatial_order(double e1, double h1, double e2, double h2)
{
    if (!(e1 > 0.0) || !(e2 > 0.0))
        throw std::invalid_argument("spatial_order: errors must be positive");
    if (h1 == h2) throw std::invalid_argument("spatial_order: equal grid spacings");
    return std::log(e1 / e2) / std::log(h1 / h2);
}

}  // namespace fracsub
