#include "fracsub/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "fracsub/weights.hpp"

namespace fracsub {

CompactStencil compact_mass(SchemeKind k)
{
    CompactStencil s;
    if (k == SchemeKind::Compact6) {
        s.half_bandwidth = 2;
        s.row = {0.0, -1.0 / 90.0, 2.0 / 45.0, 14.0 / 15.0, 2.0 / 45.0, -1.0 / 90.0, 0.0};
    } else {
        s.half_bandwidth = 3;
        s.row = {1.0 / 560.0, -3.0 / 280.0, 3.0 / 112.0, 27.0 / 28.0,
                 3.0 / 112.0, -3.0 / 280.0, 1.0 / 560.0};
    }
    return s;
}

CompactStencil compact_laplacian(SchemeKind k)
{
    CompactStencil s;
    if (k == SchemeKind::Compact6) {
        s.half_bandwidth = 2;
        s.row = {0.0, -1.0 / 12.0, 4.0 / 3.0, -5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0, 0.0};
    } else {
        s.half_bandwidth = 3;
        s.row = {1.0 / 90.0, -3.0 / 20.0, 3.0 / 2.0, -49.0 / 18.0,
                 3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0};
    }
    return s;
}

std::vector<double> central_difference_power(int p, std::span<const double> u)
{
    if (p != 2 && p != 4 && p != 6)
        throw std::invalid_argument("central_difference_power: p must be 2, 4 or 6");
    if (u.size() < static_cast<std::size_t>(p) + 1)
        throw std::invalid_argument("central_difference_power: input too short");

    std::vector<double> cur(u.begin(), u.end());
    for (int pass = 0; pass < p / 2; ++pass) {
        std::vector<double> next(cur.size() - 2);
        for (std::size_t j = 0; j + 2 < cur.size(); ++j)
            next[j] = cur[j + 2] - 2.0 * cur[j + 1] + cur[j];
        cur = std::move(next);
    }
    return cur;
}

std::vector<double> apply_stencil(const CompactStencil& s, std::span<const double> u)
{
    const std::size_t w = static_cast<std::size_t>(s.points());
    if (u.size() < w)
        throw std::invalid_argument("apply_stencil: input shorter than the stencil");
    std::vector<double> out(u.size() - w + 1);
    for (std::size_t j = 0; j < out.size(); ++j) {
        double acc = 0.0;
        for (int m = -s.half_bandwidth; m <= s.half_bandwidth; ++m)
            acc += s.at(m) * u[j + static_cast<std::size_t>(m + s.half_bandwidth)];
        out[j] = acc;
    }
    return out;
}

double compact_residual_order(SchemeKind k,
                              const std::function<double(double)>& u,
                              const std::function<double(double)>& u_xx,
                              std::span<const double> hs)
{
    if (hs.size() < 3)
        throw std::invalid_argument("compact_residual_order: need at least 3 grid levels");
    const CompactStencil mass = compact_mass(k);
    const CompactStencil lap = compact_laplacian(k);
    const int hb = mass.half_bandwidth;

    std::vector<double> lx, ly;
    for (double h : hs) {
        const int m = static_cast<int>(std::lround(1.0 / h));
        std::vector<double> uv(static_cast<std::size_t>(m) + 1), dv(uv.size());
        for (int j = 0; j <= m; ++j) {
            const double x = j * h;
            uv[static_cast<std::size_t>(j)] = u(x);
            dv[static_cast<std::size_t>(j)] = u_xx(x);
        }
        double r = 0.0;
        for (int j = hb; j <= m - hb; ++j) {
            double a = 0.0, b = 0.0;
            for (int off = -hb; off <= hb; ++off) {
                a += mass.at(off) * dv[static_cast<std::size_t>(j + off)];
                b += lap.at(off) * uv[static_cast<std::size_t>(j + off)];
            }
            r = std::max(r, std::fabs(a - b / (h * h)));
        }
        lx.push_back(std::log(h));
        ly.push_back(std::log(r));
    }

    // least-squares slope
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double rl_derivative_halfpoint(double order, std::span<const double> history, double tau)
{
    if (history.empty())
        throw std::invalid_argument("rl_derivative_halfpoint: empty history");
    if (!(tau > 0.0))
        throw std::invalid_argument("rl_derivative_halfpoint: tau must be positive");
    const std::size_t kp1 = history.size() - 1;
    const std::vector<double> g = shifted_weights(order, kp1);
    double acc = 0.0;
    for (std::size_t l = 0; l <= kp1; ++l)
        acc += g[l] * history[kp1 - l];
    return acc / std::pow(tau, order);
}

}  // namespace fracsub
