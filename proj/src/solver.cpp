#include "fracsub/solver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace fracsub {

namespace {

// vanishing 6th forward difference: exact through degree 5
constexpr double kExtrap6[6] = {6.0, -15.0, 20.0, -15.0, 6.0, -1.0};
// vanishing 8th forward difference, first and second ghost: exact through degree 7
constexpr double kExtrap8First[8] = {8.0, -28.0, 56.0, -70.0, 56.0, -28.0, 8.0, -1.0};
constexpr double kExtrap8Second[8] = {36.0, -168.0, 378.0, -504.0, 420.0, -216.0, 63.0, -8.0};

std::span<const double> extrap_row(SchemeKind k, int ghost)
{
    if (k == SchemeKind::Compact6) return {kExtrap6, 6};
    return ghost == 1 ? std::span<const double>{kExtrap8First, 8}
                      : std::span<const double>{kExtrap8Second, 8};
}

constexpr int kBand = 7;  // uniform bandwidth covering the ghost-widened rows

}  // namespace

int ghost_count(SchemeKind k)
{
    return k == SchemeKind::Compact6 ? 1 : 2;
}

std::vector<double> ghost_extrapolate(std::span<const double> level, Side side, SchemeKind k)
{
    if (level.size() < 8)
        throw std::invalid_argument("ghost_extrapolate: need at least 8 grid points");
    const int ng = ghost_count(k);
    std::vector<double> out(static_cast<std::size_t>(ng));
    for (int g = 1; g <= ng; ++g) {
        const std::span<const double> e = extrap_row(k, g);
        double acc = 0.0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            const std::size_t idx =
                side == Side::Left ? i : level.size() - 1 - i;
            acc += e[i] * level[idx];
        }
        out[static_cast<std::size_t>(g - 1)] = acc;
    }
    return out;
}

SchemeSystem assemble_lhs(SchemeKind k, int cells, double g0, GhostPolicy policy)
{
    if (cells < 12)
        throw std::invalid_argument("assemble_lhs: need at least 12 cells");
    if (!(g0 > 0.0))
        throw std::invalid_argument("assemble_lhs: g0 must be positive");

    const CompactStencil mass = compact_mass(k);
    const CompactStencil lap = compact_laplacian(k);
    const int hb = mass.half_bandwidth;
    const int n = cells - 1;

    BandedMatrix a(n, kBand, kBand);
    std::vector<KnownColumnTerm> known;

    auto add_unknown = [&](int row, int grid_index, double coeff) {
        a.at(row, grid_index - 1) += coeff;
    };

    for (int j = 1; j <= cells - 1; ++j) {
        const int row = j - 1;
        for (int m = -hb; m <= hb; ++m) {
            const int idx = j + m;
            const double coeff = mass.at(m) - g0 * lap.at(m);
            if (idx >= 1 && idx <= cells - 1) {
                add_unknown(row, idx, coeff);
            } else if (idx == 0 || idx == cells) {
                known.push_back({row, coeff, idx});
            } else if (policy == GhostPolicy::ExactSolution) {
                known.push_back({row, coeff, idx});
            } else {
                // eliminate the new-level ghost through the extrapolation row;
                // the boundary-node share becomes a known term
                const int g = idx < 0 ? -idx : idx - cells;
                const std::span<const double> e = extrap_row(k, g);
                for (std::size_t i = 0; i < e.size(); ++i) {
                    const int gi = idx < 0 ? static_cast<int>(i)
                                           : cells - static_cast<int>(i);
                    if (gi >= 1 && gi <= cells - 1)
                        add_unknown(row, gi, coeff * e[i]);
                    else
                        known.push_back({row, coeff * e[i], gi});
                }
            }
        }
    }

    BandedMatrix copy = a;
    return SchemeSystem{k, policy, cells, g0, std::move(copy), BandedLU(std::move(a)),
                        std::move(known)};
}

namespace {

SolveOptions check_options(const ProblemSpec& spec, SolveOptions opt)
{
    if (opt.space_cells < 12)
        throw std::invalid_argument("Stepper: need at least 12 cells");
    if (opt.time_steps < 0)
        throw std::invalid_argument("Stepper: negative step count");
    if (opt.ghosts == GhostPolicy::ExactSolution && !spec.has_exact())
        throw std::invalid_argument(
            "Stepper: ExactSolution ghost policy needs a problem with an exact field");
    return opt;
}

}  // namespace

Stepper::Stepper(ProblemSpec spec, SolveOptions opt)
    : spec_(validated(std::move(spec))),
      opt_(check_options(spec_, opt)),
      mass_(compact_mass(opt_.scheme)),
      lap_(compact_laplacian(opt_.scheme)),
      h_(spec_.length / opt_.space_cells),
      tau_(opt_.time_steps > 0 ? spec_.horizon / opt_.time_steps : spec_.horizon),
      weights_(combined_weights(spec_.alpha, spec_.beta, spec_.diff_a, spec_.diff_b,
                                tau_, h_, static_cast<std::size_t>(opt_.time_steps) + 1)),
      sys_(assemble_lhs(opt_.scheme, opt_.space_cells, weights_.values[0], opt_.ghosts))
{
    history_.h = h_;
    history_.tau = tau_;

    std::vector<double> level(static_cast<std::size_t>(opt_.space_cells) + 1);
    for (int j = 0; j <= opt_.space_cells; ++j)
        level[static_cast<std::size_t>(j)] = spec_.initial(x(j));
    extended_.push_back(extend(level, 0.0));
    history_.levels.push_back(std::move(level));
}

std::vector<double> Stepper::extend(const std::vector<double>& level, double t) const
{
    const int ng = ghost_count(opt_.scheme);
    const int m = opt_.space_cells;
    std::vector<double> ext(static_cast<std::size_t>(m + 1 + 2 * ng));
    for (int j = 0; j <= m; ++j)
        ext[static_cast<std::size_t>(j + ng)] = level[static_cast<std::size_t>(j)];
    if (opt_.ghosts == GhostPolicy::ExactSolution) {
        for (int g = 1; g <= ng; ++g) {
            ext[static_cast<std::size_t>(ng - g)] = spec_.exact(x(-g), t);
            ext[static_cast<std::size_t>(ng + m + g)] = spec_.exact(x(m + g), t);
        }
    } else {
        const std::vector<double> left = ghost_extrapolate(level, Side::Left, opt_.scheme);
        const std::vector<double> right = ghost_extrapolate(level, Side::Right, opt_.scheme);
        for (int g = 1; g <= ng; ++g) {
            ext[static_cast<std::size_t>(ng - g)] = left[static_cast<std::size_t>(g - 1)];
            ext[static_cast<std::size_t>(ng + m + g)] = right[static_cast<std::size_t>(g - 1)];
        }
    }
    return ext;
}

std::span<const double> Stepper::extended_level(int m) const
{
    return extended_.at(static_cast<std::size_t>(m));
}

std::vector<double> Stepper::assemble_rhs(int k) const
{
    const int m = opt_.space_cells;
    const int ng = ghost_count(opt_.scheme);
    const int hb = mass_.half_bandwidth;
    const double tau = history_.tau;
    if (weights_.length() + 1 < static_cast<std::size_t>(k) + 2)
        throw std::invalid_argument("assemble_rhs: weight table shorter than k+2");
    if (k >= static_cast<int>(history_.levels.size()))
        throw std::invalid_argument("assemble_rhs: level not computed yet");

    const double t_half = (static_cast<double>(k) + 0.5) * tau;
    std::vector<double> f_ext(static_cast<std::size_t>(m + 1 + 2 * ng));
    for (int j = -ng; j <= m + ng; ++j)
        f_ext[static_cast<std::size_t>(j + ng)] = spec_.source(x(j), t_half);

    auto conv = [&](const CompactStencil& s, std::span<const double> ext, int j) {
        double acc = 0.0;
        for (int off = -hb; off <= hb; ++off)
            acc += s.at(off) * ext[static_cast<std::size_t>(j + off + ng)];
        return acc;
    };

    const double g1 = weights_.values[1];
    std::vector<double> rhs(static_cast<std::size_t>(m - 1));
    const std::span<const double> cur = extended_[static_cast<std::size_t>(k)];
    for (int j = 1; j <= m - 1; ++j)
        rhs[static_cast<std::size_t>(j - 1)] =
            conv(mass_, cur, j) + g1 * conv(lap_, cur, j) + tau * conv(mass_, f_ext, j);

    for (int l = 2; l <= k + 1; ++l) {
        const double gl = weights_.values[static_cast<std::size_t>(l)];
        const std::span<const double> lev = extended_[static_cast<std::size_t>(k + 1 - l)];
        for (int j = 1; j <= m - 1; ++j)
            rhs[static_cast<std::size_t>(j - 1)] += gl * conv(lap_, lev, j);
    }

    const double t_new = (static_cast<double>(k) + 1.0) * tau;
    const double bl = spec_.boundary_left(t_new);
    const double br = spec_.boundary_right(t_new);
    for (const KnownColumnTerm& term : sys_.known_terms) {
        double value;
        if (term.grid_index == 0) value = bl;
        else if (term.grid_index == m) value = br;
        else value = spec_.exact(x(term.grid_index), t_new);
        rhs[static_cast<std::size_t>(term.row)] -= term.coeff * value;
    }
    return rhs;
}

void Stepper::advance()
{
    const int k = level();
    if (k >= opt_.time_steps)
        throw std::logic_error("Stepper::advance past the configured horizon");
    const std::vector<double> interior = sys_.lu.solve(assemble_rhs(k));

    const double t_new = (static_cast<double>(k) + 1.0) * history_.tau;
    std::vector<double> lev(static_cast<std::size_t>(opt_.space_cells) + 1);
    lev.front() = spec_.boundary_left(t_new);
    lev.back() = spec_.boundary_right(t_new);
    for (int j = 1; j <= opt_.space_cells - 1; ++j)
        lev[static_cast<std::size_t>(j)] = interior[static_cast<std::size_t>(j - 1)];
    extended_.push_back(extend(lev, t_new));
    history_.levels.push_back(std::move(lev));
}

SolutionHistory solve(const ProblemSpec& spec, const SolveOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    Stepper stepper(spec, opt);
    for (int k = 0; k < opt.time_steps; ++k)
        stepper.advance();
    SolutionHistory out = stepper.history();
    out.wall_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace fracsub
