#pragma once

#include <span>
#include <vector>

#include "fracsub/banded.hpp"
#include "fracsub/operators.hpp"
#include "fracsub/problem.hpp"
#include "fracsub/weights.hpp"

namespace fracsub {

enum class Side { Left, Right };

// Ghost values next to the boundary.  Extrapolate uses the polynomial
// formulas with vanishing 6th (Compact6) resp. 8th (Compact8) forward
// difference, applied to each stored level; the unknown new-level ghosts are
// eliminated into the system so the step stays implicit.  ExactSolution
// samples the problem's exact field at the ghost abscissae; it needs an
// exact solution that is defined slightly outside [0, L] and is the right
// choice for manufactured-solution convergence studies on coarse grids,
// where the extrapolation error of steep profiles would dominate.
enum class GhostPolicy { Extrapolate, ExactSolution };

int ghost_count(SchemeKind k);  // ghosts per side: 1 (Compact6) or 2 (Compact8)

// Ghost values [u(-h)] or [u(-h), u(-2h)] (mirrored for Side::Right) by
// polynomial extrapolation; exact for polynomials of degree <= 5 resp. 7.
// Requires at least 8 points.
std::vector<double> ghost_extrapolate(std::span<const double> level, Side side, SchemeKind k);

struct SolveOptions {
    SchemeKind scheme = SchemeKind::Compact6;
    int space_cells = 0;  // M: grid x_0..x_M, h = L/M; at least 12
    int time_steps = 0;   // N: tau = T/N; at least 0
    GhostPolicy ghosts = GhostPolicy::Extrapolate;
};

struct SolutionHistory {
    std::vector<std::vector<double>> levels;  // each of size M+1, boundaries included
    double tau = 0.0, h = 0.0;
    double wall_seconds = 0.0;

    int cells() const { return levels.empty() ? 0 : static_cast<int>(levels[0].size()) - 1; }
    int steps() const { return static_cast<int>(levels.size()) - 1; }
};

// A term moved to the right-hand side because its column is not an unknown:
// grid_index is 0 or M (boundary) or a ghost index (<0 or >M, ExactSolution
// policy only).  At step time RHS[row] -= coeff * value(t_{k+1}).
struct KnownColumnTerm {
    int row;
    double coeff;
    int grid_index;
};

// Time-independent left-hand side (mass - g0 * laplacian), boundary and ghost
// columns eliminated, factored once per solve.  Band kept at uniform width 7,
// wide enough for the rows widened by ghost elimination.
struct SchemeSystem {
    SchemeKind scheme = SchemeKind::Compact6;
    GhostPolicy policy = GhostPolicy::Extrapolate;
    int cells = 0;
    double g0 = 0.0;
    BandedMatrix matrix;  // pre-factorization copy
    BandedLU lu;
    std::vector<KnownColumnTerm> known_terms;
};

SchemeSystem assemble_lhs(SchemeKind k, int cells, double g0,
                          GhostPolicy policy = GhostPolicy::Extrapolate);

// One solve in progress: full history plus per-level ghost values.
class Stepper {
public:
    Stepper(ProblemSpec spec, SolveOptions opt);

    int level() const { return static_cast<int>(history_.levels.size()) - 1; }
    void advance();

    // Right-hand side of the linear system that advances level k to k+1
    // (memory sum over all stored levels, source term, boundary/ghost moves).
    std::vector<double> assemble_rhs(int k) const;

    const ProblemSpec& spec() const { return spec_; }
    const SolveOptions& options() const { return opt_; }
    const SchemeSystem& system() const { return sys_; }
    const CombinedWeights& weights() const { return weights_; }
    const SolutionHistory& history() const { return history_; }

    // level m including ghost values, indices -g..M+g shifted by +g
    std::span<const double> extended_level(int m) const;

    double x(int j) const { return static_cast<double>(j) * h_; }

private:
    std::vector<double> extend(const std::vector<double>& level, double t) const;

    ProblemSpec spec_;
    SolveOptions opt_;
    CompactStencil mass_, lap_;
    double h_ = 0.0, tau_ = 0.0;
    CombinedWeights weights_;
    SchemeSystem sys_;
    SolutionHistory history_;
    std::vector<std::vector<double>> extended_;
};

// Run N steps; history holds N+1 levels and the wall-clock time.
SolutionHistory solve(const ProblemSpec& spec, const SolveOptions& opt);

}  // namespace fracsub
