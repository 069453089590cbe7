#include "fracsub/harness.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fracsub {

namespace {

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double solution_magnitude(const SolutionHistory& history)
{
    double m = 0.0;
    for (const auto& level : history.levels)
        for (double v : level) m = std::max(m, std::fabs(v));
    return m;
}

struct Cell {
    double alpha, beta, tau, h;
    int cells, steps;
};

StudyRow run_cell(const StudyConfig& config, const Cell& cell)
{
    StudyRow row;
    row.alpha = cell.alpha;
    row.beta = cell.beta;
    row.tau = cell.tau;
    row.h = cell.h;
    try {
        const ProblemSpec spec = config.problem(cell.alpha, cell.beta);
        SolveOptions opt;
        opt.scheme = config.scheme;
        opt.ghosts = config.ghosts;
        opt.space_cells = cell.cells;
        opt.time_steps = cell.steps;
        const SolutionHistory history = solve(spec, opt);
        row.wall_seconds = history.wall_seconds;
        if (spec.has_exact()) {
            row.e_inf = max_error(history, spec.exact);
            row.near_roundoff =
                row.e_inf < 100.0 * std::numeric_limits<double>::epsilon() *
                                solution_magnitude(history);
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int steps_for(double horizon, double tau)
{
    const double n = horizon / tau;
    const int ni = static_cast<int>(std::lround(n));
    if (ni < 1 || std::fabs(n - ni) > 1e-9 * std::max(1.0, std::fabs(n)))
        throw std::invalid_argument("study: horizon is not an integer multiple of tau");
    return ni;
}

int cells_for(double length, double h)
{
    const double m = length / h;
    const int mi = static_cast<int>(std::lround(m));
    if (mi < 1 || std::fabs(m - mi) > 1e-9 * std::max(1.0, std::fabs(m)))
        throw std::invalid_argument("study: length is not an integer multiple of h");
    return mi;
}

std::vector<StudyRow> run_study(const StudyConfig& config, bool temporal)
{
    if (!config.problem) throw std::invalid_argument("study: problem factory missing");
    if (config.pairs.empty()) throw std::invalid_argument("study: no (alpha, beta) pairs");
    if (config.varied.empty()) throw std::invalid_argument("study: empty refinement list");
    for (std::size_t i = 1; i < config.varied.size(); ++i)
        if ((config.varied[i] - config.varied[i - 1]) *
                (config.varied[1] - config.varied[0]) <= 0.0 ||
            config.varied[i] == config.varied[i - 1])
            throw std::invalid_argument("study: refinement list must be strictly monotone");

    // probe the problem once for its extents
    const ProblemSpec probe = config.problem(config.pairs[0].first, config.pairs[0].second);

    std::vector<Cell> cells;
    for (const auto& [alpha, beta] : config.pairs) {
        for (double v : config.varied) {
            Cell c{};
            c.alpha = alpha;
            c.beta = beta;
            if (temporal) {
                c.tau = v;
                c.h = config.fixed;
            } else {
                c.tau = config.fixed;
                c.h = v;
            }
            c.steps = steps_for(probe.horizon, c.tau);
            c.cells = cells_for(probe.length, c.h);
            cells.push_back(c);
        }
    }

    std::vector<StudyRow> rows(cells.size());
    if (config.threads > 1) {
        std::vector<std::future<StudyRow>> futures;
        futures.reserve(cells.size());
        for (const Cell& c : cells)
            futures.push_back(std::async(std::launch::async,
                                         [&config, c] { return run_cell(config, c); }));
        for (std::size_t i = 0; i < futures.size(); ++i) rows[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < cells.size(); ++i) rows[i] = run_cell(config, cells[i]);
    }

    // orders between consecutive rows of each pair group
    const std::size_t per_group = config.varied.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i % per_group == 0) continue;
        const StudyRow& prev = rows[i - 1];
        StudyRow& cur = rows[i];
        if (prev.e_inf > 0.0 && cur.e_inf > 0.0) {
            cur.order = temporal ? temporal_order(prev.e_inf, cur.e_inf)
                                 : spatial_order(prev.e_inf, prev.h, cur.e_inf, cur.h);
        }
    }
    return rows;
}

}  // namespace

std::vector<StudyRow> run_temporal_study(const StudyConfig& config)
{
    if (!(config.fixed > 0.0))
        throw std::invalid_argument("run_temporal_study: fixed h missing");
    return run_study(config, true);
}

std::vector<StudyRow> run_spatial_study(const StudyConfig& config)
{
    if (!(config.fixed > 0.0))
        throw std::invalid_argument("run_spatial_study: fixed tau missing");
    return run_study(config, false);
}

std::string study_csv(const std::vector<StudyRow>& rows)
{
    std::ostringstream os;
    os << "alpha,beta,tau,h,e_inf,order,wall_seconds\n";
    for (const StudyRow& r : rows) {
        os << fmt("%.10g", r.alpha) << ',' << fmt("%.10g", r.beta) << ','
           << fmt("%.10g", r.tau) << ',' << fmt("%.10g", r.h) << ',';
        if (r.e_inf >= 0.0) os << fmt("%.4e", r.e_inf);
        os << ',';
        if (r.order) os << fmt("%.4f", *r.order);
        os << ',' << fmt("%.3f", r.wall_seconds) << '\n';
    }
    return os.str();
}

namespace {

ProfileData profile_common(char mode, double requested, double step, int count)
{
    ProfileData p;
    p.mode = mode;
    p.requested = requested;
    if (requested < -1e-12 || requested > step * count + 1e-12)
        throw std::invalid_argument("profile: coordinate outside the domain");
    const int idx = std::min(count, std::max(0, static_cast<int>(std::lround(requested / step))));
    p.snapped = idx * step;
    p.snap_distance = std::fabs(p.snapped - requested);
    return p;
}

}  // namespace

ProfileData emit_profile_fixed_x(const SolutionHistory& history, double x)
{
    ProfileData p = profile_common('x', x, history.h, history.cells());
    const int j = static_cast<int>(std::lround(p.snapped / history.h));
    for (int k = 0; k <= history.steps(); ++k)
        p.rows.emplace_back(k * history.tau,
                            history.levels[static_cast<std::size_t>(k)]
                                          [static_cast<std::size_t>(j)]);
    return p;
}

ProfileData emit_profile_fixed_t(const SolutionHistory& history, double t)
{
    ProfileData p = profile_common('t', t, history.tau, history.steps());
    const int k = static_cast<int>(std::lround(p.snapped / history.tau));
    for (int j = 0; j <= history.cells(); ++j)
        p.rows.emplace_back(j * history.h,
                            history.levels[static_cast<std::size_t>(k)]
                                          [static_cast<std::size_t>(j)]);
    return p;
}

std::string profile_csv(const ProfileData& profile)
{
    std::ostringstream os;
    os << (profile.mode == 'x' ? "t,value\n" : "x,value\n");
    for (const auto& [coord, value] : profile.rows)
        os << fmt("%.17g", coord) << ',' << fmt("%.17g", value) << '\n';
    return os.str();
}

std::string solution_csv(const SolutionHistory& history)
{
    std::ostringstream os;
    os << "x,t,value\n";
    for (int k = 0; k <= history.steps(); ++k)
        for (int j = 0; j <= history.cells(); ++j)
            os << fmt("%.17g", j * history.h) << ',' << fmt("%.17g", k * history.tau) << ','
               << fmt("%.17g", history.levels[static_cast<std::size_t>(k)]
                                             [static_cast<std::size_t>(j)])
               << '\n';
    return os.str();
}

}  // namespace fracsub
