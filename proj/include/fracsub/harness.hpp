#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracsub/analysis.hpp"
#include "fracsub/solver.hpp"

namespace fracsub {

// One refinement study: solve each (alpha, beta) pair over the varied list of
// tau values (temporal, at fixed h) or h values (spatial, at fixed tau) and
// compute empirical orders between consecutive rows of a group.
struct StudyConfig {
    SchemeKind scheme = SchemeKind::Compact6;
    GhostPolicy ghosts = GhostPolicy::Extrapolate;
    std::vector<std::pair<double, double>> pairs;        // (alpha, beta)
    double fixed = 0.0;                                  // h (temporal) or tau (spatial)
    std::vector<double> varied;                          // tau values or h values
    std::function<ProblemSpec(double, double)> problem;  // pair -> problem
    int threads = 0;                                     // 0/1 = serial
};

struct StudyRow {
    double alpha = 0, beta = 0, tau = 0, h = 0;
    double e_inf = -1.0;          // negative when the solve failed
    std::optional<double> order;  // empty for the first row of a group
    double wall_seconds = 0;
    bool near_roundoff = false;   // e_inf below 100x unit roundoff of max|U|
    std::string error;            // failure text; row is kept, study continues
};

std::vector<StudyRow> run_temporal_study(const StudyConfig& config);
std::vector<StudyRow> run_spatial_study(const StudyConfig& config);

// columns exactly: alpha,beta,tau,h,e_inf,order,wall_seconds
// (errors %.4e, orders %.4f, wall seconds %.3f)
std::string study_csv(const std::vector<StudyRow>& rows);

// Solution profile along one grid line; the requested coordinate snaps to the
// nearest node and the snap distance is recorded.
struct ProfileData {
    char mode = 'x';                                 // 'x': fixed x, 't': fixed t
    double requested = 0, snapped = 0, snap_distance = 0;
    std::vector<std::pair<double, double>> rows;     // (t, value) or (x, value)
};

ProfileData emit_profile_fixed_x(const SolutionHistory& history, double x);
ProfileData emit_profile_fixed_t(const SolutionHistory& history, double t);

std::string profile_csv(const ProfileData& profile);

// long-format solution dump, header x,t,value
std::string solution_csv(const SolutionHistory& history);

}  // namespace fracsub
