#include "fracsub/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracsub/analysis.hpp"
#include "fracsub/harness.hpp"
#include "fracsub/problem.hpp"
#include "fracsub/solver.hpp"
#include "fracsub/weights.hpp"

namespace fracsub {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// accepts plain decimals and exact fractions like "1/1000"
double parse_real(const std::string& text)
{
    const auto slash = text.find('/');
    auto number = [&](const std::string& part) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number '" + part + "'");
        }
        while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used])))
            ++used;
        if (used != part.size())
            throw std::invalid_argument("bad number '" + part + "'");
        return v;
    };
    if (slash == std::string::npos) return number(text);
    return number(text.substr(0, slash)) / number(text.substr(slash + 1));
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_real(item));
    if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
    return out;
}

std::pair<double, double> parse_pair(const std::string& text)
{
    const std::vector<double> v = parse_list(text);
    if (v.size() != 2)
        throw std::invalid_argument("expected alpha,beta pair, got '" + text + "'");
    return {v[0], v[1]};
}

SchemeKind parse_scheme(const std::string& text)
{
    if (text == "compact6") return SchemeKind::Compact6;
    if (text == "compact8") return SchemeKind::Compact8;
    throw std::invalid_argument("scheme must be compact6 or compact8, got '" + text + "'");
}

std::string scheme_name(SchemeKind k)
{
    return k == SchemeKind::Compact6 ? "compact6" : "compact8";
}

GhostPolicy parse_ghosts(const std::string& text)
{
    if (text == "extrapolate") return GhostPolicy::Extrapolate;
    if (text == "exact") return GhostPolicy::ExactSolution;
    throw std::invalid_argument("ghosts must be extrapolate or exact, got '" + text + "'");
}

std::string ghosts_name(GhostPolicy p)
{
    return p == GhostPolicy::Extrapolate ? "extrapolate" : "exact";
}

int env_threads()
{
    const char* v = std::getenv("FRACSUB_THREADS");
    if (!v) return 0;
    const int n = std::atoi(v);
    return n > 0 ? n : 0;
}

std::string timestamp_dir()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof buf, "fracsub-out-%Y%m%d-%H%M%S", std::localtime(&t));
    return buf;
}

struct Output {
    fs::path dir;
    bool force = false;

    void write(const std::string& name, const std::string& contents) const
    {
        fs::create_directories(dir);
        const fs::path target = dir / name;
        if (fs::exists(target) && !force)
            throw std::runtime_error("refusing to overwrite " + target.string() +
                                     " (use --force)");
        std::ofstream out(target, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + target.string());
        out << contents;
        if (!out) throw std::runtime_error("short write to " + target.string());
    }
};

// tau/N and h/M are mutually derivable; either may be given, both must agree
int resolve_count(std::optional<double> step, std::optional<int> count,
                  double extent, const char* what)
{
    if (!step && !count)
        throw std::invalid_argument(std::string("missing --") + what);
    int n;
    if (count) {
        n = *count;
        if (step) {
            const double expect = extent / *step;
            if (std::fabs(expect - n) > 1e-9 * std::max(1.0, expect))
                throw std::invalid_argument(std::string("inconsistent --") + what +
                                            " and step size");
        }
    } else {
        const double expect = extent / *step;
        n = static_cast<int>(std::lround(expect));
        if (n < 1 || std::fabs(expect - n) > 1e-9 * std::max(1.0, expect))
            throw std::invalid_argument(
                std::string("step does not divide the extent for --") + what);
    }
    if (n < 1) throw std::invalid_argument(std::string("bad --") + what);
    return n;
}

json report_json(const StabilityReport& r)
{
    return json{{"scheme", scheme_name(r.scheme)},
                {"alpha", r.alpha},
                {"beta", r.beta},
                {"diff_a", r.diff_a},
                {"diff_b", r.diff_b},
                {"tau", r.tau},
                {"h", r.h},
                {"condition_value", r.condition_value},
                {"bound", r.bound},
                {"satisfied", r.satisfied},
                {"unconditional", r.unconditional},
                {"worst_ratio", r.worst_ratio},
                {"p_nonnegative", r.p_nonnegative},
                {"min_eigenvalue", r.min_eigenvalue},
                {"eigen_cells", r.eigen_cells}};
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

struct CommonFlags {
    std::string problem = "paper-example";
    std::string scheme = "compact6";
    std::string ghosts = "extrapolate";
    std::optional<double> alpha, beta;
    std::string tau_text, h_text;
    std::optional<int> cells, steps;

    std::optional<double> tau() const
    {
        return tau_text.empty() ? std::nullopt : std::optional<double>(parse_real(tau_text));
    }
    std::optional<double> h() const
    {
        return h_text.empty() ? std::nullopt : std::optional<double>(parse_real(h_text));
    }
};

// original argv sans --out/--force, for the metadata echo
std::vector<std::string> replayable(const std::vector<std::string>& args)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--out") {
            ++i;
            continue;
        }
        if (args[i] == "--force") continue;
        out.push_back(args[i]);
    }
    return out;
}

int dispatch(const std::vector<std::string>& args);

int run_config(const fs::path& file, const std::vector<std::string>& extra)
{
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open config " + file.string());
    json j;
    in >> j;
    if (!j.contains("command") || !j["command"].is_array())
        throw std::invalid_argument("config " + file.string() + " lacks a command array");
    std::vector<std::string> args;
    for (const auto& a : j["command"]) args.push_back(a.get<std::string>());
    args.insert(args.end(), extra.begin(), extra.end());
    return dispatch(args);
}

int cmd_solve(const std::vector<std::string>& args, const CommonFlags& flags,
              const Output& out, const std::optional<double>& profile_x,
              const std::optional<double>& profile_t)
{
    const ProblemSpec spec = load_problem(flags.problem, flags.alpha, flags.beta);
    SolveOptions opt;
    opt.scheme = parse_scheme(flags.scheme);
    opt.ghosts = parse_ghosts(flags.ghosts);
    opt.space_cells = resolve_count(flags.h(), flags.cells, spec.length, "M");
    opt.time_steps = resolve_count(flags.tau(), flags.steps, spec.horizon, "N");

    const SolutionHistory history = solve(spec, opt);

    json meta{{"command", replayable(args)},
              {"subcommand", "solve"},
              {"problem", flags.problem},
              {"scheme", scheme_name(opt.scheme)},
              {"ghosts", ghosts_name(opt.ghosts)},
              {"alpha", spec.alpha},
              {"beta", spec.beta},
              {"tau", history.tau},
              {"h", history.h},
              {"cells", opt.space_cells},
              {"steps", opt.time_steps},
              {"wall_seconds", history.wall_seconds},
              {"artifacts", json::array({"solution.csv"})}};

    out.write("solution.csv", solution_csv(history));
    if (spec.has_exact()) meta["e_inf"] = max_error(history, spec.exact);
    if (profile_x) {
        const ProfileData p = emit_profile_fixed_x(history, *profile_x);
        out.write("profile.csv", profile_csv(p));
        meta["profile"] = {{"mode", "fixed-x"}, {"requested", p.requested},
                           {"snapped", p.snapped}, {"snap_distance", p.snap_distance}};
        meta["artifacts"].push_back("profile.csv");
    } else if (profile_t) {
        const ProfileData p = emit_profile_fixed_t(history, *profile_t);
        out.write("profile.csv", profile_csv(p));
        meta["profile"] = {{"mode", "fixed-t"}, {"requested", p.requested},
                           {"snapped", p.snapped}, {"snap_distance", p.snap_distance}};
        meta["artifacts"].push_back("profile.csv");
    }
    out.write("run.json", dump(meta));

    std::cout << "wrote " << (out.dir / "solution.csv").string();
    if (meta.contains("e_inf"))
        std::cout << "  e_inf=" << meta["e_inf"].get<double>();
    std::cout << "  wall=" << history.wall_seconds << "s\n";
    return 0;
}

int cmd_study(const std::vector<std::string>& args, const CommonFlags& flags,
              const Output& out, const std::vector<std::string>& pair_texts,
              const std::string& varied_text, bool temporal)
{
    StudyConfig config;
    config.scheme = parse_scheme(flags.scheme);
    config.ghosts = parse_ghosts(flags.ghosts);
    config.threads = env_threads();
    for (const std::string& p : pair_texts) config.pairs.push_back(parse_pair(p));
    if (config.pairs.empty()) {
        const ProblemSpec probe = load_problem(flags.problem, flags.alpha, flags.beta);
        config.pairs.emplace_back(probe.alpha, probe.beta);
    }
    config.varied = parse_list(varied_text);
    const std::string problem = flags.problem;
    config.problem = [problem](double alpha, double beta) {
        return load_problem(problem, alpha, beta);
    };

    std::vector<StudyRow> rows;
    if (temporal) {
        if (!flags.h() && !flags.cells)
            throw std::invalid_argument("converge-time needs --h or --M");
        const ProblemSpec probe = config.problem(config.pairs[0].first, config.pairs[0].second);
        const int cells = resolve_count(flags.h(), flags.cells, probe.length, "M");
        config.fixed = probe.length / cells;
        rows = run_temporal_study(config);
    } else {
        if (!flags.tau() && !flags.steps)
            throw std::invalid_argument("converge-space needs --tau or --N");
        const ProblemSpec probe = config.problem(config.pairs[0].first, config.pairs[0].second);
        const int steps = resolve_count(flags.tau(), flags.steps, probe.horizon, "N");
        config.fixed = probe.horizon / steps;
        rows = run_spatial_study(config);
    }

    json jrows = json::array();
    bool failures = false;
    for (const StudyRow& r : rows) {
        json jr{{"alpha", r.alpha}, {"beta", r.beta}, {"tau", r.tau}, {"h", r.h},
                {"near_roundoff", r.near_roundoff}};
        if (r.e_inf >= 0.0) jr["e_inf"] = r.e_inf;
        if (r.order) jr["order"] = *r.order;
        if (!r.error.empty()) {
            jr["error"] = r.error;
            failures = true;
        }
        jrows.push_back(jr);
    }
    json meta{{"command", replayable(args)},
              {"subcommand", temporal ? "converge-time" : "converge-space"},
              {"problem", flags.problem},
              {"scheme", scheme_name(config.scheme)},
              {"ghosts", ghosts_name(config.ghosts)},
              {"fixed", config.fixed},
              {"varied", config.varied},
              {"rows", jrows},
              {"environment", {{"threads", config.threads}, {"compiler", __VERSION__}}},
              {"artifacts", json::array({"study.csv"})}};

    out.write("study.csv", study_csv(rows));
    out.write("study.json", dump(meta));
    std::cout << "wrote " << (out.dir / "study.csv").string() << "\n";
    return failures ? 1 : 0;
}

int cmd_stability(const std::vector<std::string>& args, const CommonFlags& flags,
                  const Output& out, double diff_a, double diff_b,
                  int eigen_cells, int sigma_samples)
{
    if (!flags.alpha || !flags.beta)
        throw std::invalid_argument("stability-check needs --alpha and --beta");
    if (!flags.tau() || !flags.h())
        throw std::invalid_argument("stability-check needs --tau and --h");
    const StabilityReport r =
        analyze_stability(parse_scheme(flags.scheme), *flags.alpha, *flags.beta,
                          diff_a, diff_b, *flags.tau(), *flags.h(),
                          eigen_cells, sigma_samples);
    json meta = report_json(r);
    meta["command"] = replayable(args);
    meta["subcommand"] = "stability-check";
    const std::string text = dump(meta);
    out.write("stability.json", text);
    std::cout << text;
    return 0;
}

int cmd_sweep(const std::vector<std::string>& args, const CommonFlags& flags,
              const Output& out, double diff_a, double diff_b, int sigma_samples)
{
    if (!flags.alpha || !flags.beta || !flags.tau() || !flags.h())
        throw std::invalid_argument("symbol-sweep needs --alpha, --beta, --tau and --h");
    const SchemeKind scheme = parse_scheme(flags.scheme);
    const CombinedWeights w = combined_weights(*flags.alpha, *flags.beta, diff_a, diff_b,
                                               *flags.tau(), *flags.h(), 1);
    std::ostringstream csv;
    csv << "sigma,Q,P,ratio\n";
    char buf[160];
    for (double s : sigma_grid(sigma_samples)) {
        const SymbolPair sp = amplification_symbols(scheme, w.values[0], w.values[1], s);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s, sp.Q, sp.P,
                      std::fabs(sp.P / sp.Q));
        csv << buf;
    }
    out.write("sweep.csv", csv.str());
    out.write("run.json", dump(json{{"command", replayable(args)},
                                    {"subcommand", "symbol-sweep"},
                                    {"scheme", scheme_name(scheme)},
                                    {"alpha", *flags.alpha},
                                    {"beta", *flags.beta},
                                    {"diff_a", diff_a},
                                    {"diff_b", diff_b},
                                    {"tau", *flags.tau()},
                                    {"h", *flags.h()},
                                    {"sigma_samples", sigma_samples},
                                    {"artifacts", json::array({"sweep.csv"})}}));
    std::cout << "wrote " << (out.dir / "sweep.csv").string() << "\n";
    return 0;
}

int cmd_weights(const std::vector<std::string>& args, const Output& out,
                const std::string& order_text, int n)
{
    const double order = parse_real(order_text);
    const WeightTable t = WeightTable::build(order, static_cast<std::size_t>(n));
    std::ostringstream csv;
    csv << "ell,raw,shifted\n";
    char buf[128];
    for (std::size_t l = 0; l < t.raw.size(); ++l) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", l, t.raw[l], t.shifted[l]);
        csv << buf;
    }
    out.write("weights.csv", csv.str());
    out.write("run.json", dump(json{{"command", replayable(args)},
                                    {"subcommand", "weights-dump"},
                                    {"order", order},
                                    {"n", n},
                                    {"artifacts", json::array({"weights.csv"})}}));
    std::cout << "wrote " << (out.dir / "weights.csv").string() << "\n";
    return 0;
}

int dispatch(const std::vector<std::string>& args)
{
    CLI::App app{"compact finite difference solver for the two-term "
                 "time-fractional subdiffusion equation"};
    app.set_help_flag("--help", "print help and exit");
    app.fallthrough();  // --out/--force may follow the subcommand flags
    app.require_subcommand(0, 1);

    std::string out_dir;
    bool force = false;
    app.add_option("--out", out_dir, "output directory (default: timestamped)");
    app.add_flag("--force", force, "overwrite existing artifacts");
    std::string config_file;
    app.add_option("--config", config_file, "re-run a recorded metadata JSON");

    CommonFlags flags;
    std::optional<double> profile_x, profile_t;
    std::vector<std::string> pair_texts;
    std::string taus_text, hs_text;
    double diff_a = 1.0, diff_b = 1.0;
    int eigen_cells = 100, sigma_samples = 1001;
    std::string order_text = "0.5";
    int weights_n = 10;

    auto add_common = [&](CLI::App* cmd, bool with_problem) {
        cmd->set_help_flag("--help", "print help and exit");
        if (with_problem)
            cmd->add_option("--problem", flags.problem,
                            "problem name (paper-example) or JSON file");
        cmd->add_option("--scheme", flags.scheme, "compact6 | compact8");
        cmd->add_option("--alpha", flags.alpha, "fractional exponent alpha");
        cmd->add_option("--beta", flags.beta, "fractional exponent beta");
        cmd->add_option("--tau", flags.tau_text, "time step (decimal or fraction)");
        cmd->add_option("--h", flags.h_text, "grid spacing (decimal or fraction)");
        cmd->add_option("--M", flags.cells, "number of grid cells");
        cmd->add_option("--N", flags.steps, "number of time steps");
        cmd->add_option("--ghosts", flags.ghosts, "extrapolate | exact");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "run one solve");
    add_common(solve_cmd, true);
    solve_cmd->add_option("--profile-x", profile_x, "also emit a fixed-x profile");
    solve_cmd->add_option("--profile-t", profile_t, "also emit a fixed-t profile");

    CLI::App* ct = app.add_subcommand("converge-time", "temporal refinement study");
    add_common(ct, true);
    ct->add_option("--taus", taus_text, "comma list of tau values");
    ct->add_option("--pair", pair_texts, "alpha,beta pair (repeatable)");

    CLI::App* cs = app.add_subcommand("converge-space", "spatial refinement study");
    add_common(cs, true);
    cs->add_option("--hs", hs_text, "comma list of h values");
    cs->add_option("--pair", pair_texts, "alpha,beta pair (repeatable)");

    CLI::App* st = app.add_subcommand("stability-check", "stability condition report");
    add_common(st, false);
    st->add_option("--a", diff_a, "diffusion coefficient A");
    st->add_option("--b", diff_b, "diffusion coefficient B");
    st->add_option("--eigen-cells", eigen_cells, "grid cells for the eigenvalue column");
    st->add_option("--sigma-samples", sigma_samples, "sweep resolution");

    CLI::App* sw = app.add_subcommand("symbol-sweep", "amplification symbol sweep CSV");
    add_common(sw, false);
    sw->add_option("--a", diff_a, "diffusion coefficient A");
    sw->add_option("--b", diff_b, "diffusion coefficient B");
    sw->add_option("--sigma-samples", sigma_samples, "sweep resolution");

    CLI::App* wd = app.add_subcommand("weights-dump", "weight table CSV");
    wd->add_option("--order", order_text, "fractional order (decimal or fraction)");
    wd->add_option("--n", weights_n, "largest index");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return 0;
        }
        throw std::invalid_argument(e.what());
    }

    if (!config_file.empty()) {
        if (app.get_subcommands().size() > 0)
            throw std::invalid_argument("--config replaces the subcommand; give one or the other");
        std::vector<std::string> extra;
        if (!out_dir.empty()) {
            extra.push_back("--out");
            extra.push_back(out_dir);
        }
        if (force) extra.push_back("--force");
        return run_config(config_file, extra);
    }

    Output out{out_dir.empty() ? fs::path(timestamp_dir()) : fs::path(out_dir), force};

    if (solve_cmd->parsed()) return cmd_solve(args, flags, out, profile_x, profile_t);
    if (ct->parsed()) {
        if (taus_text.empty()) throw std::invalid_argument("converge-time needs --taus");
        return cmd_study(args, flags, out, pair_texts, taus_text, true);
    }
    if (cs->parsed()) {
        if (hs_text.empty()) throw std::invalid_argument("converge-space needs --hs");
        return cmd_study(args, flags, out, pair_texts, hs_text, false);
    }
    if (st->parsed())
        return cmd_stability(args, flags, out, diff_a, diff_b, eigen_cells, sigma_samples);
    if (sw->parsed()) return cmd_sweep(args, flags, out, diff_a, diff_b, sigma_samples);
    if (wd->parsed()) return cmd_weights(args, out, order_text, weights_n);

    throw std::invalid_argument("no subcommand given (try --help)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args)
{
    try {
        return dispatch(args);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}

}  // namespace fracsub
