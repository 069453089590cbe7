#include "fracsub/problem.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fracsub/expr.hpp"

namespace fracsub {

std::vector<std::string> validate(const ProblemSpec& spec)
{
    std::vector<std::string> bad;
    auto inside01 = [](double v) { return v > 0.0 && v < 1.0; };
    if (!inside01(spec.alpha)) bad.push_back("alpha must lie strictly inside (0, 1)");
    if (!inside01(spec.beta)) bad.push_back("beta must lie strictly inside (0, 1)");
    if (!(spec.diff_a > 0.0)) bad.push_back("diff_a must be positive");
    if (!(spec.diff_b > 0.0)) bad.push_back("diff_b must be positive");
    if (!(spec.length > 0.0)) bad.push_back("length must be positive");
    if (!(spec.horizon > 0.0)) bad.push_back("horizon must be positive");
    if (!spec.source) bad.push_back("source function missing");
    if (!spec.initial) bad.push_back("initial function missing");
    if (!spec.boundary_left) bad.push_back("boundary_left function missing");
    if (!spec.boundary_right) bad.push_back("boundary_right function missing");
    if (spec.initial && spec.boundary_left &&
        std::fabs(spec.initial(0.0) - spec.boundary_left(0.0)) > 1e-12)
        bad.push_back("corner mismatch: initial(0) != boundary_left(0)");
    if (spec.initial && spec.boundary_right &&
        std::fabs(spec.initial(spec.length) - spec.boundary_right(0.0)) > 1e-12)
        bad.push_back("corner mismatch: initial(L) != boundary_right(0)");
    return bad;
}

ProblemSpec validated(ProblemSpec spec)
{
    const std::vector<std::string> bad = validate(spec);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "invalid problem";
        if (!spec.name.empty()) os << " '" << spec.name << "'";
        for (const std::string& b : bad) os << "; " << b;
        throw std::invalid_argument(os.str());
    }
    return spec;
}

double example_exact(double x, double t, double alpha, double beta)
{
    const double w = std::pow(x * (1.0 - x), 12.0);
    return std::pow(t, alpha + beta + 2.0) * w * std::sin(M_PI * x);
}

double example_source(double x, double t, double alpha, double beta)
{
    const double p = alpha + beta + 2.0;
    const double s = std::sin(M_PI * x);
    const double c = std::cos(M_PI * x);
    const double x10 = std::pow(x * (1.0 - x), 10.0);

    const double drive = p * std::pow(t, p - 1.0) * x * x * (1.0 - x) * (1.0 - x) * x10 * s;

    // -(d^2/dx^2)[x^12 (1-x)^12 sin(pi x)] stripped of its x^10 (1-x)^10 factor
    const double bracket =
        s * (M_PI * M_PI * x * x * (1.0 - x) * (1.0 - x) - 552.0 * x * x + 552.0 * x - 132.0) -
        24.0 * M_PI * x * c * (2.0 * x * x - 3.0 * x + 1.0);

    const double gr = std::tgamma(alpha + beta + 3.0);
    const double tfac = gr / std::tgamma(2.0 * alpha + beta + 2.0) *
                            std::pow(t, 2.0 * alpha + beta + 1.0) +
                        gr / std::tgamma(2.0 * beta + alpha + 2.0) *
                            std::pow(t, 2.0 * beta + alpha + 1.0);

    return drive + x10 * bracket * tfac;
}

ProblemSpec example_problem(double alpha, double beta)
{
    ProblemSpec spec;
    spec.name = "paper-example";
    spec.alpha = alpha;
    spec.beta = beta;
    spec.diff_a = 1.0;
    spec.diff_b = 1.0;
    spec.length = 1.0;
    spec.horizon = 1.0;
    spec.source = [alpha, beta](double x, double t) { return example_source(x, t, alpha, beta); };
    spec.initial = [](double) { return 0.0; };
    spec.boundary_left = [](double) { return 0.0; };
    spec.boundary_right = [](double) { return 0.0; };
    spec.exact = [alpha, beta](double x, double t) { return example_exact(x, t, alpha, beta); };
    return spec;
}

ProblemSpec load_problem_json(const std::string& path,
                              std::optional<double> alpha,
                              std::optional<double> beta)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open problem file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("bad JSON in '" + path + "': " + e.what());
    }

    ProblemSpec spec;
    spec.name = j.value("name", path);
    spec.alpha = alpha.value_or(j.value("alpha", 0.5));
    spec.beta = beta.value_or(j.value("beta", 0.5));
    spec.diff_a = j.value("diff_a", 1.0);
    spec.diff_b = j.value("diff_b", 1.0);
    spec.length = j.value("length", 1.0);
    spec.horizon = j.value("horizon", 1.0);

    auto xt = [&](const char* key) -> SpaceTimeFn {
        if (!j.contains(key)) return {};
        Expr e = Expr::parse(j.at(key).get<std::string>());
        return [e](double x, double t) { return e(x, t); };
    };
    auto require = [&](const char* key) {
        if (!j.contains(key))
            throw std::invalid_argument("problem file '" + path + "' lacks \"" +
                                        key + "\"");
    };
    require("source");
    require("initial");
    spec.source = xt("source");
    {
        Expr e = Expr::parse(j.at("initial").get<std::string>());
        spec.initial = [e](double x) { return e(x, 0.0); };
    }
    auto time_fn = [&](const char* key) -> TimeFn {
        if (!j.contains(key)) return [](double) { return 0.0; };
        Expr e = Expr::parse(j.at(key).get<std::string>());
        return [e](double t) { return e(0.0, t); };
    };
    spec.boundary_left = time_fn("boundary_left");
    spec.boundary_right = time_fn("boundary_right");
    spec.exact = xt("exact");
    return validated(spec);
}

ProblemSpec load_problem(const std::string& name_or_path,
                         std::optional<double> alpha,
                         std::optional<double> beta)
{
    if (name_or_path == "paper-example")
        return example_problem(alpha.value_or(0.25), beta.value_or(0.15));
    return load_problem_json(name_or_path, alpha, beta);
}

}  // namespace fracsub
