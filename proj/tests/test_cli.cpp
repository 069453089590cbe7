#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fracsub/cli.hpp"

using fracsub::run_cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() /
               ("fracsub-test-" + std::to_string(std::rand()) +
                std::to_string(reinterpret_cast<std::uintptr_t>(this) & 0xffff));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string sub(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json slurp_json(const fs::path& p)
{
    return json::parse(slurp(p));
}

std::size_t count_lines(const std::string& s)
{
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("weights-dump emits the requested table")
{
    TempDir tmp;
    REQUIRE(run_cli({"weights-dump", "--order", "0.5", "--n", "10", "--out",
                     tmp.sub("w")}) == 0);
    const std::string csv = slurp(tmp.path / "w" / "weights.csv");
    CHECK(count_lines(csv) == 12);  // header + 11 rows
    CHECK(csv.substr(0, 16) == "ell,raw,shifted\n");
    CHECK(csv.find("0,1,0.75") != std::string::npos);
}

TEST_CASE("stability-check reports the condition against the bound")
{
    TempDir tmp;
    REQUIRE(run_cli({"stability-check", "--scheme", "compact6", "--alpha", "0.9",
                     "--beta", "0.9", "--a", "1", "--b", "1", "--tau", "0.01", "--h",
                     "0.1", "--out", tmp.sub("s")}) == 0);
    const json r = slurp_json(tmp.path / "s" / "stability.json");
    CHECK(r["bound"].get<double>() == doctest::Approx(37.0 / 120.0));
    CHECK(r["condition_value"].get<double>() > r["bound"].get<double>());
    CHECK_FALSE(r["satisfied"].get<bool>());
    CHECK_FALSE(r["unconditional"].get<bool>());
    CHECK(r["worst_ratio"].get<double>() <= 1.0 + 1e-12);
    CHECK(r["min_eigenvalue"].get<double>() > 0.0);
}

TEST_CASE("symbol-sweep emits the sigma grid")
{
    TempDir tmp;
    REQUIRE(run_cli({"symbol-sweep", "--scheme", "compact8", "--alpha", "0.3", "--beta",
                     "0.2", "--tau", "1/100", "--h", "1/10", "--sigma-samples", "11",
                     "--out", tmp.sub("sw")}) == 0);
    const std::string csv = slurp(tmp.path / "sw" / "sweep.csv");
    CHECK(count_lines(csv) == 12);
    CHECK(csv.substr(0, 16) == "sigma,Q,P,ratio\n");
    CHECK(csv.find("\n0,1,1,1\n") != std::string::npos);  // sigma = 0 row
}

TEST_CASE("solve writes artifacts and reports the error")
{
    TempDir tmp;
    REQUIRE(run_cli({"solve", "--problem", "paper-example", "--scheme", "compact6",
                     "--alpha", "0.25", "--beta", "0.15", "--tau", "1/4", "--h", "1/100",
                     "--out", tmp.sub("r")}) == 0);
    const json meta = slurp_json(tmp.path / "r" / "run.json");
    CHECK(meta["subcommand"] == "solve");
    CHECK(meta["steps"] == 4);
    CHECK(meta["cells"] == 100);
    CHECK(meta["e_inf"].get<double>() > 0.0);
    CHECK(fs::exists(tmp.path / "r" / "solution.csv"));

    SUBCASE("refuses to overwrite without --force")
    {
        CHECK(run_cli({"solve", "--problem", "paper-example", "--tau", "1/4", "--h",
                       "1/100", "--out", tmp.sub("r")}) == 1);
        CHECK(run_cli({"solve", "--problem", "paper-example", "--tau", "1/4", "--h",
                       "1/100", "--out", tmp.sub("r"), "--force"}) == 0);
    }
}

TEST_CASE("fractions and decimals are interchangeable")
{
    TempDir tmp;
    REQUIRE(run_cli({"solve", "--tau", "1/4", "--h", "0.05", "--out", tmp.sub("a")}) == 0);
    REQUIRE(run_cli({"solve", "--tau", "0.25", "--M", "20", "--out", tmp.sub("b")}) == 0);
    CHECK(slurp(tmp.path / "a" / "solution.csv") == slurp(tmp.path / "b" / "solution.csv"));
}

TEST_CASE("solve with a profile emits the profile artifact")
{
    TempDir tmp;
    REQUIRE(run_cli({"solve", "--tau", "1/25", "--h", "1/50", "--alpha", "0.3", "--beta",
                     "0.7", "--profile-x", "0.5", "--out", tmp.sub("p")}) == 0);
    const std::string csv = slurp(tmp.path / "p" / "profile.csv");
    CHECK(csv.substr(0, 8) == "t,value\n");
    CHECK(count_lines(csv) == 27);
    const json meta = slurp_json(tmp.path / "p" / "run.json");
    CHECK(meta["profile"]["mode"] == "fixed-x");
}

TEST_CASE("converge-time produces the study artifacts")
{
    TempDir tmp;
    REQUIRE(run_cli({"converge-time", "--scheme", "compact6", "--h", "1/16", "--taus",
                     "1/4,1/8", "--pair", "0.25,0.15", "--out", tmp.sub("ct")}) == 0);
    const std::string csv = slurp(tmp.path / "ct" / "study.csv");
    CHECK(count_lines(csv) == 3);
    CHECK(csv.substr(0, 42) == "alpha,beta,tau,h,e_inf,order,wall_seconds\n");
    const json meta = slurp_json(tmp.path / "ct" / "study.json");
    CHECK(meta["rows"].size() == 2);
    CHECK(meta["rows"][1].contains("order"));
}

TEST_CASE("errors produce nonzero exits")
{
    TempDir tmp;
    CHECK(run_cli({"solve", "--no-such-flag"}) == 1);
    CHECK(run_cli({"frobnicate"}) == 1);
    CHECK(run_cli({}) == 1);
    CHECK(run_cli({"solve", "--problem", "missing.json", "--tau", "1/4", "--h", "1/16",
                   "--out", tmp.sub("x")}) == 1);
    // inconsistent tau against N
    CHECK(run_cli({"solve", "--tau", "1/4", "--N", "5", "--h", "1/16", "--out",
                   tmp.sub("y")}) == 1);
    // tau does not divide the horizon
    CHECK(run_cli({"solve", "--tau", "0.3", "--h", "1/16", "--out", tmp.sub("z")}) == 1);
    // scheme name typo
    CHECK(run_cli({"solve", "--scheme", "compact7", "--tau", "1/4", "--h", "1/16",
                   "--out", tmp.sub("w")}) == 1);
    // --config cannot be combined with an explicit subcommand
    CHECK(run_cli({"solve", "--config", "whatever.json"}) == 1);
}

TEST_CASE("metadata round trip reproduces the run byte-identically")
{
    TempDir tmp;
    REQUIRE(run_cli({"solve", "--problem", "paper-example", "--scheme", "compact8",
                     "--alpha", "0.2", "--beta", "0.1", "--tau", "1/8", "--h", "1/20",
                     "--ghosts", "exact", "--out", tmp.sub("first")}) == 0);
    REQUIRE(run_cli({"--config", (tmp.path / "first" / "run.json").string(), "--out",
                     tmp.sub("second")}) == 0);
    CHECK(slurp(tmp.path / "first" / "solution.csv") ==
          slurp(tmp.path / "second" / "solution.csv"));

    REQUIRE(run_cli({"converge-time", "--h", "1/16", "--taus", "1/2,1/4", "--pair",
                     "0.3,0.4", "--out", tmp.sub("s1")}) == 0);
    REQUIRE(run_cli({"--config", (tmp.path / "s1" / "study.json").string(), "--out",
                     tmp.sub("s2")}) == 0);
    // identical apart from the informational wall-clock column
    auto strip_wall = [](std::string text) {
        std::istringstream in(text);
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line)) out << line.substr(0, line.rfind(',')) << '\n';
        return out.str();
    };
    CHECK(strip_wall(slurp(tmp.path / "s1" / "study.csv")) ==
          strip_wall(slurp(tmp.path / "s2" / "study.csv")));
}

TEST_CASE("the thread-count environment variable reaches the study harness")
{
    TempDir tmp;
    ::setenv("FRACSUB_THREADS", "2", 1);
    REQUIRE(run_cli({"converge-time", "--h", "1/16", "--taus", "1/2,1/4", "--pair",
                     "0.3,0.4", "--out", tmp.sub("mt")}) == 0);
    ::unsetenv("FRACSUB_THREADS");
    const json meta = slurp_json(tmp.path / "mt" / "study.json");
    CHECK(meta["environment"]["threads"] == 2);
}

TEST_CASE("the installed binary behaves like the library entry point")
{
    const char* bin = std::getenv("FRACSUB_BIN");
    REQUIRE(bin != nullptr);
    TempDir tmp;
    const std::string cmd = std::string(bin) +
                            " weights-dump --order 1/4 --n 3 --out " + tmp.sub("bw") +
                            " > " + tmp.sub("stdout.txt") + " 2>" + tmp.sub("stderr.txt");
    REQUIRE(std::system(cmd.c_str()) == 0);
    const std::string csv = slurp(tmp.path / "bw" / "weights.csv");
    CHECK(csv.find("1,-0.25,") != std::string::npos);

    const std::string bad = std::string(bin) + " solve --tau nonsense >/dev/null 2>" +
                            tmp.sub("err.json");
    CHECK(std::system(bad.c_str()) != 0);
    const std::string err = slurp(tmp.path / "err.json");
    CHECK(err.find("\"error\"") != std::string::npos);
}
