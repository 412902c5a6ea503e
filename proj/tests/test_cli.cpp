#include <doctest.h>

#include "szego/suites.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace szego;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch()
{
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("szego_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write(const std::string& name, const std::string& text)
{
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p;
}

Run cli(const std::string& args)
{
    const fs::path o = scratch() / "stdout.txt", e = scratch() / "stderr.txt";
    const std::string cmd = std::string("\"") + SZEGO_CLI_PATH + "\" " + args + " > \"" + o.string() + "\" 2> \"" +
                            e.string() + "\"";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(o);
    r.err = slurp(e);
    return r;
}

// report without timing fields
json untimed(const std::string& text)
{
    json j = json::parse(text);
    j.erase("seconds");
    for (auto& c : j["cases"]) c.erase("seconds");
    return j;
}

}  // namespace

TEST_CASE("unknown suite is a config error and nothing is written")
{
    const fs::path out = scratch() / "never.json";
    auto r = cli("--suite nope --out \"" + out.string() + "\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown suite 'nope'") != std::string::npos);
    CHECK_FALSE(fs::exists(out));
    CHECK(cli("--suite").code == 2);
    CHECK(cli("--suite riesz --precision-bits abc").code == 2);
    CHECK(cli("--suite riesz --format xml").code == 2);
    CHECK(cli("--suite riesz --tol nonsense=1").code == 2);
    CHECK(cli("").code == 2);
}

TEST_CASE("listing suites and case ids")
{
    auto r = cli("--list");
    CHECK(r.code == 0);
    for (const auto& s : suite_names()) CHECK(r.out.find(s + "\n") != std::string::npos);
    auto ids = cli("--suite riesz --list --filter sandwich-a1.0");
    CHECK(ids.code == 0);
    CHECK(ids.out == "sandwich-a1.0-n0\nsandwich-a1.0-n1\nsandwich-a1.0-n2\nsandwich-a1.0-n3\nsandwich-a1.0-n4\n");
}

TEST_CASE("passing suite exits 0 and records the seed")
{
    auto r = cli("--suite invariance --seed 77");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["suite"] == "invariance");
    CHECK(j["seed"] == 77);
    CHECK(j["precision_bits"] == 256);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["cases"] == j["cases"].size());
    CHECK(j["cases"].size() == 9);
    for (const auto& c : j["cases"]) {
        CHECK(c["pass"] == true);
        for (const auto& v : c["values"]) CHECK(v.contains("tolerance"));
    }
    CHECK(j["tolerances"]["invariance"] == 1e-30);
}

TEST_CASE("a failing case gives exit code 1")
{
    // the tight certified bound does not hold on these instances
    auto r = cli("--suite superexp --filter metric-B-n08-p2");
    CHECK(r.code == 1);
    auto j = json::parse(r.out);
    REQUIRE(j["cases"].size() == 1);
    CHECK(j["cases"][0]["pass"] == false);
    CHECK(j["summary"]["failed"] == 1);
}

TEST_CASE("reports are deterministic given the seed")
{
    const std::string args = "--suite discrete-bounds --filter oracle-0";
    auto a = cli(args + " --seed 5"), b = cli(args + " --seed 5"), c = cli(args + " --seed 6");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    REQUIRE(c.code == 0);
    CHECK(untimed(a.out).dump() == untimed(b.out).dump());
    CHECK(untimed(a.out).dump() != untimed(c.out).dump());
    // a single case replays on its own
    auto one = cli("--suite discrete-bounds --filter oracle-07 --seed 5");
    auto full = untimed(a.out);
    json seven;
    for (const auto& x : full["cases"])
        if (x["id"] == "oracle-07") seven = x;
    CHECK(untimed(one.out)["cases"][0] == seven);
}

TEST_CASE("empty selection is a valid report with zero cases")
{
    auto r = cli("--suite halasz --filter zzz");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["cases"].empty());
    CHECK(j["summary"]["cases"] == 0);
    auto csv = cli("--suite halasz --filter zzz --format csv");
    CHECK(csv.out == "suite,case_id,lower,value,upper,pass\n");
}

TEST_CASE("riesz CSV rows carry lower, computed and upper columns")
{
    const fs::path out = scratch() / "riesz.csv";
    auto r = cli("--suite riesz --filter sandwich --format csv --out \"" + out.string() + "\"");
    REQUIRE(r.code == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::getline(in, line);
    CHECK(line == "suite,case_id,lower,value,upper,pass");
    int rows = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::stringstream ls(line);
        for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
        REQUIRE(f.size() == 6);
        CHECK(f[0] == "riesz");
        CHECK(!f[2].empty());
        CHECK(!f[3].empty());
        CHECK(!f[4].empty());
        CHECK(f[5] == "true");
        PrecisionScope ps(256);
        CHECK(from_decimal(f[2]) <= from_decimal(f[3]));
        CHECK(from_decimal(f[3]) <= from_decimal(f[4]));
        ++rows;
    }
    CHECK(rows == 15);
}

TEST_CASE("decimal strings round-trip at the configured precision")
{
    auto r = cli("--suite riesz --filter single --precision-bits 320");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    const std::string v = j["cases"][0]["value"];
    PrecisionScope ps(320);
    const Real x = from_decimal(v);
    CHECK(to_decimal(x) == v);
    CHECK(abs(x - Real(3) / 4) < Real(1e-90));
}

TEST_CASE("config file sets flags and command-line flags win")
{
    const fs::path cfg = write("run.cfg", "# comment\nsuite = riesz\nfilter=single\nprecision-bits=128\nseed=9\n");
    auto a = cli("--config \"" + cfg.string() + "\"");
    REQUIRE(a.code == 0);
    auto ja = json::parse(a.out);
    CHECK(ja["suite"] == "riesz");
    CHECK(ja["precision_bits"] == 128);
    CHECK(ja["seed"] == 9);
    auto b = cli("--config \"" + cfg.string() + "\" --precision-bits 192 --tol riesz_single=1e-30");
    REQUIRE(b.code == 0);
    auto jb = json::parse(b.out);
    CHECK(jb["precision_bits"] == 192);
    CHECK(jb["tolerances"]["riesz_single"] == 1e-30);

    CHECK(cli("--config \"" + write("bad.cfg", "suite=riesz\ncolour=blue\n").string() + "\"").code == 2);
    CHECK(cli("--config \"" + write("noeq.cfg", "suite riesz\n").string() + "\"").code == 2);
    CHECK(cli("--config \"" + (scratch() / "missing.cfg").string() + "\"").code == 2);
}

TEST_CASE("measure files: accepted and rejected")
{
    const auto good = write("two.json", R"({"components": [{"kind": "atomic", "atoms": [["0", 0.5], ["1/3", 0.5]]}]})");
    auto r = cli("--suite discrete-bounds --filter file --measure \"" + good.string() + "\" --degree 1");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    REQUIRE(j["cases"].size() == 1);
    CHECK(j["cases"][0]["id"] == "file");

    const auto broken = write("broken.json", "{\n  \"components\": [\n    {\"kind\": \"atomic\",, }\n]}");
    auto b = cli("--suite discrete-bounds --measure \"" + broken.string() + "\"");
    CHECK(b.code == 2);
    CHECK(b.err.find("line 3") != std::string::npos);

    const auto lac = write("lac.json", R"({"components": [{"kind": "riesz", "alphas": [0.5, 0.5], "ells": [2, 5]}]})");
    auto l = cli("--suite discrete-bounds --measure \"" + lac.string() + "\"");
    CHECK(l.code == 2);
    CHECK(l.err.find("2, 5") != std::string::npos);
    CHECK(l.err.find("components[0].ells") != std::string::npos);

    const auto mass = write("mass.json", R"({"total_mass": 1.5, "components": [
        {"kind": "atomic", "weight": 1, "atoms": [["1/2", 1.0]]}]})");
    auto m = cli("--suite discrete-bounds --measure \"" + mass.string() + "\"");
    CHECK(m.code == 2);
    CHECK(m.err.find("total_mass") != std::string::npos);

    const auto kind = write("kind.json", R"({"components": [{"kind": "gaussian"}]})");
    auto k = cli("--suite discrete-bounds --measure \"" + kind.string() + "\"");
    CHECK(k.code == 2);
    CHECK(k.err.find("components[0].kind") != std::string::npos);
}

TEST_CASE("generators export measure JSON that parses back")
{
    auto r = cli("--generate riesz --param n=2 --param alpha=0.5");
    REQUIRE(r.code == 0);
    PrecisionScope ps(256);
    auto rho = parse_measure_json(r.out);
    REQUIRE(rho.components.size() == 1);
    CHECK(std::holds_alternative<RieszProductComponent>(rho.components[0].component));
    CHECK(abs(rho.total_mass() - 1) < Real(1e-30));

    auto d = cli("--generate dyadic --param K=4");
    REQUIRE(d.code == 0);
    CHECK(parse_measure_json(d.out).all_atoms().size() == 2 + 4 + 8 + 16);

    CHECK(cli("--generate spiral").code == 2);
    CHECK(cli("--generate riesz --param colour=3").code == 2);
    CHECK(cli("--generate riesz --param n=x").code == 2);
}

TEST_CASE("output I/O errors are surfaced")
{
    auto r = cli("--suite riesz --filter single --out /nonexistent-dir/report.json");
    CHECK(r.code == 2);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("config API")
{
    SuiteConfig cfg;
    CHECK_THROWS_AS(apply_setting(cfg, "suite", "riesz-products"), ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "grid", "12x"), ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "tol.oracle", "tiny"), ConfigError);
    apply_setting(cfg, "suite", "pron");
    apply_setting(cfg, "tol.oracle", "1e-25");
    CHECK(cfg.tol("oracle") == 1e-25);
    CHECK(cfg.tol("invariance") == 1e-30);
    cfg.grid = 8;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.grid = kDefaultGrid;
    CHECK(suite_case_ids(cfg) == std::vector<std::string>{"scaled-K3", "literal-schedule"});
}
