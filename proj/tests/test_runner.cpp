#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hvperf/runner.hpp"

using namespace hvperf;

namespace {

auto tmpdir(std::string const& name) -> std::filesystem::path
{
    auto d = std::filesystem::temp_directory_path() / ("hvperf_test_runner_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

auto slurp(std::filesystem::path const& p) -> std::string
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// every regular file under `root`, keyed by relative path
auto snapshot(std::filesystem::path const& root) -> std::map<std::string, std::string>
{
    std::map<std::string, std::string> files;
    for (auto const& e : std::filesystem::recursive_directory_iterator(root)) {
        if (e.is_regular_file()) {
            files[std::filesystem::relative(e.path(), root).string()] = slurp(e.path());
        }
    }
    return files;
}

auto small_refsets(std::filesystem::path const& dir) -> std::filesystem::path
{
    BootstrapConfig bc;
    bc.functions = { "f1", "f2", "f3" };
    bc.dimensions = { 2 };
    bc.instances = { 1, 2 };
    bc.out = dir / "refsets";
    bc.budget = 2000;
    (void)bootstrap_refsets(bc);
    return bc.out;
}

} // namespace

TEST_CASE("a budget of one evaluation logs exactly one record")
{
    auto dir = tmpdir("budget1");
    ExperimentConfig cfg;
    cfg.functions = { "f1" };
    cfg.instances = { 1 };
    cfg.budget = 1;
    cfg.out = dir / "out";
    cfg.refsets = small_refsets(dir);
    auto res = run_experiment(cfg);
    REQUIRE(res.runs.size() == 1);
    auto log = read_log(res.runs[0].log);
    CHECK(log.records.size() == 1);
    CHECK(log.records[0].eval == 1);
    CHECK(log.evaluations == 1);
    CHECK(res.runs[0].runtimes.evaluations() == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("runs are reproducible and independent of the thread count")
{
    auto dir = tmpdir("repro");
    auto refsets = small_refsets(dir);
    ExperimentConfig cfg;
    cfg.instances = { 1, 2 };
    cfg.budget = 500;
    cfg.refsets = refsets;
    cfg.seed = 42;

    cfg.out = dir / "a";
    (void)run_experiment(cfg);
    cfg.out = dir / "b";
    (void)run_experiment(cfg);
    cfg.out = dir / "c";
    cfg.threads = 4;
    (void)run_experiment(cfg);

    auto a = snapshot(dir / "a");
    CHECK(a.size() == 6 + 2);
    CHECK(a == snapshot(dir / "b"));
    CHECK(a == snapshot(dir / "c"));

    cfg.out = dir / "d";
    cfg.seed = 43;
    cfg.threads = 1;
    (void)run_experiment(cfg);
    CHECK_FALSE(a == snapshot(dir / "d"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("every logged record entered the archive and the trajectory is monotone")
{
    auto dir = tmpdir("live");
    ExperimentConfig cfg;
    cfg.functions = { "f2" };
    cfg.instances = { 1 };
    cfg.budget = 3000;
    cfg.algorithm = "hillclimb";
    cfg.out = dir / "out";
    cfg.refsets = small_refsets(dir);
    auto res = run_experiment(cfg);
    auto const& run = res.runs.at(0);
    auto log = read_log(run.log);
    REQUIRE(log.records.size() == run.trajectory.size());
    for (std::size_t i = 0; i < log.records.size(); ++i) {
        CHECK(log.records[i].eval == run.trajectory[i].eval);
        CHECK(log.records[i].x.size() == 2);
        if (i > 0) {
            CHECK(run.trajectory[i].value.value <= run.trajectory[i - 1].value.value);
        }
    }
    auto replay = recalculate(log, spec_of(log.header));
    CHECK(replay.trajectory == run.trajectory);
    CHECK(replay.runtimes == run.runtimes);
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors are reported before any output")
{
    auto dir = tmpdir("errors");
    ExperimentConfig cfg;
    cfg.functions = { "f1" };
    cfg.instances = { 1 };
    cfg.out = dir / "out";
    cfg.refsets = dir / "empty";
    std::filesystem::create_directories(*cfg.refsets);

    cfg.budget = 0;
    REQUIRE_THROWS_AS(run_experiment(cfg), UsageError);
    cfg.budget = 10;
    REQUIRE_THROWS_WITH(run_experiment(cfg), Catch::Matchers::ContainsSubstring("f1:2:1"));
    cfg.functions = { "f7" };
    REQUIRE_THROWS_AS(run_experiment(cfg), UsageError);
    cfg.functions = { "f1" };
    cfg.algorithm = "nope";
    REQUIRE_THROWS_AS(run_experiment(cfg), UsageError);
    CHECK_FALSE(std::filesystem::exists(dir / "out" / "random" / "experiment_index.tsv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("bootstrapped reference sets are reproducible")
{
    for (std::string id : { "f1", "f2", "f3" }) {
        auto a = bootstrap_problem({ id, 3, 2 }, 1500, 7);
        auto b = bootstrap_problem({ id, 3, 2 }, 1500, 7);
        CHECK(a.set.version == b.set.version);
        CHECK(a.set.points == b.set.points);
        CHECK(a.spec.i_ref == b.spec.i_ref);
        CHECK(a.spec.approximate_bounds == (id != "f1"));
        CHECK(a.spec.i_ref >= -1.0);
        CHECK(a.spec.i_ref < 0.0);
    }
    REQUIRE_THROWS_AS(bootstrap_problem({ "f1", 1, 2 }, 0, 1), UsageError);
}

TEST_CASE("random search on the double sphere reaches the easy targets")
{
    // regression fixture: the bootstrap at twice this budget sets i_ref and
    // random search alone must get within 1e-1 of it
    auto dir = tmpdir("fixture");
    BootstrapConfig bc;
    bc.functions = { "f1" };
    bc.dimensions = { 2 };
    bc.instances = { 1 };
    bc.out = dir / "refsets";
    bc.budget = 10000;
    (void)bootstrap_refsets(bc);

    ExperimentConfig cfg;
    cfg.functions = { "f1" };
    cfg.instances = { 1 };
    cfg.budget = 10000;
    cfg.out = dir / "out";
    cfg.refsets = bc.out;
    auto res = run_experiment(cfg);
    auto const& rec = res.runs.at(0).runtimes;
    auto idx = find_precision(1e-1);
    REQUIRE(idx);
    for (std::size_t k = *idx; k < rec.first_hits().size(); ++k) {
        CHECK(rec.first_hits()[k].has_value());
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("runs without a reference-set directory bootstrap first")
{
    auto dir = tmpdir("auto");
    ExperimentConfig cfg;
    cfg.functions = { "f1" };
    cfg.instances = { 2 };
    cfg.budget = 100;
    cfg.bootstrap_budget = 500;
    cfg.out = dir / "out";
    auto res = run_experiment(cfg);
    CHECK(std::filesystem::exists(dir / "out" / "refsets" / "f1_d2_i2.tsv"));
    CHECK(res.index.size() == 1);
    CHECK(find_algorithms(dir / "out") == std::vector<std::string> { "random" });
    std::filesystem::remove_all(dir);
}

TEST_CASE("recalc against new reference sets")
{
    auto dir = tmpdir("recalc");
    auto refsets = small_refsets(dir);
    ExperimentConfig cfg;
    cfg.functions = { "f1" };
    cfg.instances = { 1, 2 };
    cfg.budget = 400;
    cfg.out = dir / "out";
    cfg.refsets = refsets;
    auto live = run_experiment(cfg);

    // same reference sets: identical output
    auto same = recalc_experiment({ dir / "out", refsets, dir / "same" });
    REQUIRE(same.size() == 1);
    CHECK(snapshot(dir / "out" / "random") == snapshot(dir / "same" / "random"));

    // a better reference set changes the header and can only delay hits
    BootstrapConfig bc;
    bc.functions = { "f1" };
    bc.dimensions = { 2 };
    bc.instances = { 1, 2 };
    bc.out = dir / "better";
    bc.budget = 20000;
    (void)bootstrap_refsets(bc);
    auto better = recalc_experiment({ dir / "out", bc.out, dir / "new" });
    REQUIRE(better.size() == 1);
    for (std::size_t i = 0; i < 2; ++i) {
        auto const& before = live.runs[i];
        auto const& after = better[0].runs[i];
        CHECK(after.refset_version != before.refset_version);
        CHECK(read_log(after.log).header.refset_version == after.refset_version);
        CHECK(read_log(after.log).records == read_log(before.log).records);
    }
    std::filesystem::remove_all(dir);
}
