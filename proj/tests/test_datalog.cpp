#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hvperf/datalog.hpp"
#include "oracles.hpp"

using namespace hvperf;

namespace {

auto tmpdir(std::string const& name) -> std::filesystem::path
{
    auto d = std::filesystem::temp_directory_path() / ("hvperf_test_datalog_" + name);
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

auto header() -> RunHeader
{
    RunHeader h;
    h.key = { "f1", 3, 2 };
    h.algorithm = "random";
    h.refset_version = "0123456789abcdef";
    h.i_ref = -0.8;
    h.ideal = { 0.0, 0.0 };
    h.nadir = { 10.0, 10.0 };
    return h;
}

// Every record lies on the line f_alpha + f_beta = s with s shrinking, so
// each one enters the archive; the early ones sit outside the nadir box.
auto random_log(std::uint64_t seed, std::size_t n) -> RunLog
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> x(-5.0, 5.0);
    std::uniform_int_distribution<int> gap(1, 5);
    RunLog log { header(), {}, std::nullopt };
    std::int64_t t = 0;
    for (std::size_t k = 0; k < n; ++k) {
        t += gap(rng);
        double s = 25.0 * std::pow(0.01 / 25.0, static_cast<double>(k) / static_cast<double>(n));
        double w = unit(rng);
        log.records.push_back({ t, { w * s, (1.0 - w) * s }, { x(rng), x(rng) } });
    }
    log.evaluations = t + 3;
    return log;
}

} // namespace

TEST_CASE("run logs round-trip exactly")
{
    auto dir = tmpdir("roundtrip");
    std::vector<RunLog> logs;
    logs.push_back({ header(), {}, 0 });
    logs.push_back({ header(),
                     { { 1, { 5.0, 5.0 }, { 0.1, -0.2 } },
                       { 4, { 1.0 / 3.0, 9.0 }, { 1e-300, 4.9 } },
                       { 9, { 0.1, 9.5 }, { -5.0, 5.0 } } },
                     12 });
    logs.push_back(random_log(1, 10000));
    for (std::size_t i = 0; i < logs.size(); ++i) {
        auto p = dir / ("log" + std::to_string(i) + ".tsv");
        write_log(p, logs[i]);
        auto back = read_log(p);
        CHECK(back == logs[i]);
        auto p2 = dir / ("again" + std::to_string(i) + ".tsv");
        write_log(p2, back);
        CHECK(slurp(p) == slurp(p2));
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("streamed logs equal logs written in one go")
{
    auto dir = tmpdir("stream");
    auto log = random_log(2, 50);
    {
        LogWriter w(dir / "a.tsv", log.header);
        for (auto const& r : log.records) {
            w.append(r);
        }
        REQUIRE_THROWS_AS(w.append(log.records.front()), UsageError);
        w.finish(*log.evaluations);
    }
    write_log(dir / "b.tsv", log);
    CHECK(slurp(dir / "a.tsv") == slurp(dir / "b.tsv"));

    // a run that never finished has no evaluation count
    {
        LogWriter w(dir / "c.tsv", log.header);
        w.append(log.records.front());
    }
    CHECK_FALSE(read_log(dir / "c.tsv").evaluations.has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("malformed logs are rejected with a line number")
{
    auto dir = tmpdir("errors");
    auto log = random_log(3, 5);
    write_log(dir / "ok.tsv", log);
    auto text = slurp(dir / "ok.tsv");
    std::vector<std::string> lines;
    {
        std::stringstream ss(text);
        for (std::string l; std::getline(ss, l);) {
            lines.push_back(l);
        }
    }
    auto write_lines = [&](std::filesystem::path const& p, std::vector<std::string> const& ls) {
        std::ofstream out(p);
        for (auto const& l : ls) {
            out << l << '\n';
        }
    };
    std::size_t first_record = 0;
    while (lines[first_record].starts_with("%")) {
        ++first_record;
    }

    auto bad = lines;
    bad[first_record + 1] = "7\tabc\t1.0";
    write_lines(dir / "bad.tsv", bad);
    try {
        (void)read_log(dir / "bad.tsv");
        FAIL("expected ParseError");
    } catch (ParseError const& e) {
        CHECK(e.line() == first_record + 2);
    }

    auto short_row = lines;
    short_row[first_record] = "1\t2.0";
    write_lines(dir / "short.tsv", short_row);
    REQUIRE_THROWS_AS(read_log(dir / "short.tsv"), ParseError);

    auto unordered = lines;
    std::swap(unordered[first_record], unordered[first_record + 1]);
    write_lines(dir / "order.tsv", unordered);
    REQUIRE_THROWS_AS(read_log(dir / "order.tsv"), ParseError);

    auto missing = lines;
    missing.erase(missing.begin() + 3);
    write_lines(dir / "missing.tsv", missing);
    REQUIRE_THROWS_AS(read_log(dir / "missing.tsv"), ParseError);

    auto version = lines;
    version[0] = "% hvperf-runlog version=99";
    write_lines(dir / "version.tsv", version);
    REQUIRE_THROWS_AS(read_log(dir / "version.tsv"), VersionError);

    write_lines(dir / "foreign.tsv", { "a\tb\tc" });
    REQUIRE_THROWS_AS(read_log(dir / "foreign.tsv"), ParseError);
    REQUIRE_THROWS(read_log(dir / "nonexistent.tsv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("recalculation is deterministic and matches a brute-force scan")
{
    for (std::uint64_t seed = 10; seed < 20; ++seed) {
        auto log = random_log(seed, 300);
        auto spec = spec_of(log.header);
        auto r1 = recalculate(log, spec);
        auto r2 = recalculate(log, spec);
        CHECK(r1.trajectory == r2.trajectory);
        CHECK(r1.runtimes == r2.runtimes);
        REQUIRE(r1.trajectory.size() == log.records.size());
        CHECK(r1.runtimes.evaluations() == *log.evaluations);

        std::vector<std::pair<std::int64_t, double>> traj;
        std::vector<NormalizedObjectives> seen;
        for (std::size_t i = 0; i < log.records.size(); ++i) {
            seen.push_back(normalize(log.records[i].y, spec));
            auto scratch = recompute_from_scratch(oracle::nondominated(seen));
            double expected = *scratch.distance;
            if (*scratch.distance == 0.0) {
                expected = scratch.hypervolume == 0.0 ? 0.0 : -scratch.hypervolume;
            }
            CHECK(oracle::ulp_distance(r1.trajectory[i].value.value, expected) <= 4);
            traj.emplace_back(log.records[i].eval, r1.trajectory[i].value.value);
        }
        auto targets = absolute_targets(spec, precision_grid());
        auto expected_hits = oracle::first_hits(traj, targets);
        for (std::size_t k = 0; k < targets.size(); ++k) {
            CHECK(r1.runtimes.first_hits()[k] == expected_hits[k]);
        }
    }
}

TEST_CASE("a lower reference value never makes targets easier")
{
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        auto log = random_log(seed, 200);
        auto spec = spec_of(log.header);
        auto base = recalculate(log, spec);
        auto shifted_spec = spec;
        shifted_spec.i_ref = std::max(-1.0, spec.i_ref - 0.1);
        auto shifted = recalculate(log, shifted_spec);
        CHECK(base.trajectory == shifted.trajectory);
        for (std::size_t k = 0; k < base.runtimes.first_hits().size(); ++k) {
            auto const& a = base.runtimes.first_hits()[k];
            auto const& b = shifted.runtimes.first_hits()[k];
            if (b) {
                REQUIRE(a);
                CHECK(*b >= *a);
            }
        }
        CHECK(shifted.runtimes.hit_count() <= base.runtimes.hit_count());
    }
}

TEST_CASE("recalculation rejects corrupt logs")
{
    auto log = random_log(5, 10);
    auto spec = spec_of(log.header);
    auto dominated = log;
    auto y = dominated.records.back().y;
    dominated.records.push_back({ *log.evaluations + 1, { y.f_alpha + 1.0, y.f_beta + 1.0 }, {} });
    dominated.evaluations = *log.evaluations + 1;
    REQUIRE_THROWS_AS(recalculate(dominated, spec), DomainError);

    auto bad_spec = spec;
    bad_spec.i_ref = 0.5;
    REQUIRE_THROWS_AS(recalculate(log, bad_spec), DomainError);
}

TEST_CASE("experiment index round-trip")
{
    auto dir = tmpdir("index");
    std::vector<IndexEntry> entries { { "f1_d2_i1.tsv", { "f1", 1, 2 }, "random", "00000000000000aa", 20000 },
                                      { "f3_d5_i10.tsv", { "f3", 10, 5 }, "random", "00000000000000bb", 50000 } };
    auto p = index_path(dir, "random");
    CHECK(p == dir / "random" / "experiment_index.tsv");
    std::filesystem::create_directories(p.parent_path());
    write_index(p, entries);
    CHECK(read_index(p) == entries);
    std::filesystem::remove_all(dir);
}

TEST_CASE("run log paths")
{
    CHECK(run_log_path("out", "random", { "f2", 7, 5 }) == std::filesystem::path("out/random/f2_d5_i7.tsv"));
}
