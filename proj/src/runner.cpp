#include "hvperf/runner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "hvperf/archive.hpp"
#include "hvperf/indicator.hpp"
#include "hvperf/text.hpp"

namespace hvperf {

namespace {

auto tag32(std::string_view s) -> std::uint32_t
{
    return static_cast<std::uint32_t>(std::stoull(text::fnv1a_hex(s).substr(8), nullptr, 16));
}

auto problem_engine(std::uint32_t seed, ProblemKey const& key, std::string_view algorithm) -> Engine
{
    return make_engine({ seed, tag32(key.function_id), static_cast<std::uint32_t>(key.dimension),
                         static_cast<std::uint32_t>(key.instance_id), tag32(algorithm) });
}

// Runs body(i) for i in [0, count) on up to `threads` workers and rethrows the
// first failure.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body)
{
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next { 0 };
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (auto i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

auto write_outputs(std::filesystem::path const& out, std::string const& algorithm, std::vector<RunResult> const& runs)
    -> ExperimentResult
{
    ExperimentResult result;
    std::vector<std::pair<ProblemKey, RuntimeRecord>> records;
    for (auto const& r : runs) {
        result.index.push_back({ r.log.filename().string(), r.key, algorithm, r.refset_version,
                                 r.runtimes.evaluations() });
        records.emplace_back(r.key, r.runtimes);
    }
    write_runtimes(out / algorithm / "runtimes.tsv", records);
    result.index_file = index_path(out, algorithm);
    write_index(result.index_file, result.index);
    result.runs = runs;
    return result;
}

} // namespace

auto run_problem(SuiteFunction const& fn, ProblemSpec const& spec, Optimizer const& optimizer, std::int64_t budget,
                 Engine& rng, std::filesystem::path const& log_path) -> RunResult
{
    if (budget < 1) {
        throw UsageError("budget must be at least 1");
    }
    spec.validate();
    RunResult result;
    result.key = fn.key();
    result.log = log_path;
    result.refset_version = spec.refset_version;
    result.runtimes = RuntimeRecord(absolute_targets(spec, precision_grid()));

    Archive arch;
    auto indicator = empty_indicator();
    LogWriter writer(log_path, make_header(spec, optimizer.name()));

    BlackBox box(fn, budget, [&](std::int64_t t, std::span<double const> x, ObjectiveVector const& y) {
        auto outcome = arch.insert(normalize(y, spec), t);
        if (!outcome.accepted) {
            return;
        }
        indicator = evaluate_incremental(indicator, outcome, arch);
        result.trajectory.push_back({ t, indicator });
        result.runtimes.record(t, indicator);
        writer.append({ t, y, std::vector<double>(x.begin(), x.end()) });
    });
    optimizer.optimize(box, rng);

    result.runtimes.set_evaluations(box.evaluations());
    writer.finish(box.evaluations());
    return result;
}

auto load_problem_spec(std::filesystem::path const& dir, ProblemKey const& key) -> ProblemSpec
{
    auto path = refset_path(dir, key);
    if (!std::filesystem::exists(path)) {
        throw std::runtime_error("no reference set for problem " + key.id() + " (expected " + path.string() + ")");
    }
    auto file = read_refset(path);
    if (!(file.spec.key == key)) {
        throw std::runtime_error("reference set " + path.string() + " belongs to " + file.spec.key.id()
                                 + ", not " + key.id());
    }
    return file.spec;
}

auto run_experiment(ExperimentConfig const& cfg) -> ExperimentResult
{
    if (cfg.budget && *cfg.budget < 1) {
        throw UsageError("budget must be at least 1");
    }
    auto optimizer = make_optimizer(cfg.algorithm);
    auto problems = enumerate_problems(cfg.functions, cfg.dimensions, cfg.instances);
    if (problems.empty()) {
        throw UsageError("empty problem selection");
    }
    for (auto const& key : problems) {
        (void)SuiteFunction(key); // validates ids early
    }

    auto refsets = cfg.refsets.value_or(cfg.out / "refsets");
    if (!cfg.refsets) {
        BootstrapConfig bc;
        bc.functions = cfg.functions;
        bc.dimensions = cfg.dimensions;
        bc.instances = cfg.instances;
        bc.out = refsets;
        bc.seed = cfg.seed;
        bc.budget = cfg.bootstrap_budget;
        bc.threads = cfg.threads;
        bootstrap_refsets(bc);
    }

    std::vector<ProblemSpec> specs;
    for (auto const& key : problems) {
        specs.push_back(load_problem_spec(refsets, key));
    }

    std::vector<RunResult> runs(problems.size());
    parallel_for(problems.size(), cfg.threads, [&](std::size_t i) {
        auto const& key = problems[i];
        SuiteFunction fn(key);
        auto rng = problem_engine(cfg.seed, key, optimizer->name());
        auto budget = cfg.budget.value_or(default_budget(key.dimension));
        runs[i] = run_problem(fn, specs[i], *optimizer, budget, rng, run_log_path(cfg.out, optimizer->name(), key));
    });
    return write_outputs(cfg.out, optimizer->name(), runs);
}

auto bootstrap_problem(ProblemKey const& key, std::int64_t budget, std::uint32_t seed) -> RefsetFile
{
    if (budget < 1) {
        throw UsageError("bootstrap budget must be at least 1");
    }
    SuiteFunction fn(key);
    std::vector<std::vector<ObjectiveVector>> archives;
    for (auto const& name : optimizer_names()) {
        auto optimizer = make_optimizer(name);
        auto rng = problem_engine(seed, key, "bootstrap/" + name);
        std::vector<ObjectiveVector> seen;
        seen.reserve(static_cast<std::size_t>(budget));
        BlackBox box(fn, budget, [&](std::int64_t, std::span<double const>, ObjectiveVector const& y) {
            seen.push_back(y);
        });
        optimizer->optimize(box, rng);
        archives.push_back(nondominated_filter(seen));
    }

    ProblemSpec bounds;
    if (auto ideal = fn.analytic_ideal(), nadir = fn.analytic_nadir(); ideal && nadir) {
        bounds.key = key;
        bounds.ideal = *ideal;
        bounds.nadir = *nadir;
    } else {
        std::vector<ObjectiveVector> all;
        for (auto const& a : archives) {
            all.insert(all.end(), a.begin(), a.end());
        }
        bounds = estimate_bounds(key, nondominated_filter(all));
    }
    auto rs = merge(archives, bounds);
    auto spec = spec_for(rs, bounds);
    spec.validate();
    return { std::move(rs), std::move(spec) };
}

auto bootstrap_refsets(BootstrapConfig const& cfg) -> std::vector<RefsetFile>
{
    auto problems = enumerate_problems(cfg.functions, cfg.dimensions, cfg.instances);
    std::vector<RefsetFile> files(problems.size());
    parallel_for(problems.size(), cfg.threads, [&](std::size_t i) {
        files[i] = bootstrap_problem(problems[i], cfg.budget, cfg.seed);
        write_refset(refset_path(cfg.out, problems[i]), files[i]);
    });
    return files;
}

auto find_algorithms(std::filesystem::path const& dir) -> std::vector<std::string>
{
    std::vector<std::string> out;
    if (!std::filesystem::is_directory(dir)) {
        throw std::runtime_error("not a directory: " + dir.string());
    }
    for (auto const& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_directory() && std::filesystem::exists(entry.path() / "experiment_index.tsv")) {
            out.push_back(entry.path().filename().string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto recalc_experiment(RecalcConfig const& cfg) -> std::vector<ExperimentResult>
{
    std::vector<ExperimentResult> results;
    for (auto const& algorithm : find_algorithms(cfg.logs)) {
        auto index = read_index(index_path(cfg.logs, algorithm));
        std::vector<RunResult> runs;
        for (auto const& entry : index) {
            auto log = read_log(cfg.logs / algorithm / entry.file);
            auto spec = load_problem_spec(cfg.refsets, log.header.key);
            auto recalc = recalculate(log, spec);

            RunLog updated = log;
            updated.header = make_header(spec, log.header.algorithm);
            auto path = cfg.out / algorithm / entry.file;
            write_log(path, updated);

            runs.push_back({ log.header.key, path, std::move(recalc.trajectory), std::move(recalc.runtimes),
                             spec.refset_version });
        }
        results.push_back(write_outputs(cfg.out, algorithm, runs));
    }
    return results;
}

} // namespace hvperf
