#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "hvperf/postprocess.hpp"
#include "hvperf/runner.hpp"
#include "hvperf/suite.hpp"
#include "hvperf/text.hpp"

namespace {

// "1-10", "1,3,5" or "1-3,7"
auto parse_int_list(std::string const& spec) -> std::vector<int>
{
    std::vector<int> out;
    for (auto part : hvperf::text::split(spec, ',')) {
        part = hvperf::text::trim(part);
        auto dash = part.find('-', 1);
        if (dash == std::string_view::npos) {
            auto v = hvperf::text::parse_int(part);
            if (!v) {
                throw CLI::ValidationError("bad integer list '" + spec + "'");
            }
            out.push_back(static_cast<int>(*v));
            continue;
        }
        auto lo = hvperf::text::parse_int(part.substr(0, dash));
        auto hi = hvperf::text::parse_int(part.substr(dash + 1));
        if (!lo || !hi || *lo > *hi) {
            throw CLI::ValidationError("bad range in '" + spec + "'");
        }
        for (auto i = *lo; i <= *hi; ++i) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

auto parse_real_list(std::string const& spec) -> std::vector<double>
{
    std::vector<double> out;
    for (auto part : hvperf::text::split(spec, ',')) {
        auto v = hvperf::text::parse_real(part);
        if (!v) {
            throw CLI::ValidationError("bad number '" + std::string(part) + "'");
        }
        out.push_back(*v);
    }
    return out;
}

} // namespace

auto main(int argc, char** argv) -> int
{
    CLI::App app { "Performance assessment of bi-objective optimizers on a mini benchmark suite" };
    app.require_subcommand(1);
    app.fallthrough();

    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "worker threads")->capture_default_str();

    // run
    hvperf::ExperimentConfig run_cfg;
    std::string suite = "mini";
    std::string run_functions = "f1,f2,f3";
    std::string run_dims = "2";
    std::string run_instances = "1-10";
    std::int64_t run_budget = 0;
    std::string run_out;
    std::string run_refsets;
    auto* run = app.add_subcommand("run", "run one baseline once on every selected problem");
    run->add_option("--suite", suite, "suite name (only 'mini')")->check(CLI::IsMember({ "mini" }))->capture_default_str();
    run->add_option("--functions", run_functions, "comma-separated function ids")->capture_default_str();
    run->add_option("--dims", run_dims, "dimensions, e.g. 2,5")->capture_default_str();
    run->add_option("--instances", run_instances, "instances, e.g. 1-10")->capture_default_str();
    run->add_option("--algo", run_cfg.algorithm, "random | hillclimb")->capture_default_str();
    run->add_option("--budget", run_budget, "evaluations per problem (default 10000 * dimension)");
    run->add_option("--seed", run_cfg.seed, "random seed")->capture_default_str();
    run->add_option("--refsets", run_refsets, "reference-set directory (omit to bootstrap into <out>/refsets)");
    run->add_option("--bootstrap-budget", run_cfg.bootstrap_budget, "per-baseline budget when bootstrapping")->capture_default_str();
    run->add_option("--out", run_out, "output directory")->required();

    // bootstrap-refsets
    hvperf::BootstrapConfig boot_cfg;
    std::string boot_functions = "f1,f2,f3";
    std::string boot_dims = "2,3,5,10";
    std::string boot_instances = "1-10";
    std::string boot_out;
    auto* boot = app.add_subcommand("bootstrap-refsets", "build reference sets from the built-in baselines");
    boot->add_option("--functions", boot_functions)->capture_default_str();
    boot->add_option("--dims", boot_dims)->capture_default_str();
    boot->add_option("--instances", boot_instances)->capture_default_str();
    boot->add_option("--seed", boot_cfg.seed)->capture_default_str();
    boot->add_option("--budget", boot_cfg.budget, "evaluations per baseline per problem")->capture_default_str();
    boot->add_option("--out", boot_out, "reference-set directory")->required();

    // recalc
    std::string recalc_logs;
    std::string recalc_refsets;
    std::string recalc_out;
    auto* recalc = app.add_subcommand("recalc", "replay logged runs against new reference sets");
    recalc->add_option("--logs", recalc_logs, "experiment output directory")->required();
    recalc->add_option("--refsets", recalc_refsets, "reference-set directory")->required();
    recalc->add_option("--out", recalc_out, "output directory")->required();

    // postprocess
    std::string post_logs;
    std::string post_out;
    std::string post_precisions;
    std::size_t post_display = hvperf::kDefaultInstancesDisplayed;
    auto* post = app.add_subcommand("postprocess", "ECDF and runtime tables from logged runs");
    post->add_option("--logs", post_logs, "experiment output directory")->required();
    post->add_option("--out", post_out, "output directory")->required();
    post->add_option("--precisions", post_precisions, "target precisions for the runtime table, e.g. 1e0,1e-1");
    post->add_option("--instances-display", post_display, "instances shown per table block")->capture_default_str();

    // list
    auto* list = app.add_subcommand("list", "print suite problem ids");
    std::string list_dims = "2,3,5,10";
    list->add_option("--dims", list_dims)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            run_cfg.functions = CLI::detail::split(run_functions, ',');
            run_cfg.dimensions = parse_int_list(run_dims);
            run_cfg.instances = parse_int_list(run_instances);
            if (run->count("--budget") > 0) {
                run_cfg.budget = run_budget;
            }
            run_cfg.out = run_out;
            if (!run_refsets.empty()) {
                run_cfg.refsets = run_refsets;
            }
            run_cfg.threads = threads;
            auto result = hvperf::run_experiment(run_cfg);
            std::cout << "ran " << result.runs.size() << " problems; index: " << result.index_file.string() << '\n';
        } else if (*boot) {
            boot_cfg.functions = CLI::detail::split(boot_functions, ',');
            boot_cfg.dimensions = parse_int_list(boot_dims);
            boot_cfg.instances = parse_int_list(boot_instances);
            boot_cfg.out = boot_out;
            boot_cfg.threads = threads;
            auto files = hvperf::bootstrap_refsets(boot_cfg);
            for (auto const& f : files) {
                std::cout << f.set.key.id() << "\tversion=" << f.set.version
                          << "\ti_ref=" << hvperf::text::format_real(f.set.i_ref)
                          << "\tpoints=" << f.set.points.size() << '\n';
            }
        } else if (*recalc) {
            auto results = hvperf::recalc_experiment({ recalc_logs, recalc_refsets, recalc_out });
            for (auto const& r : results) {
                std::cout << "recalculated " << r.runs.size() << " runs; index: " << r.index_file.string() << '\n';
            }
        } else if (*post) {
            hvperf::PostprocessConfig cfg;
            cfg.logs = post_logs;
            cfg.out = post_out;
            if (!post_precisions.empty()) {
                cfg.precisions = parse_real_list(post_precisions);
            }
            cfg.instances_display = post_display;
            for (auto const& p : hvperf::postprocess(cfg)) {
                std::cout << p.string() << '\n';
            }
        } else if (*list) {
            for (auto const& f : hvperf::suite_function_ids()) {
                for (int d : parse_int_list(list_dims)) {
                    for (int i = 1; i <= hvperf::kInstancesPerFunction; ++i) {
                        std::cout << hvperf::ProblemKey { f, i, d }.id() << '\n';
                    }
                }
            }
        }
    } catch (CLI::Error const& e) {
        return app.exit(e);
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
