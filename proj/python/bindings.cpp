#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "hvperf/indicator.hpp"
#include "hvperf/postprocess.hpp"
#include "hvperf/runner.hpp"
#include "hvperf/targets.hpp"

namespace py = pybind11;
using namespace hvperf;

namespace {

// Archive plus the incrementally maintained indicator value, the way a run
// drives them.
class Tracker {
public:
    auto add(double u, double v, std::int64_t t) -> bool
    {
        auto out = archive_.insert({ u, v }, t);
        value_ = evaluate_incremental(value_, out, archive_);
        return out.accepted;
    }

    [[nodiscard]] auto indicator() const -> std::pair<double, std::string>
    {
        return { value_.value, std::string(to_string(value_.branch)) };
    }

    Archive archive_;
    IndicatorValue value_ { empty_indicator() };
};

auto as_tuples(std::vector<NormalizedObjectives> const& pts) -> std::vector<std::pair<double, double>>
{
    std::vector<std::pair<double, double>> out;
    out.reserve(pts.size());
    for (auto const& p : pts) {
        out.emplace_back(p.u, p.v);
    }
    return out;
}

auto hits_of(RuntimeRecord const& r) -> std::vector<std::optional<std::int64_t>>
{
    return { r.first_hits().begin(), r.first_hits().end() };
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "hypervolume-based performance assessment for bi-objective optimizers";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<VersionError>(m, "VersionError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_RuntimeError);

    py::class_<Tracker>(m, "Archive")
        .def(py::init<>())
        .def("insert", &Tracker::add, py::arg("u"), py::arg("v"), py::arg("eval_index"),
             "insert a normalized point; True if it entered the archive")
        .def_property_readonly("hypervolume", [](Tracker const& t) { return t.archive_.hypervolume(); })
        .def_property_readonly("indicator", &Tracker::indicator)
        .def_property_readonly("points", [](Tracker const& t) { return as_tuples(t.archive_.points()); })
        .def("__len__", [](Tracker const& t) { return t.archive_.size(); });

    m.def("precision_grid", [] {
        auto const& g = precision_grid();
        return std::vector<double>(g.begin(), g.end());
    });

    m.def("evaluate_problem", [](std::string const& problem, std::vector<double> const& x) {
        auto y = SuiteFunction(parse_problem_id(problem)).evaluate(x);
        return std::make_pair(y.f_alpha, y.f_beta);
    }, py::arg("problem"), py::arg("x"));

    m.def("ecdf", [](std::vector<std::vector<std::optional<std::int64_t>>> const& hits,
                     std::vector<std::int64_t> const& evaluations) {
        // first_hits[i][k] is run i's first hit of target k, targets ordered
        // from easiest to hardest
        if (hits.size() != evaluations.size()) {
            throw UsageError("hits and evaluations differ in length");
        }
        std::vector<RuntimeRecord> recs;
        for (std::size_t i = 0; i < hits.size(); ++i) {
            std::vector<double> targets(hits[i].size());
            for (std::size_t k = 0; k < targets.size(); ++k) {
                targets[k] = -static_cast<double>(k);
            }
            RuntimeRecord r(targets);
            std::vector<std::pair<std::int64_t, std::size_t>> order;
            for (std::size_t k = 0; k < hits[i].size(); ++k) {
                if (hits[i][k]) {
                    order.emplace_back(*hits[i][k], k);
                }
            }
            std::sort(order.begin(), order.end());
            // replay as a trajectory that reaches each target at its hit time
            std::size_t j = 0;
            while (j < order.size()) {
                auto t = order[j].first;
                std::size_t deepest = 0;
                for (; j < order.size() && order[j].first == t; ++j) {
                    deepest = std::max(deepest, order[j].second);
                }
                r.record(t, { -static_cast<double>(deepest), Branch::Distance });
            }
            r.set_evaluations(evaluations[i]);
            if (hits_of(r) != hits[i]) {
                throw UsageError("run " + std::to_string(i) + ": harder targets must not be hit before easier ones");
            }
            recs.push_back(std::move(r));
        }
        auto c = ecdf(recs);
        return py::dict(py::arg("support") = c.support, py::arg("proportion") = c.proportion,
                        py::arg("n_hit") = c.n_hit, py::arg("n_total") = c.n_total);
    }, py::arg("first_hits"), py::arg("evaluations"));

    m.def("bootstrap_refsets", [](std::vector<std::string> functions, std::vector<int> dims,
                                  std::vector<int> instances, std::filesystem::path out, std::int64_t budget,
                                  std::uint32_t seed) {
        BootstrapConfig cfg { std::move(functions), std::move(dims), std::move(instances), std::move(out), seed,
                              budget, 1 };
        py::list result;
        for (auto const& f : bootstrap_refsets(cfg)) {
            result.append(py::dict(py::arg("problem") = f.spec.key.id(), py::arg("version") = f.set.version,
                                   py::arg("i_ref") = f.spec.i_ref, py::arg("points") = f.set.points.size()));
        }
        return result;
    }, py::arg("functions"), py::arg("dims"), py::arg("instances"), py::arg("out"), py::arg("budget") = 100000,
       py::arg("seed") = 1);

    m.def("run", [](std::vector<std::string> functions, std::vector<int> dims, std::vector<int> instances,
                    std::string algorithm, std::optional<std::int64_t> budget, std::filesystem::path out,
                    std::optional<std::filesystem::path> refsets, std::uint32_t seed, unsigned threads) {
        ExperimentConfig cfg;
        cfg.functions = std::move(functions);
        cfg.dimensions = std::move(dims);
        cfg.instances = std::move(instances);
        cfg.algorithm = std::move(algorithm);
        cfg.budget = budget;
        cfg.out = std::move(out);
        cfg.refsets = std::move(refsets);
        cfg.seed = seed;
        cfg.threads = threads;
        ExperimentResult res;
        {
            py::gil_scoped_release release;
            res = run_experiment(cfg);
        }
        py::list runs;
        for (auto const& r : res.runs) {
            runs.append(py::dict(py::arg("problem") = r.key.id(), py::arg("log") = r.log,
                                 py::arg("evaluations") = r.runtimes.evaluations(),
                                 py::arg("first_hits") = hits_of(r.runtimes),
                                 py::arg("refset_version") = r.refset_version));
        }
        return runs;
    }, py::arg("functions"), py::arg("dims"), py::arg("instances"), py::arg("algorithm") = "random",
       py::arg("budget") = py::none(), py::arg("out"), py::arg("refsets") = py::none(), py::arg("seed") = 1,
       py::arg("threads") = 1);

    m.def("recalc", [](std::filesystem::path logs, std::filesystem::path refsets, std::filesystem::path out) {
        std::size_t n = 0;
        for (auto const& e : recalc_experiment({ std::move(logs), std::move(refsets), std::move(out) })) {
            n += e.runs.size();
        }
        return n;
    }, py::arg("logs"), py::arg("refsets"), py::arg("out"));

    m.def("postprocess", [](std::filesystem::path logs, std::filesystem::path out) {
        PostprocessConfig cfg;
        cfg.logs = std::move(logs);
        cfg.out = std::move(out);
        return postprocess(cfg);
    }, py::arg("logs"), py::arg("out"));
}
