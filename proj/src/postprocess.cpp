#include "hvperf/postprocess.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "hvperf/datalog.hpp"
#include "hvperf/runner.hpp"
#include "hvperf/text.hpp"

namespace hvperf {

namespace {

auto open_csv(std::filesystem::path const& path) -> std::ofstream
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

auto runtimes_of(std::vector<LabeledRecord const*> const& records) -> std::vector<RuntimeRecord>
{
    std::vector<RuntimeRecord> out;
    out.reserve(records.size());
    for (auto const* r : records) {
        out.push_back(r->runtimes);
    }
    return out;
}

} // namespace

auto ecdf(std::span<RuntimeRecord const> records, std::optional<std::vector<std::int64_t>> budgets) -> EcdfCurve
{
    if (records.empty()) {
        throw DomainError("ecdf: no runtime records");
    }
    EcdfCurve curve;
    std::vector<std::int64_t> hits;
    std::int64_t max_budget = 0;
    for (auto const& rec : records) {
        curve.n_total += rec.targets().size();
        max_budget = std::max(max_budget, rec.evaluations());
        for (auto const& h : rec.first_hits()) {
            if (h) {
                hits.push_back(*h);
            }
        }
    }
    if (curve.n_total == 0) {
        throw DomainError("ecdf: records carry no targets");
    }
    std::sort(hits.begin(), hits.end());

    if (budgets) {
        curve.support = *budgets;
        std::sort(curve.support.begin(), curve.support.end());
    } else {
        curve.support = hits;
        curve.support.push_back(max_budget);
        std::sort(curve.support.begin(), curve.support.end());
    }
    curve.support.erase(std::unique(curve.support.begin(), curve.support.end()), curve.support.end());

    for (auto t : curve.support) {
        auto n = static_cast<std::size_t>(std::upper_bound(hits.begin(), hits.end(), t) - hits.begin());
        curve.n_hit.push_back(n);
        curve.proportion.push_back(static_cast<double>(n) / static_cast<double>(curve.n_total));
    }
    return curve;
}

auto RuntimeCell::text() const -> std::string
{
    return first_hit ? std::to_string(*first_hit) : std::string("—");
}

auto runtime_table(std::span<LabeledRecord const> records, std::span<double const> precisions,
                   std::size_t instances_display) -> std::vector<RuntimeTableBlock>
{
    std::vector<std::size_t> columns;
    for (double p : precisions) {
        auto idx = find_precision(p);
        if (!idx) {
            throw UsageError("precision " + text::format_real(p) + " is not one of the 58 target precisions");
        }
        columns.push_back(*idx);
    }

    using BlockKey = std::tuple<std::string, std::string, int>;
    std::map<BlockKey, std::map<int, LabeledRecord const*>> blocks;
    for (auto const& r : records) {
        if (r.runtimes.targets().size() != kPrecisionCount) {
            throw UsageError("runtime table needs records over the full precision grid");
        }
        blocks[{ r.algorithm, r.key.function_id, r.key.dimension }][r.key.instance_id] = &r;
    }

    std::vector<RuntimeTableBlock> out;
    for (auto const& [bk, by_instance] : blocks) {
        RuntimeTableBlock block;
        block.algorithm = std::get<0>(bk);
        block.function_id = std::get<1>(bk);
        block.dimension = std::get<2>(bk);
        for (auto const& [inst, rec] : by_instance) {
            if (block.displayed_instances.size() < instances_display) {
                block.displayed_instances.push_back(inst);
            }
        }
        for (std::size_t k = 0; k < columns.size(); ++k) {
            RuntimeRow row;
            row.precision = precisions[k];
            row.n_instances = by_instance.size();
            for (auto const& [inst, rec] : by_instance) {
                if (rec->runtimes.first_hits()[columns[k]]) {
                    ++row.n_hit;
                }
            }
            for (int inst : block.displayed_instances) {
                auto const& rt = by_instance.at(inst)->runtimes;
                row.cells.push_back({ rt.first_hits()[columns[k]], rt.evaluations() });
            }
            block.rows.push_back(std::move(row));
        }
        out.push_back(std::move(block));
    }
    return out;
}

auto load_experiment(std::filesystem::path const& logs) -> std::vector<LabeledRecord>
{
    std::vector<LabeledRecord> out;
    for (auto const& algorithm : find_algorithms(logs)) {
        for (auto const& entry : read_index(index_path(logs, algorithm))) {
            auto log = read_log(logs / algorithm / entry.file);
            auto recalc = recalculate(log, spec_of(log.header));
            out.push_back({ log.header.key, log.header.algorithm, log.header.refset_version, std::move(recalc.runtimes) });
        }
    }
    return out;
}

auto combined_refset_version(std::span<LabeledRecord const> records) -> std::string
{
    std::set<std::string> lines;
    for (auto const& r : records) {
        lines.insert(r.key.id() + "=" + r.refset_version);
    }
    std::string canon;
    for (auto const& l : lines) {
        canon += l;
        canon += '\n';
    }
    return text::fnv1a_hex(canon);
}

void write_ecdf_csv(std::filesystem::path const& path, EcdfCurve const& curve, std::string const& algorithm,
                    std::string const& slice, std::optional<int> dimension, std::string const& refset_version)
{
    auto out = open_csv(path);
    out << "# algorithm=" << algorithm << " slice=" << slice << " refset_version=" << refset_version << '\n';
    out << "budget,budget_per_dim,proportion,n_hit,n_total\n";
    for (std::size_t i = 0; i < curve.support.size(); ++i) {
        out << curve.support[i] << ',';
        if (dimension) {
            out << text::format_real(static_cast<double>(curve.support[i]) / *dimension);
        }
        out << ',' << text::format_real(curve.proportion[i]) << ',' << curve.n_hit[i] << ',' << curve.n_total << '\n';
    }
}

auto write_postprocess(std::span<LabeledRecord const> records, PostprocessConfig const& cfg)
    -> std::vector<std::filesystem::path>
{
    if (records.empty()) {
        throw DomainError("postprocess: no runs found");
    }
    auto blocks = runtime_table(records, cfg.precisions, cfg.instances_display);

    std::map<std::string, std::map<int, std::vector<LabeledRecord const*>>> slices;
    for (auto const& r : records) {
        slices[r.algorithm][r.key.dimension].push_back(&r);
    }

    std::vector<std::filesystem::path> written;
    for (auto const& [algorithm, by_dim] : slices) {
        std::vector<LabeledRecord> all;
        for (auto const& [dim, recs] : by_dim) {
            std::vector<LabeledRecord> slice;
            for (auto const* r : recs) {
                slice.push_back(*r);
                all.push_back(*r);
            }
            auto path = cfg.out / ("ecdf_" + algorithm + "_d" + std::to_string(dim) + ".csv");
            write_ecdf_csv(path, ecdf(runtimes_of(recs)), algorithm, "d" + std::to_string(dim), dim,
                           combined_refset_version(slice));
            written.push_back(path);
        }
        std::vector<LabeledRecord const*> all_ptrs;
        for (auto const& r : all) {
            all_ptrs.push_back(&r);
        }
        auto path = cfg.out / ("ecdf_" + algorithm + "_all.csv");
        write_ecdf_csv(path, ecdf(runtimes_of(all_ptrs)), algorithm, "all",
                       by_dim.size() == 1 ? std::optional<int>(by_dim.begin()->first) : std::nullopt,
                       combined_refset_version(all));
        written.push_back(path);

        auto table_path = cfg.out / ("runtime_table_" + algorithm + ".csv");
        auto out = open_csv(table_path);
        out << "# algorithm=" << algorithm << " refset_version=" << combined_refset_version(all)
            << " missed targets shown as — with the evaluations spent in the evaluations row\n";
        for (auto const& block : blocks) {
            if (block.algorithm != algorithm) {
                continue;
            }
            out << "function,dimension,precision,n_hit,n_instances";
            for (int inst : block.displayed_instances) {
                out << ",i" << inst;
            }
            out << '\n';
            for (auto const& row : block.rows) {
                out << block.function_id << ',' << block.dimension << ',' << text::format_real(row.precision) << ','
                    << row.n_hit << ',' << row.n_instances;
                for (auto const& cell : row.cells) {
                    out << ',' << cell.text();
                }
                out << '\n';
            }
            out << block.function_id << ',' << block.dimension << ",evaluations,,";
            if (!block.rows.empty()) {
                for (auto const& cell : block.rows.front().cells) {
                    out << ',' << cell.evaluations;
                }
            }
            out << '\n';
        }
        written.push_back(table_path);
    }
    return written;
}

auto postprocess(PostprocessConfig const& cfg) -> std::vector<std::filesystem::path>
{
    auto records = load_experiment(cfg.logs);
    return write_postprocess(records, cfg);
}

} // namespace hvperf
