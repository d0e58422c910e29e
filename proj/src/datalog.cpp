#include "hvperf/datalog.hpp"

#include <map>
#include <sstream>

#include "hvperf/archive.hpp"
#include "hvperf/text.hpp"

namespace hvperf {

namespace {

constexpr std::string_view kMagic = "% hvperf-runlog";
constexpr std::string_view kIndexMagic = "% hvperf-experiment-index";

auto open_for_write(std::filesystem::path const& path) -> std::ofstream
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

void write_header(std::ostream& out, RunHeader const& h)
{
    out << kMagic << " version=" << kRunLogFormatVersion << '\n';
    out << "% function=" << h.key.function_id << '\n';
    out << "% instance=" << h.key.instance_id << '\n';
    out << "% dimension=" << h.key.dimension << '\n';
    out << "% algorithm=" << h.algorithm << '\n';
    out << "% refset_version=" << h.refset_version << '\n';
    out << "% i_ref=" << text::format_real(h.i_ref) << '\n';
    out << "% ideal_alpha=" << text::format_real(h.ideal.f_alpha) << '\n';
    out << "% ideal_beta=" << text::format_real(h.ideal.f_beta) << '\n';
    out << "% nadir_alpha=" << text::format_real(h.nadir.f_alpha) << '\n';
    out << "% nadir_beta=" << text::format_real(h.nadir.f_beta) << '\n';
}

void write_record(std::ostream& out, LogRecord const& r)
{
    out << r.eval << '\t' << text::format_real(r.y.f_alpha) << '\t' << text::format_real(r.y.f_beta);
    for (double xi : r.x) {
        out << '\t' << text::format_real(xi);
    }
    out << '\n';
}

} // namespace

auto make_header(ProblemSpec const& spec, std::string algorithm) -> RunHeader
{
    return { spec.key, std::move(algorithm), spec.refset_version, spec.i_ref, spec.ideal, spec.nadir };
}

auto spec_of(RunHeader const& header) -> ProblemSpec
{
    ProblemSpec spec;
    spec.key = header.key;
    spec.ideal = header.ideal;
    spec.nadir = header.nadir;
    spec.i_ref = header.i_ref;
    spec.refset_version = header.refset_version;
    return spec;
}

LogWriter::LogWriter(std::filesystem::path path, RunHeader const& header)
    : path_(std::move(path))
    , out_(open_for_write(path_))
{
    write_header(out_, header);
}

void LogWriter::append(LogRecord const& record)
{
    if (record.eval <= last_eval_) {
        throw UsageError("log writer: evaluation counts must strictly increase");
    }
    last_eval_ = record.eval;
    write_record(out_, record);
}

void LogWriter::finish(std::int64_t evaluations)
{
    out_ << "% evaluations=" << evaluations << '\n';
    out_.flush();
    if (!out_) {
        throw std::runtime_error("error writing " + path_.string());
    }
    out_.close();
}

void write_log(std::filesystem::path const& path, RunLog const& log)
{
    LogWriter writer(path, log.header);
    for (auto const& r : log.records) {
        writer.append(r);
    }
    if (log.evaluations) {
        writer.finish(*log.evaluations);
    }
}

auto read_log(std::filesystem::path const& path) -> RunLog
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read run log " + path.string());
    }
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line) || !line.starts_with(kMagic)) {
        throw ParseError(path.string() + " is not a run log", lineno);
    }
    auto version = text::trim(std::string_view(line).substr(kMagic.size()));
    if (version != "version=" + std::to_string(kRunLogFormatVersion)) {
        throw VersionError(path.string() + ": unsupported run log format '" + std::string(version) + "'");
    }

    RunLog log;
    std::map<std::string, std::string, std::less<>> kv;
    bool in_records = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        if (text::trim(sv).empty()) {
            continue;
        }
        if (sv.front() == '%') {
            auto body = text::trim(sv.substr(1));
            auto eq = body.find('=');
            if (eq == std::string_view::npos) {
                continue;
            }
            auto key = std::string(body.substr(0, eq));
            auto value = std::string(body.substr(eq + 1));
            if (key == "evaluations") {
                auto n = text::parse_int(value);
                if (!n) {
                    throw ParseError("bad evaluations count", lineno);
                }
                log.evaluations = *n;
            } else if (in_records) {
                throw ParseError("header line after records", lineno);
            } else {
                kv[key] = value;
            }
            continue;
        }
        if (log.evaluations) {
            throw ParseError("record after closing evaluations line", lineno);
        }
        in_records = true;
        auto cols = text::split(sv, '\t');
        if (cols.size() < 3) {
            throw ParseError("record has fewer than 3 columns", lineno);
        }
        LogRecord r;
        auto eval = text::parse_int(cols[0]);
        auto fa = text::parse_real(cols[1]);
        auto fb = text::parse_real(cols[2]);
        if (!eval || !fa || !fb) {
            throw ParseError("malformed record", lineno);
        }
        r.eval = *eval;
        r.y = { *fa, *fb };
        for (std::size_t i = 3; i < cols.size(); ++i) {
            auto xi = text::parse_real(cols[i]);
            if (!xi) {
                throw ParseError("malformed decision variable", lineno);
            }
            r.x.push_back(*xi);
        }
        if (!log.records.empty() && r.eval <= log.records.back().eval) {
            throw ParseError("evaluation counts not strictly increasing", lineno);
        }
        log.records.push_back(std::move(r));
    }

    auto need = [&](std::string_view key) -> std::string const& {
        auto it = kv.find(key);
        if (it == kv.end()) {
            throw ParseError(path.string() + ": missing header key '" + std::string(key) + "'", 1);
        }
        return it->second;
    };
    auto need_real = [&](std::string_view key) {
        auto x = text::parse_real(need(key));
        if (!x) {
            throw ParseError(path.string() + ": bad value for '" + std::string(key) + "'", 1);
        }
        return *x;
    };
    auto need_int = [&](std::string_view key) {
        auto x = text::parse_int(need(key));
        if (!x) {
            throw ParseError(path.string() + ": bad value for '" + std::string(key) + "'", 1);
        }
        return static_cast<int>(*x);
    };
    auto& h = log.header;
    h.key = { need("function"), need_int("instance"), need_int("dimension") };
    h.algorithm = need("algorithm");
    h.refset_version = need("refset_version");
    h.i_ref = need_real("i_ref");
    h.ideal = { need_real("ideal_alpha"), need_real("ideal_beta") };
    h.nadir = { need_real("nadir_alpha"), need_real("nadir_beta") };
    return log;
}

auto run_log_path(std::filesystem::path const& out, std::string const& algorithm, ProblemKey const& key)
    -> std::filesystem::path
{
    return out / algorithm / (key.file_stem() + ".tsv");
}

auto recalculate(RunLog const& log, ProblemSpec const& spec) -> Recalculation
{
    spec.validate();
    Recalculation result;
    result.runtimes = RuntimeRecord(absolute_targets(spec, precision_grid()));
    Archive arch;
    auto indicator = empty_indicator();
    for (auto const& r : log.records) {
        auto y = normalize(r.y, spec);
        if (!is_finite(y)) {
            throw DomainError("record at evaluation " + std::to_string(r.eval) + " is not finite after normalization");
        }
        auto outcome = arch.insert(y, r.eval);
        if (!outcome.accepted) {
            throw DomainError("corrupt log: record at evaluation " + std::to_string(r.eval)
                              + " was rejected on replay");
        }
        indicator = evaluate_incremental(indicator, outcome, arch);
        result.trajectory.push_back({ r.eval, indicator });
        result.runtimes.record(r.eval, indicator);
    }
    if (log.evaluations) {
        result.runtimes.set_evaluations(*log.evaluations);
    }
    return result;
}

auto index_path(std::filesystem::path const& out, std::string const& algorithm) -> std::filesystem::path
{
    return out / algorithm / "experiment_index.tsv";
}

void write_index(std::filesystem::path const& path, std::vector<IndexEntry> const& entries)
{
    auto out = open_for_write(path);
    out << kIndexMagic << " version=" << kRunLogFormatVersion << '\n';
    out << "file\tfunction\tdimension\tinstance\talgorithm\trefset_version\tevaluations\n";
    for (auto const& e : entries) {
        out << e.file << '\t' << e.key.function_id << '\t' << e.key.dimension << '\t' << e.key.instance_id << '\t'
            << e.algorithm << '\t' << e.refset_version << '\t' << e.evaluations << '\n';
    }
    if (!out) {
        throw std::runtime_error("error writing " + path.string());
    }
}

auto read_index(std::filesystem::path const& path) -> std::vector<IndexEntry>
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read experiment index " + path.string());
    }
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line) || !line.starts_with(kIndexMagic)) {
        throw ParseError(path.string() + " is not an experiment index", lineno);
    }
    std::vector<IndexEntry> entries;
    bool saw_columns = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (text::trim(line).empty()) {
            continue;
        }
        if (!saw_columns) {
            saw_columns = true;
            continue;
        }
        auto cols = text::split(line, '\t');
        if (cols.size() != 7) {
            throw ParseError("index row must have 7 columns", lineno);
        }
        auto dim = text::parse_int(cols[2]);
        auto inst = text::parse_int(cols[3]);
        auto evals = text::parse_int(cols[6]);
        if (!dim || !inst || !evals) {
            throw ParseError("malformed index row", lineno);
        }
        entries.push_back({ std::string(cols[0]), { std::string(cols[1]), static_cast<int>(*inst), static_cast<int>(*dim) },
                            std::string(cols[4]), std::string(cols[5]), *evals });
    }
    return entries;
}

void write_runtimes(std::filesystem::path const& path, std::vector<std::pair<ProblemKey, RuntimeRecord>> const& records)
{
    auto out = open_for_write(path);
    out << "% first-hit evaluations per target precision, '-' = missed\n";
    out << "function\tdimension\tinstance\tevaluations";
    for (double p : precision_grid()) {
        out << '\t' << text::format_real(p);
    }
    out << '\n';
    for (auto const& [key, rec] : records) {
        out << key.function_id << '\t' << key.dimension << '\t' << key.instance_id << '\t' << rec.evaluations();
        for (auto const& h : rec.first_hits()) {
            out << '\t';
            if (h) {
                out << *h;
            } else {
                out << '-';
            }
        }
        out << '\n';
    }
}

} // namespace hvperf
