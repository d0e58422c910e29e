#include "hvperf/refset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "hvperf/archive.hpp"
#include "hvperf/text.hpp"

namespace hvperf {

namespace {

auto canonical_less(ObjectiveVector const& a, ObjectiveVector const& b) -> bool
{
    return a.f_alpha < b.f_alpha || (a.f_alpha == b.f_alpha && a.f_beta < b.f_beta);
}

auto parse_header(std::string_view line, std::map<std::string, std::string, std::less<>>& kv)
{
    line.remove_prefix(1);
    for (auto field : text::split(text::trim(line), ' ')) {
        auto eq = field.find('=');
        if (eq == std::string_view::npos) {
            continue;
        }
        kv.emplace(std::string(field.substr(0, eq)), std::string(field.substr(eq + 1)));
    }
}

} // namespace

auto nondominated_filter(std::span<ObjectiveVector const> points) -> std::vector<ObjectiveVector>
{
    std::vector<ObjectiveVector> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    std::vector<ObjectiveVector> out;
    for (auto const& p : sorted) {
        // sorted by f_alpha, so p is non-dominated iff its f_beta beats every
        // point kept so far
        if (out.empty() || p.f_beta < out.back().f_beta) {
            out.push_back(p);
        }
    }
    return out;
}

auto merge(std::span<std::vector<ObjectiveVector> const> sets, ProblemSpec const& bounds) -> ReferenceSet
{
    std::vector<ObjectiveVector> all;
    for (auto const& s : sets) {
        for (auto const& p : s) {
            if (!is_finite(p)) {
                throw DomainError("refset merge: non-finite objective vector");
            }
            all.push_back(p);
        }
    }
    if (all.empty()) {
        throw DomainError("refset merge: all input sets are empty");
    }
    ReferenceSet rs;
    rs.key = bounds.key;
    rs.points = nondominated_filter(all);
    rs.version = version_of(rs.points);
    rs.i_ref = compute_i_ref(rs.points, bounds);
    return rs;
}

auto compute_i_ref(std::span<ObjectiveVector const> points, ProblemSpec const& p) -> double
{
    std::vector<NormalizedObjectives> normalized;
    normalized.reserve(points.size());
    for (auto const& y : points) {
        normalized.push_back(normalize(y, p));
    }
    double hv = recompute_from_scratch(normalized).hypervolume;
    return hv == 0.0 ? 0.0 : -hv;
}

auto version_of(std::span<ObjectiveVector const> points) -> std::string
{
    std::vector<ObjectiveVector> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    std::string canon;
    for (auto const& p : sorted) {
        canon += text::format_real(p.f_alpha);
        canon += '\t';
        canon += text::format_real(p.f_beta);
        canon += '\n';
    }
    return text::fnv1a_hex(canon);
}

auto estimate_bounds(ProblemKey const& key, std::span<ObjectiveVector const> points) -> ProblemSpec
{
    if (points.empty()) {
        throw DomainError("estimate_bounds: empty point set for " + key.id());
    }
    ProblemSpec spec;
    spec.key = key;
    spec.ideal = points.front();
    spec.nadir = points.front();
    for (auto const& p : points) {
        spec.ideal.f_alpha = std::min(spec.ideal.f_alpha, p.f_alpha);
        spec.ideal.f_beta = std::min(spec.ideal.f_beta, p.f_beta);
        spec.nadir.f_alpha = std::max(spec.nadir.f_alpha, p.f_alpha);
        spec.nadir.f_beta = std::max(spec.nadir.f_beta, p.f_beta);
    }
    spec.approximate_bounds = true;
    if (!(spec.ideal.f_alpha < spec.nadir.f_alpha) || !(spec.ideal.f_beta < spec.nadir.f_beta)) {
        throw DomainError("estimate_bounds: reference set of " + key.id() + " spans a degenerate box");
    }
    return spec;
}

auto spec_for(ReferenceSet const& rs, ProblemSpec const& bounds) -> ProblemSpec
{
    ProblemSpec spec = bounds;
    spec.key = rs.key;
    spec.i_ref = rs.i_ref;
    spec.refset_version = rs.version;
    return spec;
}

auto refset_path(std::filesystem::path const& dir, ProblemKey const& key) -> std::filesystem::path
{
    return dir / (key.file_stem() + ".tsv");
}

void write_refset(std::filesystem::path const& path, RefsetFile const& file)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write reference set " + path.string());
    }
    auto const& rs = file.set;
    auto const& sp = file.spec;
    out << "# function=" << rs.key.function_id << " instance=" << rs.key.instance_id
        << " dimension=" << rs.key.dimension << " version=" << rs.version
        << " i_ref=" << text::format_real(rs.i_ref) << '\n';
    out << "# ideal_alpha=" << text::format_real(sp.ideal.f_alpha)
        << " ideal_beta=" << text::format_real(sp.ideal.f_beta)
        << " nadir_alpha=" << text::format_real(sp.nadir.f_alpha)
        << " nadir_beta=" << text::format_real(sp.nadir.f_beta)
        << " bounds=" << (sp.approximate_bounds ? "estimated" : "analytic") << '\n';
    out << "# hypervolume clipped at the nadir point\n";
    for (auto const& p : rs.points) {
        out << text::format_real(p.f_alpha) << '\t' << text::format_real(p.f_beta) << '\n';
    }
    if (!out) {
        throw std::runtime_error("error writing reference set " + path.string());
    }
}

auto read_refset(std::filesystem::path const& path) -> RefsetFile
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read reference set " + path.string());
    }
    std::map<std::string, std::string, std::less<>> kv;
    RefsetFile file;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (text::trim(line).empty()) {
            continue;
        }
        if (line.front() == '#') {
            parse_header(line, kv);
            continue;
        }
        auto cols = text::split(line, '\t');
        auto fa = cols.size() == 2 ? text::parse_real(cols[0]) : std::nullopt;
        auto fb = cols.size() == 2 ? text::parse_real(cols[1]) : std::nullopt;
        if (!fa || !fb) {
            throw ParseError("malformed point in " + path.string(), lineno);
        }
        file.set.points.push_back({ *fa, *fb });
    }

    auto need = [&](std::string_view key) -> std::string const& {
        auto it = kv.find(key);
        if (it == kv.end()) {
            throw ParseError("missing header key '" + std::string(key) + "' in " + path.string(), 1);
        }
        return it->second;
    };
    auto need_real = [&](std::string_view key) {
        auto x = text::parse_real(need(key));
        if (!x) {
            throw ParseError("bad value for '" + std::string(key) + "' in " + path.string(), 1);
        }
        return *x;
    };
    auto need_int = [&](std::string_view key) {
        auto x = text::parse_int(need(key));
        if (!x) {
            throw ParseError("bad value for '" + std::string(key) + "' in " + path.string(), 1);
        }
        return static_cast<int>(*x);
    };

    auto& rs = file.set;
    rs.key = { need("function"), need_int("instance"), need_int("dimension") };
    rs.version = need("version");
    rs.i_ref = need_real("i_ref");
    auto& sp = file.spec;
    sp.key = rs.key;
    sp.ideal = { need_real("ideal_alpha"), need_real("ideal_beta") };
    sp.nadir = { need_real("nadir_alpha"), need_real("nadir_beta") };
    sp.approximate_bounds = need("bounds") == "estimated";
    sp.i_ref = rs.i_ref;
    sp.refset_version = rs.version;
    sp.validate();

    if (version_of(rs.points) != rs.version) {
        throw VersionError("reference set " + path.string() + ": stored version " + rs.version
                           + " does not match its points");
    }
    if (compute_i_ref(rs.points, sp) != rs.i_ref) {
        throw VersionError("reference set " + path.string() + ": stored i_ref does not match its points");
    }
    return file;
}

} // namespace hvperf
