#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hvperf/core.hpp"

namespace hvperf {

/// Non-dominated set of raw objective vectors approximating the Pareto front
/// of one problem instance, with the indicator value it attains.
struct ReferenceSet {
    ProblemKey key;
    std::vector<ObjectiveVector> points; // canonical order: by f_alpha, then f_beta
    std::string version;
    double i_ref { 0.0 };
};

/// Non-dominated filter in canonical order, exact duplicates collapsed.
[[nodiscard]] auto nondominated_filter(std::span<ObjectiveVector const> points) -> std::vector<ObjectiveVector>;

/// Merges solution sets into a reference set for `bounds.key`, computing
/// i_ref under the ideal/nadir of `bounds`. The result does not depend on
/// the order of the inputs. Throws DomainError if all inputs are empty.
[[nodiscard]] auto merge(std::span<std::vector<ObjectiveVector> const> sets, ProblemSpec const& bounds) -> ReferenceSet;

/// Negative hypervolume of the normalized points, clipped at the nadir as in
/// the archive.
[[nodiscard]] auto compute_i_ref(std::span<ObjectiveVector const> points, ProblemSpec const& p) -> double;

/// Content hash over the canonical 17-digit serialization of the points.
[[nodiscard]] auto version_of(std::span<ObjectiveVector const> points) -> std::string;

/// Ideal and nadir estimated as the extreme points of a non-dominated set,
/// flagged approximate. Throws DomainError when the set does not span a
/// non-degenerate box (fewer than two distinct points).
[[nodiscard]] auto estimate_bounds(ProblemKey const& key, std::span<ObjectiveVector const> points) -> ProblemSpec;

/// Problem specification (bounds plus i_ref and version) that goes with `rs`.
[[nodiscard]] auto spec_for(ReferenceSet const& rs, ProblemSpec const& bounds) -> ProblemSpec;

struct RefsetFile {
    ReferenceSet set;
    ProblemSpec spec;
};

/// "<dir>/<function>_d<dim>_i<inst>.tsv"
[[nodiscard]] auto refset_path(std::filesystem::path const& dir, ProblemKey const& key) -> std::filesystem::path;

void write_refset(std::filesystem::path const& path, RefsetFile const& file);

/// Throws ParseError on malformed content and VersionError when the stored
/// version or i_ref disagrees with the points.
[[nodiscard]] auto read_refset(std::filesystem::path const& path) -> RefsetFile;

} // namespace hvperf
