// Time-series semantics: signatures, maximal pattern occurrences, feature
// values, and the per-window brute-force oracle the linear checker is
// validated against.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slidets/patterns.hpp"

namespace slidets {

// Values x_1..x_n, stored 0-based; every index in this API is 1-based to
// match the window notation [i, j] used throughout.
using Series = std::vector<std::int64_t>;

// Parses whitespace- or comma-separated integers; '#' starts a comment
// running to the end of its line.  Errors on garbage or an empty series.
Series parse_series(std::string_view text);
Series read_series_file(const std::string& path);

// The n-1 comparison letters between consecutive values.  Errors when n < 2.
Word signature(const Series& x);

// One maximal pattern occurrence inside a (sub)series.  The signature factor
// spans letters lo..hi-1; feature values are computed over the trimmed range.
struct Occurrence {
  int lo = 0;       // extent start (series position)
  int hi = 0;       // extent end
  int trim_lo = 0;  // lo + pattern.before
  int trim_hi = 0;  // hi - pattern.after
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// All maximal occurrences of the pattern inside x_lo..x_hi, sorted by start.
// Maximality is relative to the subsequence: a factor of the windowed
// signature counts when no strictly containing in-language factor of that
// same windowed signature exists.
std::vector<Occurrence> maximal_occurrences(const Pattern& p, const Series& x,
                                            int lo, int hi);
// Same, with a prebuilt table for the pattern's language (for hot loops).
std::vector<Occurrence> maximal_occurrences(const DfaTable& dfa, int before,
                                            int after, const Series& x,
                                            int lo, int hi);

enum class Feature { One, Width, Surf, Max, Min };

inline constexpr Feature kFeatures[] = {Feature::One, Feature::Width,
                                        Feature::Surf, Feature::Max,
                                        Feature::Min};

const char* feature_name(Feature f);
std::optional<Feature> parse_feature(std::string_view name);

// How a feature behaves when an occurrence is cut at a window border.
struct FeatureFlags {
  bool sum_decomposition = false;  // whole = left part + right part
  bool same_value = false;         // any part has the whole's value
  bool single_position = false;    // value read off a single position
  bool positive = false;           // value >= 1 on every occurrence
};
FeatureFlags feature_flags(Feature f);

std::int64_t feature_value(Feature f, const Occurrence& occ, const Series& x);

// Sum of feature values over all maximal occurrences in the window [lo, hi];
// 0 when the window has none.
std::int64_t window_oracle(Feature f, const Pattern& p, const Series& x,
                           int lo, int hi);
std::int64_t window_oracle(Feature f, const DfaTable& dfa, int before,
                           int after, const Series& x, int lo, int hi);

// Pattern-feature pair properties: whether the feature value of any
// occurrence is pinned to a trimmed-border position (inflexion-free
// patterns), or to the unique inflexion (one-inflexion patterns).  Defined
// for the sixteen classified catalogue patterns; errors otherwise.
struct PairFlags {
  bool single_position_inflexion_free = false;
  bool single_position_one_inflexion = false;
};
PairFlags feature_pattern_flags(Feature f, const Pattern& p);

// The mirrored pattern: reversed language with '<'/'>' exchanged and the two
// trims swapped.  Scanning it over a reversed series reproduces the original
// pattern's occurrences in mirror image.
Pattern mirror_pattern(const Pattern& p);

}  // namespace slidets
