// Linear-time sliding-window checking: equation selection over the
// constraint catalogue, prefix/suffix feature profiles, constant-time
// occurrence-presence indices, and replay of the published evaluation corpus.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slidets/series.hpp"

namespace slidets {

// The three per-window contribution formulas, plus an explicit fallback to
// the quadratic window oracle for pairs no formula is valid for.
enum class EquationKind { Plain, Clamp, Guard, NoneFallback };

const char* equation_name(EquationKind e);
std::optional<EquationKind> parse_equation(std::string_view name);

// A named sliding-sum constraint, e.g. "sum_width_gorge".
struct Constraint {
  Feature feature = Feature::One;
  const Pattern* pattern = nullptr;
};

// Accepts nb_<p>, sum_width_<p>, sum_surf_<p>, sum_max_<p>, sum_min_<p> and
// sum_height_<p> with the per-prefix pattern sets of the catalogue; the
// pattern part may use aliases.  Height patterns have a single trimmed
// value, so sum_height parses as MIN (identical to MAX for those patterns).
std::optional<Constraint> parse_constraint(std::string_view name);

// All catalogued constraint names, sorted.
const std::vector<std::string>& constraint_catalog();

// Whether the feature-pattern pair belongs to the constraint catalogue.
bool in_catalog(Feature f, const Pattern& p);

// The strongest valid equation for a catalogued pair, preferring
// Plain > Clamp > Guard and falling back to NoneFallback when no formula is
// valid.  Throws std::invalid_argument outside the catalogue.
EquationKind select_equation(Feature f, const Pattern& p);

// Per-prefix and per-suffix aggregates: fwd[j-1] = f over x_1..x_j,
// bwd[i-1] = f over x_i..x_n, total = f over the whole series.
struct PrefixProfile {
  std::vector<std::int64_t> fwd;
  std::vector<std::int64_t> bwd;
  std::int64_t total = 0;
};

// Built by one forward scan plus one scan of the reversed series with the
// mirrored pattern; requires a pattern whose mirror is in the catalogue.
PrefixProfile prefix_profile(Feature f, const Pattern& p, const Series& x);

// One left-to-right sweep over the signature maintaining the maximal
// occurrences of every prefix on a dominance stack.  The linear counterpart
// of repeated maximal_occurrences calls; the two are cross-checked in the
// test suite.
struct PrefixScan {
  std::vector<std::int64_t> fwd;        // fwd[k-1]: aggregate over x_1..x_k
  std::vector<int> occurrence_count;    // count[k-1]: occurrences in x_1..x_k
  std::vector<Occurrence> occurrences;  // maximal occurrences of the whole x
};
PrefixScan scan_prefix_aggregates(Feature f, const Pattern& p, const Series& x);

// Constant-time window-presence tests, built in linear time.
enum class PresenceStrategy { Letter, SuffixUnavoidable, Incompressible, Factor };
const char* presence_strategy_name(PresenceStrategy s);

class PresenceIndex {
 public:
  // Picks the first applicable strategy in declaration order; throws
  // std::invalid_argument when the pattern has none of the four enabling
  // language properties.
  PresenceIndex(const Pattern& p, const Series& x);

  PresenceStrategy strategy() const { return strategy_; }

  // Exact: does x_i..x_j contain an occurrence?  Agrees with
  // maximal_occurrences(p, x, i, j) being nonempty on every window.
  bool query(int i, int j) const;

  // The published constant-time test for the chosen strategy, verbatim.
  // For the suffix-unavoidable and incompressible strategies it can claim
  // presence for windows that merely straddle an occurrence (two-line
  // examples in the checker tests); kept for corpus replay.
  bool shortcut_claim(int i, int j) const;

 private:
  PresenceStrategy strategy_ = PresenceStrategy::Letter;
  int n_ = 0;
  int omega_ = 0;
  std::vector<int> nocc_;     // letter counts per prefix
  std::vector<int> nocc2_;    // maximal-occurrence counts per prefix
  std::vector<int> end_;      // end_[k]: first extent end > k, else n+1
  std::vector<int> start_;    // start_[k]: last extent start < k, else 0
  std::vector<int> min_end_;  // min_end_[i]: smallest extent end of an
                              // occurrence inside x_i..x_n, else n+1
};

// Next-occurrence-end register scans specialised to two catalogue shapes,
// kept as independent cross-checks of the generic scanner.  end[k] for
// k in [0..n] is the extent end of the first maximal occurrence ending
// strictly after position k, with sentinel n+1.
std::vector<int> plain_next_end(const Word& sig);

// The zigzag scan also reports in[k] (k in [1..n-1]): whether the letter at
// k extends an occurrence that would end at k+1 if the signature stopped.
struct ZigzagScan {
  std::vector<int> end;  // end[0..n]
  std::vector<int> in;   // in[1..n-1]; slot 0 unused
};
ZigzagScan zigzag_next_end(const Word& sig);

struct WindowReport {
  int m = 0;
  std::vector<std::int64_t> values;  // one per window start i = 1..n-m+1
  std::int64_t low = 0;              // min of values
  std::int64_t up = 0;               // max of values
  EquationKind equation = EquationKind::NoneFallback;
  bool fallback = false;             // true when the quadratic oracle ran
};

struct CheckOptions {
  std::optional<EquationKind> equation;  // force a formula; default: select
  bool shortcut_presence = false;  // guard via shortcut_claim, not query
  int threads = 1;                 // chunked window evaluation
};

// Evaluates every length-m window in linear time (except the flagged
// fallback) and reports per-window values with their extrema.
// Requires 1 < m <= n.
WindowReport slide_check(Feature f, const Pattern& p, int m, const Series& x,
                         const CheckOptions& opts = {});

// Replays the published evaluation corpus: each cell's named equation (with
// the shortcut presence test) must reproduce the recorded reported values,
// and the window oracle must reproduce the recorded expected values.
struct ReplayRow {
  std::string constraint;
  int equation = 0;
  bool reported_reproduced = false;
  bool expected_reproduced = false;
};
struct ReplayReport {
  std::vector<ReplayRow> rows;
  bool all_pass = false;
};
ReplayReport reproduce_counterexamples();

}  // namespace slidets
