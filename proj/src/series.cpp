// Reference (quadratic) occurrence scanning and feature evaluation; the
// linear-time counterparts in checker.cpp are tested against these.
#include "slidets/series.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "slidets/letters.hpp"

namespace slidets {

Series parse_series(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (in_comment) continue;
    cleaned.push_back(c == ',' ? ' ' : c);
  }
  std::istringstream in(cleaned);
  Series x;
  std::int64_t v;
  while (in >> v) x.push_back(v);
  if (!in.eof()) {
    in.clear();
    std::string rest;
    in >> rest;
    throw std::runtime_error("series: unexpected token '" + rest + "'");
  }
  if (x.empty()) throw std::runtime_error("series: no values");
  return x;
}

Series read_series_file(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("series: cannot open " + path);
    text << in.rdbuf();
  }
  return parse_series(text.str());
}

namespace {

Letter compare_letter(std::int64_t a, std::int64_t b) {
  return a < b ? kLess : a > b ? kGreater : kEqual;
}

}  // namespace

Word signature(const Series& x) {
  if (x.size() < 2)
    throw std::invalid_argument("signature: need at least two values");
  Word s;
  s.reserve(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    s.push_back(compare_letter(x[i], x[i + 1]));
  return s;
}

std::vector<Occurrence> maximal_occurrences(const DfaTable& dfa, int before,
                                            int after, const Series& x,
                                            int lo, int hi) {
  const int n = static_cast<int>(x.size());
  if (lo < 1 || hi > n || lo > hi)
    throw std::invalid_argument("maximal_occurrences: window out of range");
  std::vector<Occurrence> out;
  if (dfa.num_states == 0) return out;
  // Longest match from each start, then a dominance sweep: a candidate is
  // maximal exactly when its end exceeds every earlier candidate's end.
  int running_max = 0;  // largest signature end kept or dropped so far
  for (int p = lo; p < hi; ++p) {
    int state = 0;
    int best = 0;
    for (int q = p; q < hi; ++q) {
      state = dfa.step(state, compare_letter(x[q - 1], x[q]));
      if (state < 0) break;
      if (dfa.accepting[state]) best = q;
    }
    if (best == 0 || best <= running_max) continue;
    running_max = best;
    out.push_back({p, best + 1, p + before, best + 1 - after});
  }
  return out;
}

std::vector<Occurrence> maximal_occurrences(const Pattern& p, const Series& x,
                                            int lo, int hi) {
  // Maximal occurrences may share a signature letter even for convex
  // patterns (convexity only constrains factors of in-language words):
  // inc_terrace on 0 1 1 2 2 3 yields extents [1,4] and [3,6].
  return maximal_occurrences(make_dfa_table(p.lang), p.before, p.after, x,
                             lo, hi);
}

const char* feature_name(Feature f) {
  switch (f) {
    case Feature::One: return "one";
    case Feature::Width: return "width";
    case Feature::Surf: return "surf";
    case Feature::Max: return "max";
    case Feature::Min: return "min";
  }
  return "?";
}

std::optional<Feature> parse_feature(std::string_view name) {
  for (Feature f : kFeatures)
    if (name == feature_name(f)) return f;
  if (name == "nb") return Feature::One;  // constraint-name spelling
  return std::nullopt;
}

FeatureFlags feature_flags(Feature f) {
  switch (f) {
    case Feature::One: return {.same_value = true, .positive = true};
    case Feature::Width: return {.sum_decomposition = true, .positive = true};
    case Feature::Surf: return {.sum_decomposition = true};
    case Feature::Max:
    case Feature::Min: return {.single_position = true};
  }
  return {};
}

std::int64_t feature_value(Feature f, const Occurrence& occ, const Series& x) {
  switch (f) {
    case Feature::One:
      return 1;
    case Feature::Width:
      return occ.trim_hi - occ.trim_lo + 1;
    case Feature::Surf: {
      std::int64_t s = 0;
      for (int k = occ.trim_lo; k <= occ.trim_hi; ++k)
        s = checked_add(s, x[k - 1]);
      return s;
    }
    case Feature::Max:
    case Feature::Min: {
      if (occ.trim_lo > occ.trim_hi)
        throw std::invalid_argument("feature_value: empty trimmed range");
      std::int64_t e = x[occ.trim_lo - 1];
      for (int k = occ.trim_lo + 1; k <= occ.trim_hi; ++k)
        e = f == Feature::Max ? std::max(e, x[k - 1])
                              : std::min(e, x[k - 1]);
      return e;
    }
  }
  throw std::logic_error("feature_value: bad feature");
}

std::int64_t window_oracle(Feature f, const DfaTable& dfa, int before,
                           int after, const Series& x, int lo, int hi) {
  std::int64_t total = 0;
  for (const auto& occ : maximal_occurrences(dfa, before, after, x, lo, hi))
    total = checked_add(total, feature_value(f, occ, x));
  return total;
}

std::int64_t window_oracle(Feature f, const Pattern& p, const Series& x,
                           int lo, int hi) {
  return window_oracle(f, make_dfa_table(p.lang), p.before, p.after, x, lo,
                       hi);
}

namespace {

bool name_in(const Pattern& p, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (p.name == n) return true;
  return false;
}

}  // namespace

PairFlags feature_pattern_flags(Feature f, const Pattern& p) {
  static constexpr const char* kClassified[] = {
      "dec_seq",      "dec_terrace",  "gorge",           "inc_seq",
      "inc_terrace",  "peak",         "plain",           "plateau",
      "proper_plain", "proper_plateau", "steady_seq",    "strictly_dec_seq",
      "strictly_inc_seq", "summit",   "valley",          "zigzag"};
  bool classified = false;
  for (const char* n : kClassified) classified |= p.name == n;
  if (!classified)
    throw std::invalid_argument("feature_pattern_flags: pattern not in the classified catalogue: " +
                                p.name);
  PairFlags flags;
  if (!feature_flags(f).single_position) return flags;
  // Inflexion-free patterns whose extremum always sits at a fixed end of the
  // trimmed range, and one-inflexion patterns whose extremum is the inflexion
  // itself.  Verified empirically in the test suite.
  flags.single_position_inflexion_free =
      name_in(p, {"dec_seq", "inc_seq", "strictly_dec_seq", "strictly_inc_seq",
                  "steady_seq", "dec_terrace", "inc_terrace"});
  if (f == Feature::Min)
    flags.single_position_one_inflexion =
        name_in(p, {"gorge", "valley", "plain", "plateau", "proper_plain",
                    "proper_plateau"});
  else
    flags.single_position_one_inflexion =
        name_in(p, {"summit", "peak", "plain", "plateau", "proper_plain",
                    "proper_plateau"});
  return flags;
}

Pattern mirror_pattern(const Pattern& p) {
  Pattern m;
  m.name = p.name + "~mirror";
  m.regex_src = p.regex_src.empty()
                    ? ""
                    : regex_to_string(regex_mirror(parse_regex(p.regex_src)));
  m.before = p.after;
  m.after = p.before;
  m.lang = mirror_language(p.lang);
  m.omega = p.omega;
  return m;
}

}  // namespace slidets
