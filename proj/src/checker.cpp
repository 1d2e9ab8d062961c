// Equation selection, linear profile and presence construction, the sliding
// checker, and evaluation-corpus replay.
#include "slidets/checker.hpp"

#include <algorithm>
#include <climits>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "slidets/classify.hpp"
#include "slidets/corpus.hpp"
#include "slidets/letters.hpp"
#include "slidets/patterns.hpp"

namespace slidets {

const char* equation_name(EquationKind e) {
  switch (e) {
    case EquationKind::Plain: return "plain";
    case EquationKind::Clamp: return "clamp";
    case EquationKind::Guard: return "guard";
    case EquationKind::NoneFallback: return "none";
  }
  return "?";
}

std::optional<EquationKind> parse_equation(std::string_view name) {
  if (name == "plain") return EquationKind::Plain;
  if (name == "clamp") return EquationKind::Clamp;
  if (name == "guard") return EquationKind::Guard;
  return std::nullopt;
}

namespace {

// Feature availability: ONE, WIDTH and SURF for every classified pattern;
// MAX, MIN and the single-valued HEIGHT for the subsets below.
constexpr const char* kClassified[] = {
    "dec_seq",          "dec_terrace", "gorge",          "inc_seq",
    "inc_terrace",      "peak",        "plain",          "plateau",
    "proper_plain",     "proper_plateau", "steady_seq",  "strictly_dec_seq",
    "strictly_inc_seq", "summit",      "valley",         "zigzag"};
constexpr const char* kMaxPatterns[] = {
    "dec_seq", "inc_seq", "peak", "strictly_dec_seq", "strictly_inc_seq",
    "summit",  "zigzag"};
constexpr const char* kMinPatterns[] = {
    "dec_seq", "gorge", "inc_seq", "strictly_dec_seq", "strictly_inc_seq",
    "valley",  "zigzag"};
constexpr const char* kHeightPatterns[] = {
    "dec_terrace", "inc_terrace",  "plain",     "plateau",
    "proper_plain", "proper_plateau", "steady_seq"};

template <std::size_t N>
bool name_in(const char* const (&arr)[N], const std::string& name) {
  for (const char* s : arr)
    if (name == s) return true;
  return false;
}

// Per-pattern derived data, built once per catalogue pattern.
struct PatternInfo {
  DfaTable dfa;
  DfaTable mirror_dfa;
  int before = 0;
  int after = 0;
  int omega = 0;
  bool reversible = false;
  bool classified = false;
  LanguageProperties props;
  std::set<RepTriple> reps;  // classified patterns only
};

std::shared_ptr<const PatternInfo> build_pattern_info(const Pattern& p) {
  auto info = std::make_shared<PatternInfo>();
  info->dfa = make_dfa_table(p.lang);
  info->mirror_dfa = make_dfa_table(mirror_language(p.lang));
  info->before = p.before;
  info->after = p.after;
  info->omega = p.omega;
  info->props = analyze_language(p.lang);
  info->reversible = !analyze_pattern(p).reverse_name.empty();
  info->classified = name_in(kClassified, p.name);
  if (info->classified) info->reps = representatives(p.lang);
  return info;
}

std::shared_ptr<const PatternInfo> pattern_info(const Pattern& p) {
  const Pattern* canon = find_pattern(p.name);
  bool cacheable = canon != nullptr && canon->regex_src == p.regex_src &&
                   canon->before == p.before && canon->after == p.after;
  if (!cacheable) return build_pattern_info(p);
  static std::map<std::string, std::shared_ptr<const PatternInfo>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(p.name); it != cache.end()) return it->second;
  }
  auto info = build_pattern_info(*canon);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(p.name, std::move(info)).first->second;
}

Letter compare_letter(std::int64_t a, std::int64_t b) {
  return a < b ? kLess : a > b ? kGreater : kEqual;
}

}  // namespace

bool in_catalog(Feature f, const Pattern& p) {
  switch (f) {
    case Feature::One:
    case Feature::Width:
    case Feature::Surf:
      return name_in(kClassified, p.name);
    case Feature::Max:
      return name_in(kMaxPatterns, p.name) || name_in(kHeightPatterns, p.name);
    case Feature::Min:
      return name_in(kMinPatterns, p.name) || name_in(kHeightPatterns, p.name);
  }
  return false;
}

std::optional<Constraint> parse_constraint(std::string_view name) {
  struct PrefixRule {
    std::string_view text;
    Feature feature;
    int set;  // 0: classified, 1: max list, 2: min list, 3: height list
  };
  static constexpr PrefixRule kRules[] = {
      {"nb_", Feature::One, 0},         {"sum_width_", Feature::Width, 0},
      {"sum_surf_", Feature::Surf, 0},  {"sum_max_", Feature::Max, 1},
      {"sum_min_", Feature::Min, 2},    {"sum_height_", Feature::Min, 3},
  };
  for (const PrefixRule& rule : kRules) {
    if (!name.starts_with(rule.text)) continue;
    const Pattern* p = find_pattern(name.substr(rule.text.size()));
    if (!p) return std::nullopt;
    bool listed = false;
    switch (rule.set) {
      case 0: listed = name_in(kClassified, p->name); break;
      case 1: listed = name_in(kMaxPatterns, p->name); break;
      case 2: listed = name_in(kMinPatterns, p->name); break;
      case 3: listed = name_in(kHeightPatterns, p->name); break;
    }
    if (!listed) return std::nullopt;
    return Constraint{rule.feature, p};
  }
  return std::nullopt;
}

const std::vector<std::string>& constraint_catalog() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const char* p : kClassified) {
      v.push_back(std::string("nb_") + p);
      v.push_back(std::string("sum_width_") + p);
      v.push_back(std::string("sum_surf_") + p);
    }
    for (const char* p : kMaxPatterns) v.push_back(std::string("sum_max_") + p);
    for (const char* p : kMinPatterns) v.push_back(std::string("sum_min_") + p);
    for (const char* p : kHeightPatterns)
      v.push_back(std::string("sum_height_") + p);
    std::sort(v.begin(), v.end());
    return v;
  }();
  return names;
}

EquationKind select_equation(Feature f, const Pattern& p) {
  if (!in_catalog(f, p))
    throw std::invalid_argument(std::string("constraint not in catalog: ") +
                                feature_name(f) + " over " + p.name);
  auto info = pattern_info(p);
  const std::set<RepTriple>& reps = info->reps;
  const FeatureFlags ff = feature_flags(f);
  const PairFlags pf = feature_pattern_flags(f, p);

  using RC = RepComponent;
  const RepTriple pfs{RC::PRE, RC::FAC, RC::SUF};
  const RepTriple iii{RC::IN, RC::IN, RC::IN};
  // Nested representative sets: inner pairs that never cut an occurrence,
  // extended with border-cut shapes, then with fully-outside windows.
  const std::set<RepTriple> set_inner = {pfs, iii};
  std::set<RepTriple> set_border = set_inner;
  set_border.insert({RC::PRE, RC::OUT, RC::OUT});
  set_border.insert({RC::OUT, RC::OUT, RC::SUF});
  set_border.insert({RC::IN, RC::OUT, RC::OUT});
  set_border.insert({RC::OUT, RC::OUT, RC::IN});
  std::set<RepTriple> set_outside = set_border;
  set_outside.insert({RC::OUT, RC::OUT, RC::OUT});
  std::set<RepTriple> set_outside_ext = set_outside;
  if (info->props.exclude_out_in)
    set_outside_ext.insert({RC::PRE, RC::OUT, RC::SUF});

  auto subset_of = [&](const std::set<RepTriple>& allowed) {
    return std::includes(allowed.begin(), allowed.end(), reps.begin(),
                         reps.end());
  };

  const bool sd = ff.sum_decomposition;
  const bool sv = ff.same_value;
  const bool pos = ff.positive;
  const bool spn = pf.single_position_inflexion_free;
  const bool spo = pf.single_position_one_inflexion;

  const bool plain_ok = ((sv || spo) && subset_of(set_border)) ||
                        ((sd || spn) && subset_of(set_inner));
  const bool clamp_ok = (sd && pos && subset_of(set_outside_ext)) ||
                        (sv && pos && subset_of(set_outside));
  const bool guard_ok =
      (!reps.count(pfs) && !reps.count(iii)) || sd || sv || spn || spo;

  if (plain_ok) return EquationKind::Plain;
  if (clamp_ok) return EquationKind::Clamp;
  if (guard_ok) return EquationKind::Guard;
  return EquationKind::NoneFallback;
}

namespace {

struct StackEntry {
  Occurrence occ;
  std::int64_t value;
};

// The dominance-stack sweep: one pass over the signature keeping, for every
// prefix, its maximal occurrences (as [extent, trimmed] ranges) and the
// aggregate feature value.  For each signature position the automaton run
// map cur[q] holds the smallest factor start reaching state q; a new
// occurrence ending here dominates (pops) every stacked occurrence starting
// no earlier than it does.
PrefixScan run_scan(Feature f, const DfaTable& dfa, int before, int after,
                    const Series& x) {
  const int n = static_cast<int>(x.size());
  if (n == 0) throw std::invalid_argument("prefix scan: empty series");
  PrefixScan out;
  out.fwd.assign(n, 0);
  out.occurrence_count.assign(n, 0);

  std::vector<std::int64_t> psum;
  if (f == Feature::Surf) {
    psum.assign(n + 1, 0);
    for (int k = 1; k <= n; ++k) psum[k] = checked_add(psum[k - 1], x[k - 1]);
  }

  const int num_states = dfa.num_states;
  std::vector<int> cur(num_states, INT_MAX), nxt(num_states, INT_MAX);
  std::vector<StackEntry> stack;
  std::vector<StackEntry> popped;
  std::int64_t agg = 0;

  for (int t = 1; t <= n - 1; ++t) {
    const Letter c = compare_letter(x[t - 1], x[t]);
    std::fill(nxt.begin(), nxt.end(), INT_MAX);
    for (int q = 0; q < num_states; ++q) {
      if (cur[q] == INT_MAX) continue;
      const int s = dfa.step(q, c);
      if (s >= 0) nxt[s] = std::min(nxt[s], cur[q]);
    }
    if (num_states > 0) {
      const int s = dfa.step(0, c);
      if (s >= 0) nxt[s] = std::min(nxt[s], t);
    }
    cur.swap(nxt);

    int best_start = INT_MAX;
    for (int q = 0; q < num_states; ++q)
      if (cur[q] != INT_MAX && dfa.accepting[q])
        best_start = std::min(best_start, cur[q]);

    if (best_start != INT_MAX) {
      popped.clear();
      while (!stack.empty() && stack.back().occ.lo >= best_start) {
        agg = checked_sub(agg, stack.back().value);
        popped.push_back(stack.back());
        stack.pop_back();
      }
      std::reverse(popped.begin(), popped.end());
      const Occurrence occ{best_start, t + 1, best_start + before,
                           t + 1 - after};
      std::int64_t value = 0;
      switch (f) {
        case Feature::One:
          value = 1;
          break;
        case Feature::Width:
          value = occ.trim_hi - occ.trim_lo + 1;
          break;
        case Feature::Surf:
          value = occ.trim_lo > occ.trim_hi
                      ? 0
                      : checked_sub(psum[occ.trim_hi], psum[occ.trim_lo - 1]);
          break;
        case Feature::Max:
        case Feature::Min: {
          // Popped occurrences lie inside the new trimmed range, so their
          // extrema can be reused; only the gaps between them are rescanned.
          bool seen = false;
          auto fold = [&](std::int64_t w) {
            value = !seen ? w
                          : (f == Feature::Max ? std::max(value, w)
                                               : std::min(value, w));
            seen = true;
          };
          int cursor = occ.trim_lo;
          for (const StackEntry& e : popped) {
            for (int k = cursor; k < e.occ.trim_lo; ++k) fold(x[k - 1]);
            fold(e.value);
            cursor = std::max(cursor, e.occ.trim_hi + 1);
          }
          for (int k = cursor; k <= occ.trim_hi; ++k) fold(x[k - 1]);
          if (!seen)
            throw std::invalid_argument("prefix scan: empty trimmed range");
          break;
        }
      }
      agg = checked_add(agg, value);
      stack.push_back({occ, value});
    }
    out.fwd[t] = agg;
    out.occurrence_count[t] = static_cast<int>(stack.size());
  }

  out.occurrences.reserve(stack.size());
  for (const StackEntry& e : stack) out.occurrences.push_back(e.occ);
  return out;
}

}  // namespace

PrefixScan scan_prefix_aggregates(Feature f, const Pattern& p,
                                  const Series& x) {
  auto info = pattern_info(p);
  return run_scan(f, info->dfa, info->before, info->after, x);
}

PrefixProfile prefix_profile(Feature f, const Pattern& p, const Series& x) {
  auto info = pattern_info(p);
  if (!info->reversible)
    throw std::invalid_argument(
        "prefix profile: no mirrored counterpart in the catalogue for " +
        p.name);
  const int n = static_cast<int>(x.size());
  PrefixProfile prof;
  prof.fwd = run_scan(f, info->dfa, info->before, info->after, x).fwd;
  const Series reversed(x.rbegin(), x.rend());
  const std::vector<std::int64_t> rev =
      run_scan(f, info->mirror_dfa, info->after, info->before, reversed).fwd;
  prof.bwd.assign(n, 0);
  for (int i = 1; i <= n; ++i) prof.bwd[i - 1] = rev[n - i];
  prof.total = prof.fwd[n - 1];
  return prof;
}

const char* presence_strategy_name(PresenceStrategy s) {
  switch (s) {
    case PresenceStrategy::Letter: return "letter";
    case PresenceStrategy::SuffixUnavoidable: return "suffix-unavoidable";
    case PresenceStrategy::Incompressible: return "incompressible";
    case PresenceStrategy::Factor: return "factor";
  }
  return "?";
}

PresenceIndex::PresenceIndex(const Pattern& p, const Series& x) {
  auto info = pattern_info(p);
  n_ = static_cast<int>(x.size());
  if (n_ == 0) throw std::invalid_argument("presence index: empty series");
  omega_ = info->omega;
  const LanguageProperties& lp = info->props;

  if (lp.letter) {
    strategy_ = PresenceStrategy::Letter;
  } else if (lp.suffix_unavoidable) {
    strategy_ = PresenceStrategy::SuffixUnavoidable;
  } else if (lp.incompressible) {
    strategy_ = PresenceStrategy::Incompressible;
  } else if (lp.factor.value_or(false)) {
    strategy_ = PresenceStrategy::Factor;
  } else {
    throw std::invalid_argument(
        "presence index: no constant-time strategy for " + p.name +
        "; use the window oracle");
  }

  const Word sig = n_ >= 2 ? signature(x) : Word{};

  if (strategy_ == PresenceStrategy::Letter ||
      strategy_ == PresenceStrategy::SuffixUnavoidable) {
    const Letter e = strategy_ == PresenceStrategy::Letter
                         ? *lp.letter
                         : *lp.suffix_unavoidable;
    nocc_.assign(n_ + 1, 0);
    for (int k = 2; k <= n_; ++k)
      nocc_[k] = nocc_[k - 1] + (sig[k - 2] == e ? 1 : 0);
  }

  if (strategy_ == PresenceStrategy::SuffixUnavoidable) {
    const PrefixScan scan =
        run_scan(Feature::One, info->dfa, info->before, info->after, x);
    nocc2_.assign(n_ + 1, 0);
    for (int k = 2; k <= n_; ++k) nocc2_[k] = scan.occurrence_count[k - 1];
  }

  if (strategy_ == PresenceStrategy::Incompressible ||
      strategy_ == PresenceStrategy::Factor) {
    end_.assign(n_ + 1, n_ + 1);
    start_.assign(n_ + 2, 0);
    if (p.name == "zigzag" && n_ >= 2) {
      end_ = zigzag_next_end(sig).end;
      const Series reversed(x.rbegin(), x.rend());
      const std::vector<int> rev_end = zigzag_next_end(signature(reversed)).end;
      for (int k = 1; k <= n_ + 1; ++k)
        start_[k] = n_ + 1 - rev_end[n_ + 1 - k];
    } else if (n_ >= 2) {
      const PrefixScan scan =
          run_scan(Feature::One, info->dfa, info->before, info->after, x);
      std::vector<char> ends_at(n_ + 2, 0), starts_at(n_ + 2, 0);
      for (const Occurrence& occ : scan.occurrences) {
        ends_at[occ.hi] = 1;
        starts_at[occ.lo] = 1;
      }
      for (int k = n_ - 1; k >= 0; --k)
        end_[k] = ends_at[k + 1] ? k + 1 : end_[k + 1];
      for (int k = 2; k <= n_ + 1; ++k)
        start_[k] = starts_at[k - 1] ? k - 1 : start_[k - 1];
    }
  }

  // Exact presence via a right-to-left run over the signature:
  // min_end_[i] is the smallest extent end of an occurrence in x_i..x_n.
  min_end_.assign(n_ + 2, n_ + 1);
  const DfaTable& dfa = info->dfa;
  const int num_states = dfa.num_states;
  std::vector<int> cur(num_states, INT_MAX), nxt(num_states, INT_MAX);
  for (int pos = n_ - 1; pos >= 1; --pos) {
    const Letter c = sig[pos - 1];
    for (int q = 0; q < num_states; ++q) {
      const int s = dfa.step(q, c);
      cur[q] = s < 0 ? INT_MAX
                     : std::min(dfa.accepting[s] ? pos : INT_MAX, nxt[s]);
    }
    const int sig_end = num_states > 0 ? cur[0] : INT_MAX;
    const int ext_end = sig_end == INT_MAX ? n_ + 1 : sig_end + 1;
    min_end_[pos] = std::min(ext_end, min_end_[pos + 1]);
    cur.swap(nxt);
  }
}

bool PresenceIndex::query(int i, int j) const {
  if (i < 1 || j > n_ || i > j)
    throw std::invalid_argument("presence query: window out of range");
  return min_end_[i] <= j;
}

bool PresenceIndex::shortcut_claim(int i, int j) const {
  if (i < 1 || j > n_ || i > j)
    throw std::invalid_argument("presence query: window out of range");
  switch (strategy_) {
    case PresenceStrategy::Letter:
      return nocc_[i] != nocc_[j];
    case PresenceStrategy::SuffixUnavoidable:
      return nocc_[i] != nocc_[j] && nocc2_[i] != nocc2_[j];
    case PresenceStrategy::Incompressible:
      return !(end_[i] > j || start_[j] < i);
    case PresenceStrategy::Factor: {
      // The published constant-time absence test, negated.
      const int end_i = end_[i];
      const int start_j = start_[j];
      if (end_i > n_ || start_j < 1) return false;
      const int ip = end_i - i >= omega_ ? i : end_i;
      const int jp = j - start_j >= omega_ ? j : start_j;
      const int end_ip = end_[ip];
      const int start_jp = start_[jp];
      if (end_ip > n_ || start_jp < 1) return false;
      const int bound = std::min(jp, end_ip);
      return !(bound - std::max(ip, start_[bound]) < omega_);
    }
  }
  return false;
}

std::vector<int> plain_next_end(const Word& sig) {
  const int n = static_cast<int>(sig.size()) + 1;
  // Two-state run: 0 before the first descent of the current occurrence,
  // 1 inside the descending-then-flat body.  The '<' closing an occurrence
  // is the only transition recorded.
  std::vector<char> closes(n, 0);
  int state = 0;
  for (int k = 1; k <= n - 1; ++k) {
    const Letter c = sig[k - 1];
    if (state == 0) {
      if (c == kGreater) state = 1;
    } else if (c == kLess) {
      state = 0;
      closes[k] = 1;
    }
  }
  std::vector<int> end(n + 1, n + 1);
  for (int k = n - 1; k >= 1; --k) end[k] = closes[k] ? k + 1 : end[k + 1];
  end[0] = n >= 2 ? end[1] : n + 1;
  return end;
}

ZigzagScan zigzag_next_end(const Word& sig) {
  const int n = static_cast<int>(sig.size()) + 1;
  ZigzagScan out;
  out.end.assign(n + 1, n + 1);
  out.in.assign(std::max(n, 1), 0);
  if (n < 2) return out;

  // Seven-state run; per (state, letter): target state and transition class
  // (0 plain step, 1 step inside a pending occurrence, 2 step sealing the
  // occurrence that ended just before the breaking letter).
  struct Tr {
    int to;
    int cls;
  };
  static constexpr Tr kOnLess[7] = {{1, 0}, {1, 0}, {3, 1}, {1, 2},
                                    {5, 0}, {1, 0}, {3, 1}};
  static constexpr Tr kOnEqual[7] = {{0, 0}, {0, 0}, {0, 0}, {0, 2},
                                     {0, 0}, {0, 0}, {0, 2}};
  static constexpr Tr kOnGreater[7] = {{4, 0}, {2, 0}, {4, 0}, {6, 1},
                                       {4, 0}, {6, 1}, {4, 2}};

  std::vector<char> cls(n, 0);
  int state = 0;
  for (int k = 1; k <= n - 1; ++k) {
    const Tr* row = sig[k - 1] == kLess      ? kOnLess
                    : sig[k - 1] == kEqual   ? kOnEqual
                                             : kOnGreater;
    const Tr tr = row[state];
    state = tr.to;
    cls[k] = static_cast<char>(tr.cls);
    out.in[k] = tr.cls == 1 ? 1 : 0;
  }
  out.end[n] = n + 1;
  out.end[n - 1] = n + 1 - out.in[n - 1];
  for (int k = n - 1; k >= 1; --k)
    out.end[k - 1] = cls[k] == 2 ? k : out.end[k];
  return out;
}

WindowReport slide_check(Feature f, const Pattern& p, int m, const Series& x,
                         const CheckOptions& opts) {
  const int n = static_cast<int>(x.size());
  if (m <= 1)
    throw std::invalid_argument("slide check: window length must be at least 2");
  if (m > n)
    throw std::invalid_argument(
        "slide check: window length exceeds the series length");

  WindowReport report;
  report.m = m;
  report.equation = opts.equation ? *opts.equation : select_equation(f, p);
  const int windows = n - m + 1;
  report.values.assign(windows, 0);

  if (report.equation == EquationKind::NoneFallback) {
    report.fallback = true;
    auto info = pattern_info(p);
    for (int i = 1; i <= windows; ++i)
      report.values[i - 1] = window_oracle(f, info->dfa, info->before,
                                           info->after, x, i, i + m - 1);
  } else {
    const PrefixProfile prof = prefix_profile(f, p, x);
    std::optional<PresenceIndex> presence;
    if (report.equation == EquationKind::Guard) presence.emplace(p, x);

    auto eval_range = [&](int from, int to) {
      for (int i = from; i <= to; ++i) {
        const int j = i + m - 1;
        if (presence) {
          const bool present = opts.shortcut_presence
                                   ? presence->shortcut_claim(i, j)
                                   : presence->query(i, j);
          if (!present) {
            report.values[i - 1] = 0;
            continue;
          }
        }
        std::int64_t v = checked_sub(
            checked_add(prof.fwd[j - 1], prof.bwd[i - 1]), prof.total);
        if (report.equation == EquationKind::Clamp)
          v = std::max<std::int64_t>(0, v);
        report.values[i - 1] = v;
      }
    };

    const int threads = std::max(1, opts.threads);
    if (threads == 1 || windows < 2 * threads) {
      eval_range(1, windows);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(threads);
      const int chunk = (windows + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        const int from = 1 + t * chunk;
        if (from > windows) break;
        const int to = std::min(windows, from + chunk - 1);
        pool.emplace_back([&, t, from, to] {
          try {
            eval_range(from, to);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (std::thread& th : pool) th.join();
      for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    }
  }

  report.low = *std::min_element(report.values.begin(), report.values.end());
  report.up = *std::max_element(report.values.begin(), report.values.end());
  return report;
}

ReplayReport reproduce_counterexamples() {
  ReplayReport report;
  report.all_pass = true;
  for (const CorpusCell& cell : evaluation_corpus()) {
    const auto c = parse_constraint(cell.constraint);
    if (!c)
      throw std::logic_error(std::string("corpus constraint unknown: ") +
                             cell.constraint);
    CheckOptions opts;
    opts.equation = cell.equation == 1   ? EquationKind::Plain
                    : cell.equation == 2 ? EquationKind::Clamp
                                         : EquationKind::Guard;
    opts.shortcut_presence = true;
    const WindowReport win =
        slide_check(c->feature, *c->pattern, cell.m, cell.series, opts);

    auto info = pattern_info(*c->pattern);
    std::vector<std::int64_t> oracle;
    const int n = static_cast<int>(cell.series.size());
    for (int i = 1; i + cell.m - 1 <= n; ++i)
      oracle.push_back(window_oracle(c->feature, info->dfa, info->before,
                                     info->after, cell.series, i,
                                     i + cell.m - 1));

    ReplayRow row;
    row.constraint = cell.constraint;
    row.equation = cell.equation;
    row.reported_reproduced = win.values == cell.reported;
    row.expected_reproduced = oracle == cell.expected;
    report.all_pass =
        report.all_pass && row.reported_reproduced && row.expected_reproduced;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace slidets
