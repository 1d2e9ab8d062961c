// Series semantics: signatures, maximal occurrences, feature values, the
// window oracle, and feature/pattern property tables.
#include "slidets/series.hpp"

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "slidets/letters.hpp"

using namespace slidets;

namespace {

const Series kExample1{3, 1, 3, 3, 2, 1, 1, 2, 2, 2, 4, 4, 3, 1, 2, 2};

Series random_series(std::mt19937& rng, int max_len, int lo_val, int hi_val,
                     int min_len = 2) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> val(lo_val, hi_val);
  Series x(len(rng));
  for (auto& v : x) v = val(rng);
  return x;
}

std::vector<std::pair<int, int>> extents(const std::vector<Occurrence>& occs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& o : occs) out.emplace_back(o.lo, o.hi);
  return out;
}

// Containment-based maximality oracle: every in-language factor of the
// windowed signature, minus those strictly contained in another.
std::vector<std::pair<int, int>> containment_maximal(const Kernel& lang,
                                                     const Series& x, int lo,
                                                     int hi) {
  Word sig = x.size() >= 2 ? signature(x) : Word{};
  std::vector<std::pair<int, int>> in_lang;
  for (int p = lo; p <= hi - 1; ++p)
    for (int q = p; q <= hi - 1; ++q)
      if (kernel_accepts(lang, sig.substr(p - 1, q - p + 1)))
        in_lang.emplace_back(p, q);
  std::vector<std::pair<int, int>> out;
  for (auto [p, q] : in_lang) {
    bool contained = false;
    for (auto [pp, qq] : in_lang)
      contained |= pp <= p && q <= qq && (pp != p || qq != q);
    if (!contained) out.emplace_back(p, q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<const Pattern*>& reversible_patterns() {
  static const std::vector<const Pattern*> list = [] {
    std::vector<const Pattern*> out;
    for (const auto& p : pattern_catalog())
      if (!analyze_pattern(p).reverse_name.empty()) out.push_back(&p);
    return out;
  }();
  return list;
}

}  // namespace

TEST_CASE("series parsing") {
  CHECK(parse_series("1 2,3\n-4") == Series{1, 2, 3, -4});
  CHECK(parse_series("# heading\n5 6 # trailing\n7") == Series{5, 6, 7});
  CHECK(parse_series("42") == Series{42});
  CHECK_THROWS_AS(parse_series("1 2 x"), std::runtime_error);
  CHECK_THROWS_AS(parse_series("# only a comment\n"), std::runtime_error);
}

TEST_CASE("signature letters") {
  CHECK(signature(kExample1) == "><=>>=<==<=>><=");
  CHECK(signature(Series{5, 5, 5}) == "==");
  CHECK(signature(Series{1, 2, 4}) == "<<");
  CHECK_THROWS_AS(signature(Series{7}), std::invalid_argument);
}

TEST_CASE("maximal occurrences of inc_seq on the worked example") {
  const Pattern& inc_seq = *find_pattern("inc_seq");

  auto full = maximal_occurrences(inc_seq, kExample1, 1, 16);
  CHECK(extents(full) ==
        std::vector<std::pair<int, int>>{{2, 3}, {7, 11}, {14, 15}});

  auto windowed = maximal_occurrences(inc_seq, kExample1, 1, 10);
  CHECK(extents(windowed) == std::vector<std::pair<int, int>>{{2, 3}, {7, 8}});

  CHECK(maximal_occurrences(inc_seq, kExample1, 4, 7).empty());
  CHECK_THROWS_AS(maximal_occurrences(inc_seq, kExample1, 0, 5),
                  std::invalid_argument);
}

TEST_CASE("feature values") {
  const Pattern& inc_seq = *find_pattern("inc_seq");
  auto occs = maximal_occurrences(inc_seq, kExample1, 1, 16);
  REQUIRE(occs.size() == 3);
  const Occurrence& middle = occs[1];  // values 1 2 2 2 4
  CHECK(feature_value(Feature::One, middle, kExample1) == 1);
  CHECK(feature_value(Feature::Width, middle, kExample1) == 5);
  CHECK(feature_value(Feature::Surf, middle, kExample1) == 11);
  CHECK(feature_value(Feature::Max, middle, kExample1) == 4);
  CHECK(feature_value(Feature::Min, middle, kExample1) == 1);

  const Pattern& plain = *find_pattern("plain");
  Series x{3, 1, 1, 2};
  auto plains = maximal_occurrences(plain, x, 1, 4);
  REQUIRE(plains.size() == 1);
  CHECK(plains[0] == Occurrence{1, 4, 2, 3});
  CHECK(feature_value(Feature::Width, plains[0], x) == 4 - 1 - 1 - 1 + 1);
  CHECK(feature_value(Feature::Surf, plains[0], x) == 2);
}

TEST_CASE("window oracle reproduces the worked example sums") {
  const Pattern& inc_seq = *find_pattern("inc_seq");
  CHECK(window_oracle(Feature::Surf, inc_seq, kExample1, 1, 10) == 7);
  CHECK(window_oracle(Feature::Surf, inc_seq, kExample1, 2, 11) == 15);
  std::vector<std::int64_t> windows;
  for (int i = 1; i + 10 - 1 <= 16; ++i)
    windows.push_back(
        window_oracle(Feature::Surf, inc_seq, kExample1, i, i + 10 - 1));
  CHECK(windows == std::vector<std::int64_t>{7, 15, 11, 11, 11, 14, 14});
  CHECK(window_oracle(Feature::Surf, inc_seq, kExample1, 4, 7) == 0);
}

TEST_CASE("quadratic scanner agrees with the containment oracle") {
  std::mt19937 rng(20230816);
  std::vector<std::pair<const Pattern*, DfaTable>> tables;
  for (const Pattern* p : reversible_patterns())
    tables.emplace_back(p, make_dfa_table(p->lang));
  REQUIRE(tables.size() == 19);

  for (int round = 0; round < 200; ++round) {
    Series x = random_series(rng, 30, -3, 3);
    int n = static_cast<int>(x.size());
    std::uniform_int_distribution<int> pos(1, n);
    int a = pos(rng), b = pos(rng);
    int lo = std::min(a, b), hi = std::max(a, b);
    for (auto& [p, dfa] : tables) {
      auto fast = extents(maximal_occurrences(dfa, p->before, p->after, x, lo, hi));
      std::vector<std::pair<int, int>> fast_sig;
      for (auto [s, e] : fast) fast_sig.emplace_back(s, e - 1);
      auto slow = containment_maximal(p->lang, x, lo, hi);
      REQUIRE(fast_sig == slow);
      // Maximality forbids nesting: starts and ends strictly increase.
      for (std::size_t k = 0; k + 1 < fast_sig.size(); ++k) {
        REQUIRE(fast_sig[k].first < fast_sig[k + 1].first);
        REQUIRE(fast_sig[k].second < fast_sig[k + 1].second);
      }
    }
  }
}

TEST_CASE("terrace occurrences may share a signature letter") {
  const Pattern& p = *find_pattern("inc_terrace");
  const Series x{0, 1, 1, 2, 2, 3};
  const auto occ = maximal_occurrences(p, x, 1, 6);
  REQUIRE(occ.size() == 2);
  CHECK(occ[0] == Occurrence{1, 4, 2, 3});
  CHECK(occ[1] == Occurrence{3, 6, 4, 5});
}

TEST_CASE("window oracle translation behavior") {
  std::mt19937 rng(7);
  const Pattern& gorge = *find_pattern("gorge");
  const Pattern& inc_seq = *find_pattern("inc_seq");
  for (int round = 0; round < 50; ++round) {
    Series x = random_series(rng, 20, -4, 4);
    int n = static_cast<int>(x.size());
    Series shifted = x;
    std::int64_t c = std::uniform_int_distribution<int>(-3, 3)(rng);
    for (auto& v : shifted) v += c;
    for (const Pattern* p : {&gorge, &inc_seq}) {
      CHECK(window_oracle(Feature::One, *p, shifted, 1, n) ==
            window_oracle(Feature::One, *p, x, 1, n));
      CHECK(window_oracle(Feature::Width, *p, shifted, 1, n) ==
            window_oracle(Feature::Width, *p, x, 1, n));
      CHECK(window_oracle(Feature::Surf, *p, shifted, 1, n) ==
            window_oracle(Feature::Surf, *p, x, 1, n) +
                c * window_oracle(Feature::Width, *p, x, 1, n));
    }
  }
}

TEST_CASE("mirror duality of the window oracle") {
  std::mt19937 rng(99);
  std::vector<std::pair<const Pattern*, Pattern>> mirrored;
  for (const char* name : {"dec_seq", "dec_terrace", "peak", "plain", "zigzag"}) {
    const Pattern* p = find_pattern(name);
    mirrored.emplace_back(p, mirror_pattern(*p));
  }
  for (int round = 0; round < 60; ++round) {
    Series x = random_series(rng, 16, -3, 3);
    int n = static_cast<int>(x.size());
    Series rx(x.rbegin(), x.rend());
    std::uniform_int_distribution<int> pos(1, n);
    int a = pos(rng), b = pos(rng);
    int lo = std::min(a, b), hi = std::max(a, b);
    for (auto& [p, m] : mirrored)
      for (Feature f : kFeatures)
        CHECK(window_oracle(f, *p, x, lo, hi) ==
              window_oracle(f, m, rx, n + 1 - hi, n + 1 - lo));
  }
}

TEST_CASE("mirror pattern structure") {
  const Pattern& dec_seq = *find_pattern("dec_seq");
  Pattern m = mirror_pattern(dec_seq);
  CHECK(kernel_same_language(m.lang, find_pattern("inc_seq")->lang));
  CHECK(m.before == dec_seq.after);
  CHECK(m.after == dec_seq.before);
  const Pattern& zigzag = *find_pattern("zigzag");
  CHECK(kernel_same_language(mirror_pattern(zigzag).lang, zigzag.lang));
}

TEST_CASE("feature flags") {
  CHECK(parse_feature("surf") == Feature::Surf);
  CHECK(parse_feature("nb") == Feature::One);
  CHECK_FALSE(parse_feature("area").has_value());

  auto one = feature_flags(Feature::One);
  CHECK((one.same_value && one.positive));
  CHECK_FALSE((one.sum_decomposition || one.single_position));
  auto width = feature_flags(Feature::Width);
  CHECK((width.sum_decomposition && width.positive));
  CHECK_FALSE((width.same_value || width.single_position));
  auto surf = feature_flags(Feature::Surf);
  CHECK(surf.sum_decomposition);
  CHECK_FALSE((surf.same_value || surf.single_position || surf.positive));
  for (Feature f : {Feature::Max, Feature::Min}) {
    auto ex = feature_flags(f);
    CHECK(ex.single_position);
    CHECK_FALSE((ex.sum_decomposition || ex.same_value || ex.positive));
  }
}

TEST_CASE("pattern-feature pair flags: pinned table") {
  auto spn = [](const char* name, Feature f) {
    return feature_pattern_flags(f, *find_pattern(name))
        .single_position_inflexion_free;
  };
  auto spo = [](const char* name, Feature f) {
    return feature_pattern_flags(f, *find_pattern(name))
        .single_position_one_inflexion;
  };
  CHECK(spn("dec_seq", Feature::Min));
  CHECK(spn("dec_seq", Feature::Max));
  CHECK(spn("steady_seq", Feature::Min));
  CHECK_FALSE(spn("gorge", Feature::Min));
  CHECK_FALSE(spn("zigzag", Feature::Min));
  CHECK_FALSE(spn("dec_seq", Feature::Surf));

  CHECK(spo("gorge", Feature::Min));
  CHECK_FALSE(spo("gorge", Feature::Max));
  CHECK(spo("summit", Feature::Max));
  CHECK_FALSE(spo("summit", Feature::Min));
  CHECK(spo("peak", Feature::Max));
  CHECK(spo("valley", Feature::Min));
  for (const char* name : {"plain", "plateau", "proper_plain", "proper_plateau"}) {
    CHECK(spo(name, Feature::Min));
    CHECK(spo(name, Feature::Max));
  }
  CHECK_FALSE(spo("dec_seq", Feature::Min));
  CHECK_FALSE(spo("gorge", Feature::One));

  CHECK_THROWS_AS(feature_pattern_flags(Feature::Min, *find_pattern("dec")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      feature_pattern_flags(Feature::Min, *find_pattern("inflexion")),
      std::invalid_argument);
}

TEST_CASE("pair flags hold empirically on whole-window occurrences") {
  // For every classified pattern and f in {max, min}: collect windows whose
  // entire signature is one pattern word, and check whether the feature value
  // is always the value at a fixed trimmed border (inflexion-free case) or
  // always the value at the unique inflexion (one-inflexion case).
  std::mt19937 rng(4242);
  std::vector<Series> samples;
  for (int i = 0; i < 400; ++i) samples.push_back(random_series(rng, 12, -3, 3));
  // Hand-picked witnesses that defeat the four false one-inflexion entries.
  samples.push_back({3, 1, 0, 2, 5});    // gorge, max != bottom
  samples.push_back({-3, -1, 0, -2, -5}); // summit, min != top
  samples.push_back({0, 2, 3, 1});       // peak, min != top
  samples.push_back({0, -2, -3, -1});    // valley, max != bottom

  static constexpr const char* kClassified[] = {
      "dec_seq",          "dec_terrace", "gorge",  "inc_seq",
      "inc_terrace",      "peak",        "plain",  "plateau",
      "proper_plain",     "proper_plateau", "steady_seq",
      "strictly_dec_seq", "strictly_inc_seq", "summit", "valley", "zigzag"};

  // Uniform sampling rarely produces whole-window matches of the flatter
  // shapes, so also realize each pattern word up to length 7 as a series.
  std::uniform_int_distribution<int> base(-3, 3), step(1, 3);
  for (const char* name : kClassified) {
    auto words = kernel_enumerate(find_pattern(name)->lang, 7);
    int reps = words.size() >= 40 ? 3 : 25;
    for (const Word& w : words)
      for (int r = 0; r < reps; ++r) {
        Series x{base(rng)};
        for (Letter c : w) {
          std::int64_t prev = x.back();
          x.push_back(c == kLess ? prev + step(rng)
                                 : c == kGreater ? prev - step(rng) : prev);
        }
        samples.push_back(std::move(x));
      }
  }

  for (const char* name : kClassified) {
    const Pattern& p = *find_pattern(name);
    auto props = analyze_language(p.lang);
    DfaTable dfa = make_dfa_table(p.lang);
    for (Feature f : {Feature::Max, Feature::Min}) {
      bool all_left = true, all_right = true, all_inflexion = true;
      long witnesses = 0;
      for (const Series& x : samples) {
        int n = static_cast<int>(x.size());
        Word sig = signature(x);
        for (int lo = 1; lo < n; ++lo) {
          int state = 0;
          for (int hi = lo + 1; hi <= n; ++hi) {
            state = dfa.step(state, sig[hi - 2]);
            if (state < 0) break;
            if (!dfa.accepting[state]) continue;
            ++witnesses;
            Occurrence occ{lo, hi, lo + p.before, hi - p.after};
            std::int64_t v = feature_value(f, occ, x);
            all_left &= v == x[occ.trim_lo - 1];
            all_right &= v == x[occ.trim_hi - 1];
            if (props.one_inflexion) {
              // The word has letters of both directions; the inflexion sits
              // right after the last letter of the opening direction.
              Letter dir = 0;
              for (int t = lo; t < hi; ++t)
                if (sig[t - 1] != kEqual) { dir = sig[t - 1]; break; }
              int last_dir = 0;
              for (int t = lo; t < hi; ++t)
                if (sig[t - 1] == dir) last_dir = t;
              all_inflexion &= v == x[last_dir];  // x_{last_dir+1}, 0-based
            }
          }
        }
      }
      REQUIRE(witnesses > 100);
      PairFlags flags = feature_pattern_flags(f, p);
      CHECK(flags.single_position_inflexion_free ==
            (props.inflexion_free && (all_left || all_right)));
      CHECK(flags.single_position_one_inflexion ==
            (props.one_inflexion && all_inflexion));
    }
  }
}
