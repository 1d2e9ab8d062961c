// Tests for word types, triple feasibility, and pattern classes.
#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "slidets/classify.hpp"
#include "slidets/corpus.hpp"
#include "slidets/patterns.hpp"
#include "slidets/regex.hpp"

using namespace slidets;

namespace {

Kernel compile_src(const std::string& src) {
  return regex_compile(parse_regex(src));
}

// Direct string-level word typing, used as an oracle for the automaton
// construction: scan every substring with the pattern DFA.
WordType oracle_type(const DfaTable& dfa, const std::string& w) {
  auto in_lang = [&](int i, int j) {
    if (dfa.num_states == 0) return false;
    int q = 0;
    for (int k = i; k < j && q >= 0; ++k) q = dfa.step(q, w[k]);
    return q >= 0 && dfa.accepting[q];
  };
  int n = static_cast<int>(w.size());
  bool has_fac = false;
  for (int i = 0; i < n && !has_fac; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (in_lang(i, j)) {
        has_fac = true;
        break;
      }
  if (!has_fac) return WordType::Out;
  bool has_pre = false, has_suf = false;
  for (int j = 1; j <= n; ++j)
    if (in_lang(0, j)) {
      has_pre = true;
      break;
    }
  for (int i = 0; i < n; ++i)
    if (in_lang(i, n)) {
      has_suf = true;
      break;
    }
  if (has_pre && has_suf) return WordType::In;
  if (has_pre) return WordType::Pre;
  if (has_suf) return WordType::Suf;
  return WordType::Fac;
}

std::vector<std::string> signature_words(int max_len) {
  std::vector<std::string> words, frontier = {""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : frontier)
      for (char c : {'<', '=', '>'}) next.push_back(w + c);
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return words;
}

TypeTriple triple(WordType a, WordType b, WordType c) { return {a, b, c}; }

RepTriple rep(RepComponent a, RepComponent b, RepComponent c) {
  return {a, b, c};
}

std::set<TypeTriple> rule_pass_set() {
  std::set<TypeTriple> out;
  for (WordType t1 : kWordTypes)
    for (WordType t2 : kWordTypes)
      for (WordType t3 : kWordTypes)
        if (triple_possibly_feasible({t1, t2, t3})) out.insert({t1, t2, t3});
  return out;
}

}  // namespace

TEST_CASE("word types partition the nonempty words") {
  std::vector<Kernel> langs;
  for (const char* name : {"dec_seq", "plain", "zigzag", "gorge"})
    langs.push_back(find_pattern(name)->lang);
  langs.push_back(compile_src("<<=<|<="));
  for (const Kernel& lang : langs) {
    DfaTable pattern_dfa = make_dfa_table(lang);
    std::array<DfaTable, 5> type_dfa;
    for (WordType t : kWordTypes) {
      Kernel tl = word_type_language(lang, t);
      REQUIRE_FALSE(kernel_contains_epsilon(tl));
      type_dfa[static_cast<int>(t)] = make_dfa_table(tl);
    }
    for (const std::string& w : signature_words(5)) {
      int hits = 0;
      WordType got = WordType::Out;
      for (WordType t : kWordTypes) {
        const DfaTable& dfa = type_dfa[static_cast<int>(t)];
        int q = dfa.num_states == 0 ? -1 : 0;
        for (char c : w) {
          if (q < 0) break;
          q = dfa.step(q, c);
        }
        if (q >= 0 && dfa.accepting[q]) {
          ++hits;
          got = t;
        }
      }
      REQUIRE(hits == 1);
      REQUIRE(got == oracle_type(pattern_dfa, w));
    }
  }
}

TEST_CASE("classify_word names the type directly") {
  const Kernel& dec_seq = find_pattern("dec_seq")->lang;
  CHECK(classify_word(dec_seq, ">") == WordType::In);
  CHECK(classify_word(dec_seq, "<") == WordType::Out);
  CHECK(classify_word(dec_seq, "><") == WordType::Pre);
  CHECK(classify_word(dec_seq, "<>") == WordType::Suf);
  CHECK(classify_word(dec_seq, "<><") == WordType::Fac);
  CHECK_THROWS_AS(classify_word(dec_seq, ""), std::invalid_argument);
}

TEST_CASE("the closed-form feasibility rule passes exactly 61 triples") {
  std::set<TypeTriple> pass = rule_pass_set();
  CHECK(pass.size() == 61);

  // The witness map covers exactly the triples the rule admits.
  std::set<TypeTriple> witnessed;
  for (const WitnessRow& row : witness_map()) witnessed.insert(row.triple);
  CHECK(witnessed.size() == 61);
  CHECK(witnessed == pass);
}

TEST_CASE("every witness regex realises its triple") {
  std::set<TypeTriple> pass = rule_pass_set();
  for (const WitnessRow& row : witness_map()) {
    INFO("triple " << triple_name(row.triple) << " witness " << row.regex);
    Kernel lang = compile_src(row.regex);
    std::set<TypeTriple> feasible = feasible_triples(lang);
    CHECK(feasible.count(row.triple) == 1);
    // No witness language realises a triple the rule excludes.
    for (const TypeTriple& t : feasible) CHECK(pass.count(t) == 1);
  }
}

TEST_CASE("catalogue patterns realise no rule-excluded triple") {
  std::set<TypeTriple> pass = rule_pass_set();
  for (const Pattern& p : pattern_catalog()) {
    INFO("pattern " << p.name);
    for (const TypeTriple& t : feasible_triples(p.lang))
      CHECK(pass.count(t) == 1);
  }
}

TEST_CASE("dec_seq feasible triples and representatives") {
  const Kernel& lang = find_pattern("dec_seq")->lang;
  std::set<TypeTriple> expected = {
      triple(WordType::Pre, WordType::Fac, WordType::Suf),
      triple(WordType::Pre, WordType::Pre, WordType::In),
      triple(WordType::In, WordType::Suf, WordType::Suf),
      triple(WordType::In, WordType::In, WordType::In),
      triple(WordType::Pre, WordType::Out, WordType::Suf),
  };
  CHECK(feasible_triples(lang) == expected);
  std::set<RepTriple> reps = {
      rep(RepComponent::PRE, RepComponent::FAC, RepComponent::SUF),
      rep(RepComponent::PRE, RepComponent::OUT, RepComponent::SUF),
  };
  CHECK(representatives(lang) == reps);
}

TEST_CASE("single-letter patterns admit no triple") {
  for (const char* name : {"dec", "inc", "steady"}) {
    const Kernel& lang = find_pattern(name)->lang;
    CHECK(feasible_triples(lang).empty());
    CHECK(representatives(lang).empty());
  }
}

TEST_CASE("triple language words decode into marked splits") {
  const Kernel& lang = find_pattern("dec_seq")->lang;
  Kernel tl = triple_language(
      lang, triple(WordType::Pre, WordType::Out, WordType::Suf));
  std::vector<Word> words = kernel_enumerate(tl, 6);
  REQUIRE_FALSE(words.empty());
  for (const Word& w : words) {
    std::vector<std::size_t> marks;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == kSync1) marks.push_back(i);
    REQUIRE(marks.size() == 2);
    std::string w1 = w.substr(0, marks[0]);
    std::string w2 = w.substr(marks[0] + 1, marks[1] - marks[0] - 1);
    std::string w3 = w.substr(marks[1] + 1);
    CHECK_FALSE(w2.empty());
    CHECK_FALSE((w1.empty() && w3.empty()));
    CHECK(kernel_accepts(lang, w1 + w2 + w3));
    CHECK(classify_word(lang, w1 + w2) == WordType::Pre);
    CHECK(classify_word(lang, w2) == WordType::Out);
    CHECK(classify_word(lang, w2 + w3) == WordType::Suf);
  }
}

TEST_CASE("catalogue classes") {
  using RC = RepComponent;
  std::set<RepTriple> pfs_pos = {rep(RC::PRE, RC::FAC, RC::SUF),
                                 rep(RC::PRE, RC::OUT, RC::SUF)};
  std::set<RepTriple> pfs_poo_oos = {rep(RC::PRE, RC::FAC, RC::SUF),
                                     rep(RC::PRE, RC::OUT, RC::OUT),
                                     rep(RC::OUT, RC::OUT, RC::SUF)};
  std::set<RepTriple> pfs_poo_oos_ooo = {rep(RC::PRE, RC::FAC, RC::SUF),
                                         rep(RC::PRE, RC::OUT, RC::OUT),
                                         rep(RC::OUT, RC::OUT, RC::SUF),
                                         rep(RC::OUT, RC::OUT, RC::OUT)};
  std::set<RepTriple> iii = {rep(RC::IN, RC::IN, RC::IN)};
  std::set<RepTriple> ooo_ioo_ooi = {rep(RC::OUT, RC::OUT, RC::OUT),
                                     rep(RC::IN, RC::OUT, RC::OUT),
                                     rep(RC::OUT, RC::OUT, RC::IN)};
  std::set<RepTriple> zigzag_set = {rep(RC::OUT, RC::OUT, RC::OUT),
                                    rep(RC::IN, RC::OUT, RC::OUT),
                                    rep(RC::OUT, RC::OUT, RC::IN),
                                    rep(RC::IN, RC::OUT, RC::IN),
                                    rep(RC::IN, RC::IN, RC::IN)};
  std::map<std::set<RepTriple>, std::vector<std::string>> expected = {
      {pfs_pos, {"dec_seq", "inc_seq"}},
      {pfs_poo_oos, {"gorge", "summit"}},
      {pfs_poo_oos_ooo, {"peak", "valley"}},
      {iii, {"steady_seq", "strictly_dec_seq", "strictly_inc_seq"}},
      {ooo_ioo_ooi,
       {"dec_terrace", "inc_terrace", "plain", "plateau", "proper_plain",
        "proper_plateau"}},
      {zigzag_set, {"zigzag"}},
  };
  auto got = classify_catalog();
  for (auto& [header, members] : got) std::sort(members.begin(), members.end());
  CHECK(got == expected);
}

TEST_CASE("representative names") {
  CHECK(rep_triple_name(rep(RepComponent::PRE, RepComponent::FAC,
                            RepComponent::SUF)) == "PRE-FAC-SUF");
  CHECK(triple_name(triple(WordType::Pre, WordType::Out, WordType::Suf)) ==
        "pre,out,suf");
}
