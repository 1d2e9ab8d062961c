// Word-type languages, triple feasibility, and representative computation.
#include "slidets/classify.hpp"

#include <initializer_list>
#include <stdexcept>

namespace slidets {

namespace {

struct Ctx {
  Kernel letters = kernel_letters({kLess, kEqual, kGreater});
  Kernel star = kernel_star(letters);
  Kernel plus = kernel_plus(letters);
  Kernel mark = kernel_word(Word(1, kSync1));
};

const Ctx& ctx() {
  static const Ctx c;
  return c;
}

Kernel cat(std::initializer_list<Kernel> parts) {
  Kernel acc = kernel_epsilon({});
  for (const Kernel& p : parts) acc = kernel_concat(acc, p);
  return acc;
}

Kernel without(const Kernel& universe, const Kernel& sub) {
  return kernel_difference(universe, sub);
}

// The two-mark language whose nonemptiness decides feasibility, assembled
// from four constraints intersected together:
//   whole      — the word with both marks erased belongs to the language;
//   head       — the part before the second mark (first mark erased) has the
//                required prefix type;
//   body       — the part between the marks has the required middle type,
//                and the flanks are not both empty;
//   tail       — the part after the first mark (second mark erased) has the
//                required suffix type.
Kernel triple_language_cached(const Kernel& lang,
                              const std::array<Kernel, 5>& types,
                              TypeTriple t) {
  const Ctx& c = ctx();
  Kernel whole = kernel_shuffle(kernel_shuffle(lang, kSync1), kSync1);
  Kernel head =
      cat({kernel_shuffle(types[static_cast<int>(t.prefix)], kSync1), c.mark,
           c.star});
  const Kernel& mid = types[static_cast<int>(t.middle)];
  Kernel body = kernel_union(cat({c.star, c.mark, mid, c.mark, c.plus}),
                             cat({c.plus, c.mark, mid, c.mark, c.star}));
  Kernel tail =
      cat({c.star, c.mark, kernel_shuffle(types[static_cast<int>(t.suffix)],
                                          kSync1)});
  return kernel_intersect(kernel_intersect(whole, head),
                          kernel_intersect(body, tail));
}

std::array<Kernel, 5> all_type_languages(const Kernel& lang) {
  std::array<Kernel, 5> types;
  for (WordType t : kWordTypes)
    types[static_cast<int>(t)] = word_type_language(lang, t);
  return types;
}

}  // namespace

const char* word_type_name(WordType t) {
  switch (t) {
    case WordType::Out: return "out";
    case WordType::Fac: return "fac";
    case WordType::Pre: return "pre";
    case WordType::Suf: return "suf";
    case WordType::In: return "in";
  }
  throw std::logic_error("bad word type");
}

Kernel word_type_language(const Kernel& lang, WordType t) {
  const Ctx& c = ctx();
  switch (t) {
    case WordType::Out:
      return without(c.plus, cat({c.star, lang, c.star}));
    case WordType::Fac:
      return kernel_intersect(
          kernel_intersect(cat({c.plus, lang, c.plus}),
                           without(c.star, cat({lang, c.plus}))),
          kernel_intersect(without(c.star, cat({c.plus, lang})),
                           without(c.star, lang)));
    case WordType::Pre:
      return kernel_intersect(
          cat({lang, c.plus}),
          kernel_intersect(without(c.star, cat({c.plus, lang})),
                           without(c.star, lang)));
    case WordType::Suf:
      return kernel_intersect(
          cat({c.plus, lang}),
          kernel_intersect(without(c.star, cat({lang, c.plus})),
                           without(c.star, lang)));
    case WordType::In:
      return kernel_intersect(cat({lang, c.star}), cat({c.star, lang}));
  }
  throw std::logic_error("bad word type");
}

WordType classify_word(const Kernel& lang, const Word& w) {
  if (w.empty()) throw std::invalid_argument("cannot classify empty word");
  for (WordType t : kWordTypes)
    if (kernel_accepts(word_type_language(lang, t), w)) return t;
  throw std::logic_error("word types failed to cover a word");
}

std::string triple_name(TypeTriple t) {
  std::string s = word_type_name(t.prefix);
  s += ',';
  s += word_type_name(t.middle);
  s += ',';
  s += word_type_name(t.suffix);
  return s;
}

Kernel triple_language(const Kernel& lang, TypeTriple t) {
  return triple_language_cached(lang, all_type_languages(lang), t);
}

bool triple_feasible(const Kernel& lang, TypeTriple t) {
  return !kernel_is_empty(triple_language(lang, t));
}

std::set<TypeTriple> feasible_triples(const Kernel& lang) {
  const Ctx& c = ctx();
  std::array<Kernel, 5> types = all_type_languages(lang);
  Kernel whole = kernel_shuffle(kernel_shuffle(lang, kSync1), kSync1);
  std::array<Kernel, 5> heads, bodies, tails;
  for (WordType t : kWordTypes) {
    int i = static_cast<int>(t);
    Kernel shuffled = kernel_shuffle(types[i], kSync1);
    heads[i] = cat({shuffled, c.mark, c.star});
    bodies[i] =
        kernel_union(cat({c.star, c.mark, types[i], c.mark, c.plus}),
                     cat({c.plus, c.mark, types[i], c.mark, c.star}));
    tails[i] = cat({c.star, c.mark, shuffled});
  }
  std::set<TypeTriple> out;
  for (WordType t1 : kWordTypes) {
    Kernel after_head =
        kernel_intersect(whole, heads[static_cast<int>(t1)]);
    if (kernel_is_empty(after_head)) continue;
    for (WordType t2 : kWordTypes) {
      Kernel after_body =
          kernel_intersect(after_head, bodies[static_cast<int>(t2)]);
      if (kernel_is_empty(after_body)) continue;
      for (WordType t3 : kWordTypes) {
        if (!kernel_is_empty(
                kernel_intersect(after_body, tails[static_cast<int>(t3)])))
          out.insert({t1, t2, t3});
      }
    }
  }
  return out;
}

bool triple_possibly_feasible(TypeTriple t) {
  auto is = [](WordType x, std::initializer_list<WordType> set) {
    for (WordType y : set)
      if (x == y) return true;
    return false;
  };
  if (t.middle != WordType::Out &&
      (t.prefix == WordType::Out || t.suffix == WordType::Out))
    return false;
  if (is(t.prefix, {WordType::Fac, WordType::Pre}) &&
      is(t.middle, {WordType::Suf, WordType::In}))
    return false;
  if (is(t.suffix, {WordType::Fac, WordType::Suf}) &&
      is(t.middle, {WordType::Pre, WordType::In}))
    return false;
  return true;
}

const char* rep_component_name(RepComponent c) {
  switch (c) {
    case RepComponent::OUT: return "OUT";
    case RepComponent::FAC: return "FAC";
    case RepComponent::PRE: return "PRE";
    case RepComponent::SUF: return "SUF";
    case RepComponent::PS: return "PS";
    case RepComponent::IN: return "IN";
  }
  throw std::logic_error("bad representative component");
}

std::string rep_triple_name(RepTriple t) {
  std::string s = rep_component_name(t.prefix);
  s += '-';
  s += rep_component_name(t.middle);
  s += '-';
  s += rep_component_name(t.suffix);
  return s;
}

std::set<RepTriple> representatives(const std::set<TypeTriple>& feasible) {
  // Group triples by which components are out, then summarise each group
  // component-wise.
  std::map<std::array<bool, 3>, std::vector<TypeTriple>> groups;
  for (const TypeTriple& t : feasible) {
    std::array<bool, 3> shape = {t.prefix == WordType::Out,
                                 t.middle == WordType::Out,
                                 t.suffix == WordType::Out};
    groups[shape].push_back(t);
  }
  auto summarise = [](const std::set<WordType>& seen) {
    if (seen == std::set<WordType>{WordType::Out}) return RepComponent::OUT;
    if (seen.count(WordType::Fac)) return RepComponent::FAC;
    bool pre = seen.count(WordType::Pre) != 0;
    bool suf = seen.count(WordType::Suf) != 0;
    if (pre && suf) return RepComponent::PS;
    if (pre) return RepComponent::PRE;
    if (suf) return RepComponent::SUF;
    return RepComponent::IN;
  };
  std::set<RepTriple> reps;
  for (const auto& [shape, triples] : groups) {
    std::set<WordType> s1, s2, s3;
    for (const TypeTriple& t : triples) {
      s1.insert(t.prefix);
      s2.insert(t.middle);
      s3.insert(t.suffix);
    }
    reps.insert({summarise(s1), summarise(s2), summarise(s3)});
  }
  return reps;
}

std::set<RepTriple> representatives(const Kernel& lang) {
  return representatives(feasible_triples(lang));
}

std::map<std::set<RepTriple>, std::vector<std::string>> classify_catalog() {
  // The sixteen patterns with catalogued window features.
  static const char* const kNames[] = {
      "dec_seq",       "dec_terrace",     "gorge",
      "inc_seq",       "inc_terrace",     "peak",
      "plain",         "plateau",         "proper_plain",
      "proper_plateau", "steady_seq",     "strictly_dec_seq",
      "strictly_inc_seq", "summit",       "valley",
      "zigzag"};
  std::map<std::set<RepTriple>, std::vector<std::string>> classes;
  for (const char* name : kNames) {
    const Pattern& p = *find_pattern(name);
    classes[representatives(p.lang)].push_back(p.name);
  }
  return classes;
}

}  // namespace slidets
