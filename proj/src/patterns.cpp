#include "slidets/patterns.hpp"

#include <map>

namespace slidets {
namespace {

struct CatalogRow {
  const char* name;
  const char* regex;
  int before;
  int after;
};

constexpr CatalogRow kCatalogRows[] = {
    {"bump_on_dec_seq", ">><>>", 2, 1},
    {"dec", ">", 0, 0},
    {"dec_seq", ">(>|=)*>|>", 0, 0},
    {"dec_terrace", ">=+>", 1, 1},
    {"dip_on_inc_seq", "<<><<", 2, 1},
    {"gorge", "(>(>|=)*)*><((<|=)*<)*", 1, 1},
    {"inc", "<", 0, 0},
    {"inc_seq", "<(<|=)*<|<", 0, 0},
    {"inc_terrace", "<=+<", 1, 1},
    {"inflexion", "<(<|=)*>|>(>|=)*<", 1, 1},
    {"peak", "<(<|=)*(>|=)*>", 1, 1},
    {"plain", ">=*<", 1, 1},
    {"plateau", "<=*>", 1, 1},
    {"proper_plain", ">=+<", 1, 1},
    {"proper_plateau", "<=+>", 1, 1},
    {"steady", "=", 0, 0},
    {"steady_seq", "=+", 0, 0},
    {"strictly_dec_seq", ">+", 0, 0},
    {"strictly_inc_seq", "<+", 0, 0},
    {"summit", "(<(<|=)*)*<>((>|=)*>)*", 1, 1},
    {"valley", ">(>|=)*(<|=)*<", 1, 1},
    {"zigzag", "(<>)+<(>|eps)|(><)+>(<|eps)", 1, 1},
};

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> kAliases = {
      {"bump_on_decreasing_sequence", "bump_on_dec_seq"},
      {"decreasing", "dec"},
      {"decreasing_sequence", "dec_seq"},
      {"decreasing_terrace", "dec_terrace"},
      {"dip_on_increasing_sequence", "dip_on_inc_seq"},
      {"increasing", "inc"},
      {"increasing_sequence", "inc_seq"},
      {"increasing_terrace", "inc_terrace"},
      {"steady_sequence", "steady_seq"},
      {"strictly_decreasing_sequence", "strictly_dec_seq"},
      {"strictly_increasing_sequence", "strictly_inc_seq"},
  };
  return kAliases;
}

// Shared building blocks over the signature alphabet.
struct Sigma {
  Kernel letters = kernel_letters({kLess, kEqual, kGreater});
  Kernel star = kernel_star(letters);
  Kernel plus = kernel_plus(letters);
  Kernel mark = kernel_word(Word(1, kSync1));
};

const Sigma& sigma() {
  static const Sigma s;
  return s;
}

Kernel cat(std::initializer_list<Kernel> parts) {
  Kernel r = kernel_epsilon({});
  for (const Kernel& p : parts) r = kernel_concat(r, p);
  return r;
}

Kernel shuffled(const Kernel& k, int marks) {
  Kernel r = k;
  for (int i = 0; i < marks; ++i) r = kernel_shuffle(r, kSync1);
  return r;
}

bool empty_intersection(std::initializer_list<Kernel> parts) {
  const Kernel* first = parts.begin();
  Kernel r = *first;
  for (auto it = parts.begin() + 1; it != parts.end(); ++it) {
    r = kernel_intersect(r, *it);
    if (r.num_states == 0) return true;
  }
  return r.num_states == 0;
}

bool convex_ordered_violation(const Kernel& L) {
  const Sigma& S = sigma();
  Kernel outside = kernel_difference(S.plus, L);
  return !empty_intersection({
      shuffled(L, 2),
      cat({S.star, S.mark, L, S.star, L, S.mark, S.star}),
      cat({S.star, S.mark, outside, S.mark, S.star}),
  });
}

bool convex_overlap_violation(const Kernel& L) {
  const Sigma& S = sigma();
  Kernel outside = kernel_difference(S.plus, L);
  return !empty_intersection({
      shuffled(L, 4),
      cat({S.star, S.mark, shuffled(L, 1), S.mark, S.plus, S.mark, S.star}),
      cat({S.star, S.mark, S.plus, S.mark, shuffled(L, 1), S.mark, S.star}),
      cat({S.star, S.mark, shuffled(outside, 2), S.mark, S.star}),
  });
}

// An occurrence-free stretch overlapping the tail of an occurrence: four
// marks m1 < m2 < m3 < m4 such that (m1,m3) spells an L word, (m2,m4) spells
// a word with no L factor, and both (m1,m2) and (m2,m3) are nonempty.
bool out_in_overlap_violation(const Kernel& L) {
  const Sigma& S = sigma();
  Kernel no_occurrence =
      kernel_difference(S.plus, cat({S.star, L, S.star}));
  return !empty_intersection({
      shuffled(L, 4),
      cat({S.star, S.mark, S.plus, S.mark, shuffled(no_occurrence, 1),
           S.mark, S.star}),
      cat({S.star, S.mark, shuffled(L, 1), S.mark, S.star, S.mark, S.star}),
      cat({S.star, S.mark, S.plus, S.mark, S.plus, S.mark, S.star, S.mark,
           S.star}),
  });
}

std::optional<Letter> letter_property(const Kernel& L) {
  std::optional<Letter> found;
  for (Letter e : {kLess, kEqual, kGreater}) {
    std::vector<Letter> others;
    for (Letter c : {kLess, kEqual, kGreater})
      if (c != e) others.push_back(c);
    bool unavoidable =
        kernel_is_empty(kernel_intersect(kernel_star(kernel_letters(others)), L));
    bool is_word = kernel_accepts(L, Word(1, e));
    if (unavoidable && is_word) {
      if (found)
        throw std::logic_error("two letters satisfy the letter property");
      found = e;
    }
  }
  return found;
}

std::optional<Letter> suffix_unavoidable_property(const Kernel& L) {
  const Sigma& S = sigma();
  std::optional<Letter> found;
  for (Letter e : {kLess, kEqual, kGreater}) {
    std::vector<Letter> others;
    for (Letter c : {kLess, kEqual, kGreater})
      if (c != e) others.push_back(c);
    bool unavoidable =
        kernel_is_empty(kernel_intersect(kernel_star(kernel_letters(others)), L));
    if (!unavoidable) continue;
    // No L word may have a suffix that starts at an `e` yet falls outside L.
    bool bad_suffix = !empty_intersection({
        shuffled(L, 1),
        cat({S.star, S.mark, kernel_word(Word(1, e)), S.star}),
        cat({S.star, S.mark, kernel_difference(S.star, L)}),
    });
    if (!bad_suffix) {
      if (found)
        throw std::logic_error(
            "two letters satisfy the unavoidable-suffix property");
      found = e;
    }
  }
  return found;
}

bool incompressible_property(const Kernel& L) {
  const Sigma& S = sigma();
  return kernel_is_empty(kernel_intersect(cat({S.plus, L, S.star}), L)) &&
         kernel_is_empty(kernel_intersect(cat({S.star, L, S.plus}), L));
}

bool factor_property(const Kernel& L, int omega) {
  const Sigma& S = sigma();
  Kernel window = kernel_epsilon({});
  for (int i = 0; i < omega; ++i) window = kernel_concat(window, S.letters);
  return empty_intersection({
      shuffled(L, 2),
      cat({S.star, S.mark, S.star, window, S.star, S.mark, S.star}),
      cat({S.star, S.mark, kernel_difference(S.star, L), S.mark, S.star}),
  });
}

bool inflexion_free_property(const Kernel& L) {
  const Sigma& S = sigma();
  Kernel up_down = cat({S.star, kernel_word("<"), S.star, kernel_word(">"),
                        S.star});
  Kernel down_up = cat({S.star, kernel_word(">"), S.star, kernel_word("<"),
                        S.star});
  return kernel_is_empty(kernel_intersect(L, up_down)) &&
         kernel_is_empty(kernel_intersect(L, down_up));
}

bool one_inflexion_property(const Kernel& L) {
  Kernel le = kernel_letters({kLess, kEqual});
  Kernel ge = kernel_letters({kGreater, kEqual});
  Kernel rise_fall = cat({kernel_star(le), kernel_word("<"),
                          kernel_star(kernel_word("=")), kernel_word(">"),
                          kernel_star(ge)});
  Kernel fall_rise = cat({kernel_star(ge), kernel_word(">"),
                          kernel_star(kernel_word("=")), kernel_word("<"),
                          kernel_star(le)});
  return kernel_is_empty(
      kernel_difference(L, kernel_union(rise_fall, fall_rise)));
}

bool single_letter_property(const Kernel& L) {
  return !kernel_is_empty(L) &&
         kernel_is_empty(kernel_difference(L, sigma().letters));
}

}  // namespace

Pattern make_pattern(std::string name, const std::string& regex_src,
                     int before, int after) {
  Pattern p;
  p.name = std::move(name);
  p.regex_src = regex_src;
  p.before = before;
  p.after = after;
  p.lang = regex_compile(regex_src);
  for (const Arc& a : p.lang.arcs)
    if (is_sync(a.letter))
      throw std::invalid_argument(
          "patterns must not use synchronisation marks");
  auto shortest = kernel_shortest_length(p.lang);
  if (!shortest)
    throw std::invalid_argument("pattern language must be nonempty");
  if (kernel_contains_epsilon(p.lang))
    throw std::invalid_argument("pattern language must not contain epsilon");
  p.omega = *shortest;
  return p;
}

const std::vector<Pattern>& pattern_catalog() {
  static const std::vector<Pattern> catalog = [] {
    std::vector<Pattern> v;
    for (const CatalogRow& row : kCatalogRows)
      v.push_back(make_pattern(row.name, row.regex, row.before, row.after));
    return v;
  }();
  return catalog;
}

const Pattern* find_pattern(std::string_view name) {
  std::string_view canonical = name;
  if (auto it = aliases().find(name); it != aliases().end())
    canonical = it->second;
  for (const Pattern& p : pattern_catalog())
    if (p.name == canonical) return &p;
  return nullptr;
}

Kernel mirror_language(const Kernel& lang) {
  return kernel_relabel(kernel_reverse(lang),
                        {{kLess, kGreater}, {kGreater, kLess}});
}

LanguageProperties analyze_language(const Kernel& lang) {
  LanguageProperties r;
  r.convex = !convex_ordered_violation(lang) &&
             !convex_overlap_violation(lang);
  r.inflexion_free = inflexion_free_property(lang);
  r.one_inflexion = one_inflexion_property(lang);
  r.exclude_out_in = !out_in_overlap_violation(lang) &&
                     !out_in_overlap_violation(kernel_reverse(lang));
  r.single_letter = single_letter_property(lang);
  r.letter = letter_property(lang);
  r.suffix_unavoidable = suffix_unavoidable_property(lang);
  r.incompressible = incompressible_property(lang);
  if (auto omega = kernel_shortest_length(lang); omega && *omega <= 5)
    r.factor = factor_property(lang, *omega);
  return r;
}

PatternProperties analyze_pattern(const Pattern& p) {
  PatternProperties r;
  static_cast<LanguageProperties&>(r) = analyze_language(p.lang);
  Kernel mirrored = mirror_language(p.lang);
  for (const Pattern& q : pattern_catalog()) {
    if (q.before != p.after || q.after != p.before) continue;
    if (kernel_same_language(q.lang, mirrored)) {
      r.reverse_name = q.name;
      break;
    }
  }
  return r;
}

}  // namespace slidets
