#include "slidets/automata.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace slidets {
namespace {

std::vector<Letter> sorted_unique(std::vector<Letter> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Letter> merge_alphabets(const std::vector<Letter>& a,
                                    const std::vector<Letter>& b) {
  std::vector<Letter> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return sorted_unique(std::move(r));
}

std::vector<int> sorted_unique_ints(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void tidy(Kernel& k) {
  k.alphabet = sorted_unique(std::move(k.alphabet));
  k.sources = sorted_unique_ints(std::move(k.sources));
  k.sinks = sorted_unique_ints(std::move(k.sinks));
  std::sort(k.arcs.begin(), k.arcs.end());
  k.arcs.erase(std::unique(k.arcs.begin(), k.arcs.end()), k.arcs.end());
}

Kernel canonical_empty(std::vector<Letter> alphabet) {
  Kernel k;
  k.alphabet = sorted_unique(std::move(alphabet));
  return k;
}

// Raw NFA-level epsilon test; valid because no construction introduces
// epsilon arcs.
bool raw_contains_epsilon(const Kernel& k) {
  for (int s : k.sources)
    for (int f : k.sinks)
      if (s == f) return true;
  return false;
}

struct Adjacency {
  // per state, sorted by letter
  std::vector<std::vector<std::pair<Letter, int>>> out;
  explicit Adjacency(const Kernel& k) : out(k.num_states) {
    for (const Arc& a : k.arcs) out[a.from].push_back({a.letter, a.to});
    for (auto& v : out) std::sort(v.begin(), v.end());
  }
  std::vector<int> step(const std::vector<int>& subset, Letter c) const {
    std::vector<int> r;
    for (int q : subset) {
      auto lo = std::lower_bound(out[q].begin(), out[q].end(),
                                 std::make_pair(c, INT_MIN));
      for (auto it = lo; it != out[q].end() && it->first == c; ++it)
        r.push_back(it->second);
    }
    return sorted_unique_ints(std::move(r));
  }
};

struct Dfa {
  int num_states = 0;
  int start = 0;
  std::vector<Letter> alphabet;
  std::vector<std::vector<int>> next;  // -1 = missing
  std::vector<bool> accepting;
};

Dfa determinize(const Kernel& k) {
  Adjacency adj(k);
  Dfa d;
  d.alphabet = k.alphabet;
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> subsets;
  std::vector<int> start = sorted_unique_ints(k.sources);
  id[start] = 0;
  subsets.push_back(start);
  std::set<int> sinkset(k.sinks.begin(), k.sinks.end());
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    const std::vector<int> subset = subsets[cur];
    d.next.emplace_back(d.alphabet.size(), -1);
    bool acc = false;
    for (int q : subset) acc = acc || sinkset.count(q);
    d.accepting.push_back(acc);
    for (std::size_t ci = 0; ci < d.alphabet.size(); ++ci) {
      std::vector<int> tgt = adj.step(subset, d.alphabet[ci]);
      if (tgt.empty()) continue;
      auto [it, fresh] = id.try_emplace(tgt, static_cast<int>(subsets.size()));
      if (fresh) subsets.push_back(std::move(tgt));
      d.next[cur][ci] = it->second;
    }
  }
  d.num_states = static_cast<int>(subsets.size());
  d.start = 0;
  return d;
}

// Drop states that cannot reach an accepting state.  Returns false when the
// start state itself is dropped (empty language).
bool trim(Dfa& d) {
  const int na = static_cast<int>(d.alphabet.size());
  std::vector<std::vector<int>> rev(d.num_states);
  for (int q = 0; q < d.num_states; ++q)
    for (int ci = 0; ci < na; ++ci)
      if (d.next[q][ci] >= 0) rev[d.next[q][ci]].push_back(q);
  std::vector<char> keep(d.num_states, 0);
  std::deque<int> work;
  for (int q = 0; q < d.num_states; ++q)
    if (d.accepting[q]) {
      keep[q] = 1;
      work.push_back(q);
    }
  while (!work.empty()) {
    int q = work.front();
    work.pop_front();
    for (int p : rev[q])
      if (!keep[p]) {
        keep[p] = 1;
        work.push_back(p);
      }
  }
  if (!keep[d.start]) return false;
  std::vector<int> remap(d.num_states, -1);
  int n = 0;
  for (int q = 0; q < d.num_states; ++q)
    if (keep[q]) remap[q] = n++;
  Dfa t;
  t.num_states = n;
  t.start = remap[d.start];
  t.alphabet = d.alphabet;
  t.next.assign(n, std::vector<int>(na, -1));
  t.accepting.assign(n, false);
  for (int q = 0; q < d.num_states; ++q) {
    if (!keep[q]) continue;
    t.accepting[remap[q]] = d.accepting[q];
    for (int ci = 0; ci < na; ++ci) {
      int to = d.next[q][ci];
      if (to >= 0 && keep[to]) t.next[remap[q]][ci] = remap[to];
    }
  }
  d = std::move(t);
  return true;
}

// Moore partition refinement on a partial DFA; missing transitions behave as
// a virtual dead class that no trim state can equal.
void minimize(Dfa& d) {
  const int na = static_cast<int>(d.alphabet.size());
  std::vector<int> cls(d.num_states, 0);
  int count = 1;
  for (;;) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> fresh(d.num_states);
    for (int q = 0; q < d.num_states; ++q) {
      std::vector<int> sig;
      sig.reserve(na + 2);
      sig.push_back(d.accepting[q] ? 1 : 0);
      sig.push_back(cls[q]);
      for (int ci = 0; ci < na; ++ci) {
        int to = d.next[q][ci];
        sig.push_back(to < 0 ? -1 : cls[to]);
      }
      auto [it, ins] = sig_id.try_emplace(std::move(sig),
                                          static_cast<int>(sig_id.size()));
      (void)ins;
      fresh[q] = it->second;
    }
    int fresh_count = static_cast<int>(sig_id.size());
    cls = std::move(fresh);
    if (fresh_count == count) break;
    count = fresh_count;
  }
  Dfa m;
  m.num_states = count;
  m.start = cls[d.start];
  m.alphabet = d.alphabet;
  m.next.assign(count, std::vector<int>(na, -1));
  m.accepting.assign(count, false);
  for (int q = 0; q < d.num_states; ++q) {
    m.accepting[cls[q]] = d.accepting[q];
    for (int ci = 0; ci < na; ++ci)
      if (d.next[q][ci] >= 0) m.next[cls[q]][ci] = cls[d.next[q][ci]];
  }
  d = std::move(m);
}

// Renumber states in breadth-first order from the start, exploring arcs in
// letter order, so equal languages yield identical structures.
Kernel canonical_kernel(const Dfa& d) {
  const int na = static_cast<int>(d.alphabet.size());
  std::vector<int> order(d.num_states, -1);
  std::deque<int> work{d.start};
  order[d.start] = 0;
  int n = 1;
  while (!work.empty()) {
    int q = work.front();
    work.pop_front();
    for (int ci = 0; ci < na; ++ci) {
      int to = d.next[q][ci];
      if (to >= 0 && order[to] < 0) {
        order[to] = n++;
        work.push_back(to);
      }
    }
  }
  Kernel k;
  k.num_states = n;
  k.alphabet = d.alphabet;
  k.sources = {0};
  for (int q = 0; q < d.num_states; ++q) {
    if (order[q] < 0) continue;  // unreachable (cannot occur after trim)
    if (d.accepting[q]) k.sinks.push_back(order[q]);
    for (int ci = 0; ci < na; ++ci)
      if (d.next[q][ci] >= 0)
        k.arcs.push_back({order[q], d.alphabet[ci], order[d.next[q][ci]]});
  }
  tidy(k);
  return k;
}

// Appends a disjoint copy of src to dst, returning the state offset.
int append_states(Kernel& dst, const Kernel& src) {
  int off = dst.num_states;
  dst.num_states += src.num_states;
  dst.alphabet = merge_alphabets(dst.alphabet, src.alphabet);
  for (const Arc& a : src.arcs)
    dst.arcs.push_back({a.from + off, a.letter, a.to + off});
  return off;
}

int enum_cap(int max_len) {
  if (max_len >= 0) return max_len;
  if (const char* env = std::getenv("SLIDETS_MAX_ENUM_LEN")) {
    int v = std::atoi(env);
    if (v >= 0) return v;
  }
  return 8;
}

}  // namespace

Kernel kernel_empty(std::vector<Letter> alphabet) {
  return canonical_empty(std::move(alphabet));
}

Kernel kernel_epsilon(std::vector<Letter> alphabet) {
  Kernel k;
  k.num_states = 1;
  k.alphabet = sorted_unique(std::move(alphabet));
  k.sources = {0};
  k.sinks = {0};
  return k;
}

Kernel kernel_word(const Word& w, std::vector<Letter> alphabet) {
  Kernel k;
  k.num_states = static_cast<int>(w.size()) + 1;
  k.alphabet = std::move(alphabet);
  for (char c : w) k.alphabet.push_back(c);
  k.sources = {0};
  k.sinks = {k.num_states - 1};
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    k.arcs.push_back({i, w[i], i + 1});
  tidy(k);
  return k;
}

Kernel kernel_letters(const std::vector<Letter>& letters) {
  std::vector<Word> ws;
  for (Letter c : letters) ws.push_back(Word(1, c));
  return kernel_words(ws);
}

Kernel kernel_words(const std::vector<Word>& words,
                    std::vector<Letter> alphabet) {
  Kernel acc = kernel_empty(std::move(alphabet));
  for (const Word& w : words) acc = kernel_union(acc, kernel_word(w));
  return acc;
}

Kernel normalize(const Kernel& k) {
  if (k.num_states == 0 || k.sources.empty() || k.sinks.empty())
    return canonical_empty(k.alphabet);
  Dfa d = determinize(k);
  if (!trim(d)) return canonical_empty(k.alphabet);
  minimize(d);
  return canonical_kernel(d);
}

Kernel kernel_union(const Kernel& a, const Kernel& b) {
  Kernel k;
  int offa = append_states(k, a);
  int offb = append_states(k, b);
  for (int s : a.sources) k.sources.push_back(s + offa);
  for (int s : b.sources) k.sources.push_back(s + offb);
  for (int f : a.sinks) k.sinks.push_back(f + offa);
  for (int f : b.sinks) k.sinks.push_back(f + offb);
  tidy(k);
  return normalize(k);
}

Kernel kernel_intersect(const Kernel& a, const Kernel& b) {
  std::vector<Letter> alphabet = merge_alphabets(a.alphabet, b.alphabet);
  Adjacency adja(a), adjb(b);
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> pairs;
  Kernel k;
  k.alphabet = alphabet;
  for (int sa : a.sources)
    for (int sb : b.sources) {
      auto [it, fresh] =
          id.try_emplace({sa, sb}, static_cast<int>(pairs.size()));
      if (fresh) {
        pairs.push_back({sa, sb});
        k.sources.push_back(it->second);
      }
    }
  std::set<int> sinka(a.sinks.begin(), a.sinks.end());
  std::set<int> sinkb(b.sinks.begin(), b.sinks.end());
  for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
    auto [qa, qb] = pairs[cur];
    if (sinka.count(qa) && sinkb.count(qb))
      k.sinks.push_back(static_cast<int>(cur));
    for (const auto& [ca, ta] : adja.out[qa])
      for (const auto& [cb, tb] : adjb.out[qb]) {
        if (ca != cb) continue;
        auto [it, fresh] =
            id.try_emplace({ta, tb}, static_cast<int>(pairs.size()));
        if (fresh) pairs.push_back({ta, tb});
        k.arcs.push_back({static_cast<int>(cur), ca, it->second});
      }
  }
  k.num_states = static_cast<int>(pairs.size());
  tidy(k);
  return normalize(k);
}

Kernel kernel_complement(const Kernel& a) {
  // Complete subset-construction DFA over a's own alphabet, accepting
  // states flipped.  The empty subset acts as the completing dead state.
  Adjacency adj(a);
  const std::vector<Letter>& alphabet = a.alphabet;
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> subsets;
  std::vector<int> start = sorted_unique_ints(a.sources);
  id[start] = 0;
  subsets.push_back(start);
  std::set<int> sinkset(a.sinks.begin(), a.sinks.end());
  Kernel k;
  k.alphabet = alphabet;
  k.sources = {0};
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    const std::vector<int> subset = subsets[cur];
    bool acc = false;
    for (int q : subset) acc = acc || sinkset.count(q);
    if (!acc) k.sinks.push_back(static_cast<int>(cur));
    for (Letter c : alphabet) {
      std::vector<int> tgt = adj.step(subset, c);
      auto [it, fresh] = id.try_emplace(tgt, static_cast<int>(subsets.size()));
      if (fresh) subsets.push_back(std::move(tgt));
      k.arcs.push_back({static_cast<int>(cur), c, it->second});
    }
  }
  k.num_states = static_cast<int>(subsets.size());
  tidy(k);
  return normalize(k);
}

Kernel kernel_difference(const Kernel& a, const Kernel& b) {
  std::vector<Letter> alphabet = merge_alphabets(a.alphabet, b.alphabet);
  Kernel bu = b;
  bu.alphabet = alphabet;
  Kernel au = a;
  au.alphabet = alphabet;
  return kernel_intersect(au, kernel_complement(bu));
}

Kernel kernel_concat(const Kernel& a, const Kernel& b) {
  Kernel k;
  int offa = append_states(k, a);
  int offb = append_states(k, b);
  std::set<int> sinka(a.sinks.begin(), a.sinks.end());
  for (const Arc& arc : a.arcs)
    if (sinka.count(arc.to))
      for (int s : b.sources)
        k.arcs.push_back({arc.from + offa, arc.letter, s + offb});
  for (int s : a.sources) k.sources.push_back(s + offa);
  if (raw_contains_epsilon(a))
    for (int s : b.sources) k.sources.push_back(s + offb);
  for (int f : b.sinks) k.sinks.push_back(f + offb);
  if (raw_contains_epsilon(b))
    for (int f : a.sinks) k.sinks.push_back(f + offa);
  tidy(k);
  return normalize(k);
}

Kernel kernel_plus(const Kernel& a) {
  Kernel k = a;
  std::set<int> sinka(a.sinks.begin(), a.sinks.end());
  for (const Arc& arc : a.arcs)
    if (sinka.count(arc.to))
      for (int s : a.sources) k.arcs.push_back({arc.from, arc.letter, s});
  tidy(k);
  return normalize(k);
}

Kernel kernel_optional(const Kernel& a) {
  return kernel_union(a, kernel_epsilon(a.alphabet));
}

Kernel kernel_star(const Kernel& a) { return kernel_optional(kernel_plus(a)); }

Kernel kernel_shuffle(const Kernel& a, Letter c) {
  // Two layers: states (q,0) before the inserted mark, (q,1) after.
  Kernel k;
  k.num_states = 2 * a.num_states;
  k.alphabet = merge_alphabets(a.alphabet, {c});
  auto lo = [](int q) { return 2 * q; };
  auto hi = [](int q) { return 2 * q + 1; };
  for (const Arc& arc : a.arcs) {
    k.arcs.push_back({lo(arc.from), arc.letter, lo(arc.to)});
    k.arcs.push_back({hi(arc.from), arc.letter, hi(arc.to)});
  }
  for (int q = 0; q < a.num_states; ++q) k.arcs.push_back({lo(q), c, hi(q)});
  for (int s : a.sources) k.sources.push_back(lo(s));
  for (int f : a.sinks) k.sinks.push_back(hi(f));
  tidy(k);
  return normalize(k);
}

Kernel kernel_reverse(const Kernel& a) {
  Kernel k;
  k.num_states = a.num_states;
  k.alphabet = a.alphabet;
  k.sources = a.sinks;
  k.sinks = a.sources;
  for (const Arc& arc : a.arcs) k.arcs.push_back({arc.to, arc.letter, arc.from});
  tidy(k);
  return normalize(k);
}

Kernel kernel_relabel(const Kernel& a, const std::map<Letter, Letter>& sub) {
  Kernel k = a;
  k.alphabet.clear();
  for (Letter c : a.alphabet) {
    auto it = sub.find(c);
    k.alphabet.push_back(it == sub.end() ? c : it->second);
  }
  if (sorted_unique(k.alphabet).size() != a.alphabet.size())
    throw std::invalid_argument("relabel substitution must stay injective");
  for (Arc& arc : k.arcs) {
    auto it = sub.find(arc.letter);
    if (it != sub.end()) arc.letter = it->second;
  }
  tidy(k);
  return normalize(k);
}

Kernel kernel_truncate1(const Kernel& a) {
  Kernel n = normalize(a);
  std::vector<Letter> first;
  for (const Arc& arc : n.arcs)
    if (arc.from == 0) first.push_back(arc.letter);
  return kernel_letters(sorted_unique(std::move(first)));
}

Kernel kernel_tail1(const Kernel& a) {
  return kernel_truncate1(kernel_reverse(a));
}

Kernel kernel_prefixes(const Kernel& a) {
  Kernel n = normalize(a);
  if (n.num_states == 0) return n;
  n.sinks.clear();
  for (int q = 0; q < n.num_states; ++q) n.sinks.push_back(q);
  return normalize(n);
}

Kernel kernel_suffixes(const Kernel& a) {
  Kernel n = normalize(a);
  if (n.num_states == 0) return n;
  n.sources.clear();
  for (int q = 0; q < n.num_states; ++q) n.sources.push_back(q);
  return normalize(n);
}

bool kernel_is_empty(const Kernel& a) { return normalize(a).num_states == 0; }

bool kernel_contains_epsilon(const Kernel& a) {
  Kernel n = normalize(a);
  return !n.sinks.empty() &&
         std::binary_search(n.sinks.begin(), n.sinks.end(), 0);
}

bool kernel_accepts(const Kernel& a, const Word& w) {
  DfaTable t = make_dfa_table(normalize(a));
  if (t.num_states == 0) return false;
  int q = 0;
  for (char c : w) {
    q = t.step(q, c);
    if (q < 0) return false;
  }
  return t.accepting[q];
}

std::optional<int> kernel_shortest_length(const Kernel& a) {
  Kernel n = normalize(a);
  if (n.num_states == 0) return std::nullopt;
  Adjacency adj(n);
  std::vector<int> dist(n.num_states, -1);
  std::deque<int> work{0};
  dist[0] = 0;
  std::set<int> sinkset(n.sinks.begin(), n.sinks.end());
  while (!work.empty()) {
    int q = work.front();
    work.pop_front();
    if (sinkset.count(q)) return dist[q];
    for (const auto& [c, to] : adj.out[q])
      if (dist[to] < 0) {
        dist[to] = dist[q] + 1;
        work.push_back(to);
      }
  }
  return std::nullopt;  // unreachable on a trim automaton
}

bool kernel_same_language(const Kernel& a, const Kernel& b) {
  Kernel na = normalize(a), nb = normalize(b);
  return na.num_states == nb.num_states && na.sources == nb.sources &&
         na.sinks == nb.sinks && na.arcs == nb.arcs;
}

std::vector<Word> kernel_enumerate(const Kernel& a, int max_len) {
  const int cap = enum_cap(max_len);
  Kernel n = normalize(a);
  std::vector<Word> out;
  if (n.num_states == 0) return out;
  DfaTable t = make_dfa_table(n);
  // Distance from each state to an accepting state, for pruning.
  std::vector<std::vector<int>> rev(t.num_states);
  for (int q = 0; q < t.num_states; ++q)
    for (std::size_t ci = 0; ci < t.alphabet.size(); ++ci)
      if (t.next[q][ci] >= 0) rev[t.next[q][ci]].push_back(q);
  std::vector<int> dist(t.num_states, -1);
  std::deque<int> work;
  for (int q = 0; q < t.num_states; ++q)
    if (t.accepting[q]) {
      dist[q] = 0;
      work.push_back(q);
    }
  while (!work.empty()) {
    int q = work.front();
    work.pop_front();
    for (int p : rev[q])
      if (dist[p] < 0) {
        dist[p] = dist[q] + 1;
        work.push_back(p);
      }
  }
  Word buf;
  auto dfs = [&](auto&& self, int q, int remaining) -> void {
    if (remaining == 0) {
      if (t.accepting[q]) out.push_back(buf);
      return;
    }
    for (std::size_t ci = 0; ci < t.alphabet.size(); ++ci) {
      int to = t.next[q][ci];
      if (to < 0 || dist[to] > remaining - 1) continue;
      buf.push_back(t.alphabet[ci]);
      self(self, to, remaining - 1);
      buf.pop_back();
    }
  };
  for (int len = 0; len <= cap; ++len) dfs(dfs, 0, len);
  return out;
}

std::string kernel_to_dot(const Kernel& a, const std::string& name) {
  Kernel n = normalize(a);
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  os << "  start [shape=point];\n";
  std::set<int> sinkset(n.sinks.begin(), n.sinks.end());
  for (int q = 0; q < n.num_states; ++q)
    os << "  q" << q << " [shape="
       << (sinkset.count(q) ? "doublecircle" : "circle") << "];\n";
  if (n.num_states > 0) os << "  start -> q0;\n";
  for (const Arc& arc : n.arcs)
    os << "  q" << arc.from << " -> q" << arc.to << " [label=\"" << arc.letter
       << "\"];\n";
  os << "}\n";
  return os.str();
}

int DfaTable::letter_index(Letter c) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == c) return static_cast<int>(i);
  return -1;
}

int DfaTable::step(int state, Letter c) const {
  if (state < 0) return -1;
  int ci = letter_index(c);
  if (ci < 0) return -1;
  return next[state][ci];
}

DfaTable make_dfa_table(const Kernel& canonical) {
  DfaTable t;
  t.num_states = canonical.num_states;
  t.alphabet = canonical.alphabet;
  t.next.assign(t.num_states, std::vector<int>(t.alphabet.size(), -1));
  t.accepting.assign(t.num_states, false);
  for (int f : canonical.sinks) t.accepting[f] = true;
  for (const Arc& a : canonical.arcs) {
    int ci = t.letter_index(a.letter);
    t.next[a.from][ci] = a.to;
  }
  t.accepts_epsilon = t.num_states > 0 && t.accepting[0];
  return t;
}

}  // namespace slidets
