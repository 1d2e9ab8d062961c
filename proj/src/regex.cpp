#include "slidets/regex.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace slidets {
namespace {

Regex make(RegexNode::Kind kind, Letter c, Regex a, Regex b) {
  auto n = std::make_shared<RegexNode>();
  n->kind = kind;
  n->letter = c;
  n->left = std::move(a);
  n->right = std::move(b);
  return n;
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (!peek_is(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream os;
    os << what << " at offset " << pos;
    throw RegexParseError(os.str());
  }

  Regex parse_union() {
    Regex r = parse_diff();
    while (eat('|')) r = regex_union(r, parse_diff());
    return r;
  }
  Regex parse_diff() {
    Regex r = parse_isect();
    while (eat('\\')) r = regex_difference(r, parse_isect());
    return r;
  }
  Regex parse_isect() {
    Regex r = parse_concat();
    while (eat('&')) r = regex_intersect(r, parse_concat());
    return r;
  }
  bool at_atom() {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return c == '<' || c == '=' || c == '>' || c == '(' || c == 's' ||
           c == 'e';
  }
  Regex parse_concat() {
    if (!at_atom()) fail("expected an atom");
    Regex r = parse_postfix();
    while (at_atom()) r = regex_concat(r, parse_postfix());
    return r;
  }
  Regex parse_postfix() {
    Regex r = parse_atom();
    for (;;) {
      if (eat('*'))
        r = regex_star(r);
      else if (eat('+'))
        r = regex_plus(r);
      else if (eat('?'))
        r = regex_optional(r);
      else
        return r;
    }
  }
  Regex parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression");
    char c = text[pos];
    if (c == '<' || c == '=' || c == '>') {
      ++pos;
      return regex_letter(c);
    }
    if (c == '(') {
      ++pos;
      Regex r = parse_union();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (text.compare(pos, 3, "eps") == 0) {
      pos += 3;
      return regex_epsilon();
    }
    if (text.compare(pos, 2, "s1") == 0) {
      pos += 2;
      return regex_letter(kSync1);
    }
    if (text.compare(pos, 2, "s2") == 0) {
      pos += 2;
      return regex_letter(kSync2);
    }
    fail("unexpected character");
  }
};

bool needs_sync_check(const Regex& r) {
  switch (r->kind) {
    case RegexNode::Letter:
      return is_sync(r->letter);
    case RegexNode::Shuffle:
      return true;
    case RegexNode::Empty:
    case RegexNode::Epsilon:
      return false;
    default:
      return (r->left && needs_sync_check(r->left)) ||
             (r->right && needs_sync_check(r->right));
  }
}

int precedence(RegexNode::Kind k) {
  switch (k) {
    case RegexNode::Union: return 0;
    case RegexNode::Difference: return 1;
    case RegexNode::Intersect: return 2;
    case RegexNode::Concat: return 3;
    default: return 4;
  }
}

void print(const Regex& r, int parent_prec, std::ostringstream& os) {
  int prec = precedence(r->kind);
  bool paren = prec < parent_prec;
  if (paren) os << '(';
  switch (r->kind) {
    case RegexNode::Empty: os << "(eps\\eps)"; break;
    case RegexNode::Epsilon: os << "eps"; break;
    case RegexNode::Letter:
      if (r->letter == kSync1) os << "s1";
      else if (r->letter == kSync2) os << "s2";
      else os << r->letter;
      break;
    case RegexNode::Concat:
      print(r->left, prec, os);
      print(r->right, prec + 1, os);
      break;
    case RegexNode::Union:
      print(r->left, prec, os);
      os << '|';
      print(r->right, prec + 1, os);
      break;
    case RegexNode::Difference:
      print(r->left, prec, os);
      os << '\\';
      print(r->right, prec + 1, os);
      break;
    case RegexNode::Intersect:
      print(r->left, prec, os);
      os << '&';
      print(r->right, prec + 1, os);
      break;
    case RegexNode::Star:
      print(r->left, 5, os);
      os << '*';
      break;
    case RegexNode::Plus:
      print(r->left, 5, os);
      os << '+';
      break;
    case RegexNode::Optional:
      print(r->left, 5, os);
      os << '?';
      break;
    case RegexNode::Shuffle:
      os << "shuffle(";
      print(r->left, 0, os);
      os << ',' << r->letter << ')';
      break;
  }
  if (paren) os << ')';
}

void collect_syncs(const Regex& r, std::vector<Letter>& out) {
  if (r->kind == RegexNode::Letter && is_sync(r->letter))
    out.push_back(r->letter);
  if (r->kind == RegexNode::Shuffle) out.push_back(r->letter);
  if (r->left) collect_syncs(r->left, out);
  if (r->right) collect_syncs(r->right, out);
}

}  // namespace

Regex regex_empty() { return make(RegexNode::Empty, 0, nullptr, nullptr); }
Regex regex_epsilon() { return make(RegexNode::Epsilon, 0, nullptr, nullptr); }
Regex regex_letter(Letter c) { return make(RegexNode::Letter, c, nullptr, nullptr); }
Regex regex_concat(Regex a, Regex b) {
  return make(RegexNode::Concat, 0, std::move(a), std::move(b));
}
Regex regex_union(Regex a, Regex b) {
  return make(RegexNode::Union, 0, std::move(a), std::move(b));
}
Regex regex_intersect(Regex a, Regex b) {
  return make(RegexNode::Intersect, 0, std::move(a), std::move(b));
}
Regex regex_difference(Regex a, Regex b) {
  return make(RegexNode::Difference, 0, std::move(a), std::move(b));
}
Regex regex_star(Regex a) {
  return make(RegexNode::Star, 0, std::move(a), nullptr);
}
Regex regex_plus(Regex a) {
  return make(RegexNode::Plus, 0, std::move(a), nullptr);
}
Regex regex_optional(Regex a) {
  return make(RegexNode::Optional, 0, std::move(a), nullptr);
}
Regex regex_shuffle(Regex a, Letter c) {
  return make(RegexNode::Shuffle, c, std::move(a), nullptr);
}

Regex parse_regex(const std::string& text) {
  Parser p(text);
  p.skip_ws();
  if (p.pos >= text.size())
    throw RegexParseError("empty expression");
  Regex r = p.parse_union();
  p.skip_ws();
  if (p.pos != text.size())
    throw RegexParseError("trailing characters at offset " +
                          std::to_string(p.pos));
  return r;
}

std::string regex_to_string(const Regex& r) {
  std::ostringstream os;
  print(r, 0, os);
  return os.str();
}

Regex regex_mirror(const Regex& r) {
  if (needs_sync_check(r))
    throw std::invalid_argument(
        "mirror is undefined on expressions with synchronisation marks");
  switch (r->kind) {
    case RegexNode::Empty:
    case RegexNode::Epsilon:
      return r;
    case RegexNode::Letter:
      return regex_letter(mirror_letter(r->letter));
    case RegexNode::Concat:
      return regex_concat(regex_mirror(r->right), regex_mirror(r->left));
    case RegexNode::Union:
      return regex_union(regex_mirror(r->left), regex_mirror(r->right));
    case RegexNode::Intersect:
      return regex_intersect(regex_mirror(r->left), regex_mirror(r->right));
    case RegexNode::Difference:
      return regex_difference(regex_mirror(r->left), regex_mirror(r->right));
    case RegexNode::Star:
      return regex_star(regex_mirror(r->left));
    case RegexNode::Plus:
      return regex_plus(regex_mirror(r->left));
    case RegexNode::Optional:
      return regex_optional(regex_mirror(r->left));
    case RegexNode::Shuffle:
      break;  // unreachable: rejected above
  }
  throw std::logic_error("unhandled node kind");
}

Kernel regex_compile(const Regex& r) {
  std::vector<Letter> alphabet{kLess, kEqual, kGreater};
  std::vector<Letter> syncs;
  collect_syncs(r, syncs);
  alphabet.insert(alphabet.end(), syncs.begin(), syncs.end());
  auto go = [](auto&& self, const Regex& n) -> Kernel {
    switch (n->kind) {
      case RegexNode::Empty: return kernel_empty({});
      case RegexNode::Epsilon: return kernel_epsilon({});
      case RegexNode::Letter: return kernel_word(Word(1, n->letter));
      case RegexNode::Concat:
        return kernel_concat(self(self, n->left), self(self, n->right));
      case RegexNode::Union:
        return kernel_union(self(self, n->left), self(self, n->right));
      case RegexNode::Intersect:
        return kernel_intersect(self(self, n->left), self(self, n->right));
      case RegexNode::Difference:
        return kernel_difference(self(self, n->left), self(self, n->right));
      case RegexNode::Star: return kernel_star(self(self, n->left));
      case RegexNode::Plus: return kernel_plus(self(self, n->left));
      case RegexNode::Optional: return kernel_optional(self(self, n->left));
      case RegexNode::Shuffle:
        return kernel_shuffle(self(self, n->left), n->letter);
    }
    throw std::logic_error("unhandled node kind");
  };
  Kernel k = go(go, r);
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());
  k.alphabet = alphabet;
  return normalize(k);
}

Kernel regex_compile(const std::string& text) {
  return regex_compile(parse_regex(text));
}

}  // namespace slidets
