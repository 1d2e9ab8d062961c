// Alphabet conventions shared by every module.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slidets {

// A letter is a plain char; the library's total order on letters is ASCII
// order.  Signature letters are '<', '=', '>'.  Synchronisation marks, used
// to tag positions inside a word, are 's' (first mark) and 't' (second
// mark); both sort after the signature letters.
using Letter = char;

inline constexpr Letter kLess = '<';
inline constexpr Letter kEqual = '=';
inline constexpr Letter kGreater = '>';
inline constexpr Letter kSync1 = 's';
inline constexpr Letter kSync2 = 't';

inline bool is_sync(Letter c) { return c == kSync1 || c == kSync2; }
inline bool is_signature_letter(Letter c) {
  return c == kLess || c == kEqual || c == kGreater;
}

// Flips '<' and '>' and keeps '='; throws on synchronisation marks, which
// have no mirror image.
inline Letter mirror_letter(Letter c) {
  if (c == kLess) return kGreater;
  if (c == kGreater) return kLess;
  if (c == kEqual) return kEqual;
  if (is_sync(c))
    throw std::invalid_argument("mirror is undefined on synchronisation marks");
  return c;
}

using Word = std::string;

struct ArithmeticOverflow : std::runtime_error {
  ArithmeticOverflow() : std::runtime_error("64-bit integer overflow") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}

}  // namespace slidets
