// Built-in reference data: the feasibility witness map and the published
// evaluation corpus used to validate the window equations.
#pragma once

#include <cstdint>
#include <vector>

#include "slidets/classify.hpp"

namespace slidets {

// A worked witness showing that a type triple is realisable: the regular
// expression denotes a language whose synchronised triple language is
// nonempty.  There is one row for every realisable triple (61 of 125).
struct WitnessRow {
  TypeTriple triple;
  const char* regex;
};

const std::vector<WitnessRow>& witness_map();

// One recorded run of a window equation on a short series: the correct
// per-window values next to the values the equation reports.  The two
// disagree exactly where the equation is applied outside its validity range,
// and the corpus pins both vectors bit-for-bit.
struct CorpusCell {
  const char* constraint;  // e.g. "sum_surf_dec_seq"
  int equation;            // 1 = plain, 2 = clamped, 3 = guarded
  int m;                   // window length
  std::vector<std::int64_t> series;
  std::vector<std::int64_t> expected;  // correct values, one per window
  std::vector<std::int64_t> reported;  // what the equation computes
};

const std::vector<CorpusCell>& evaluation_corpus();

}  // namespace slidets
