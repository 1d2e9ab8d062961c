// Linear-space constraint-model emission for sliding feature sums: per-window
// values are expressed through shared prefix/suffix register variables
// instead of one pattern constraint per window.
#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "slidets/checker.hpp"

namespace slidets {

// A solver-agnostic model over integer variables
//   x[1..n]    series values
//   fwd[1..n]  feature aggregate of each prefix x_1..x_k
//   bwd[1..n]  feature aggregate of each suffix x_k..x_n
//   r          whole-series aggregate
//   win[1..n-m+1]  per-window values
//   low, up    extrema of win
// with two register-automaton constraints (a forward run of the pattern and
// a backward run of its mirror), one linking constraint per window, and two
// aggregation constraints.  The JSON schema is documented in the README.
struct ReformulationModel {
  std::string pattern;          // forward pattern name
  std::string reverse_pattern;  // pattern recognised by the backward run
  Feature feature = Feature::One;
  EquationKind equation = EquationKind::Plain;
  int m = 0;
  int n = 0;

  int window_count() const { return n - m + 1; }
  int variable_count() const { return 3 * n + window_count() + 3; }
  int constraint_count() const { return window_count() + 4; }

  // Deterministic rendering: key order is fixed and windows are listed in
  // increasing start position.
  nlohmann::ordered_json to_json() const;
};

// Builds the model for a catalogued, mirror-closed pattern.  Only the plain
// and clamped window terms have this linear-space form; requesting the
// guarded or fallback evaluation throws std::invalid_argument, as does an
// invalid window length.
ReformulationModel emit_reformulation(Feature f, const Pattern& p, int m,
                                      int n, EquationKind equation);

// Ground instantiation: assign x from a concrete series, fwd/bwd/r from
// prefix_profile, win/low/up from slide_check forced to the model's
// equation, then verify each constraint group independently (the automaton
// rows against the quadratic window oracle).
struct GroundCheck {
  bool automaton_forward = false;
  bool automaton_backward = false;
  bool links = false;
  bool aggregations = false;
  std::int64_t low = 0;
  std::int64_t up = 0;

  bool ok() const {
    return automaton_forward && automaton_backward && links && aggregations;
  }
};

GroundCheck ground_check(const ReformulationModel& model, const Series& x);

}  // namespace slidets
