// Static reference data: witness regexes for the realisable type triples and
// the recorded equation-evaluation corpus.
#include "slidets/corpus.hpp"

namespace slidets {

const std::vector<WitnessRow>& witness_map() {
  constexpr WordType O = WordType::Out, F = WordType::Fac, P = WordType::Pre,
                     S = WordType::Suf, I = WordType::In;
  static const std::vector<WitnessRow> rows = {
      {{F, F, F}, "<<=<<|="},
      {{F, F, I}, "<=<<|="},
      {{F, F, P}, "<<=<<<|<=<<|=<<|="},
      {{F, F, S}, "<<=<=|="},
      {{F, O, F}, "<=<=<|="},
      {{F, O, I}, "<<=<=|<="},
      {{F, O, O}, "<=<<|="},
      {{F, O, P}, "<=<<>|<<|="},
      {{F, O, S}, "<=<=|="},
      {{F, P, I}, "<=<=|="},
      {{F, P, P}, "<=<<|="},
      {{I, F, F}, "<<=<|="},
      {{I, F, I}, "<<=<<|<<=<|<=<<|="},
      {{I, F, P}, "<<=<<<|<<=<|<=<<|="},
      {{I, F, S}, "<<=<=|<<=<|="},
      {{I, I, I}, "<<|<"},
      {{I, I, P}, "<<=|<"},
      {{I, O, F}, "<=<=<|<="},
      {{I, O, I}, "<<<|<<"},
      {{I, O, O}, "<=|<"},
      {{I, O, P}, "<<<=|<<"},
      {{I, O, S}, "<=<=|<="},
      {{I, P, I}, "<<=<|<<=|<"},
      {{I, P, P}, "<<=|<"},
      {{I, S, F}, "<=<=|<"},
      {{I, S, I}, "<=<<|=<<|<"},
      {{I, S, P}, "<=<<=|=<<|<"},
      {{I, S, S}, "<<=|="},
      {{O, O, F}, "<<=<|="},
      {{O, O, I}, "<=|="},
      {{O, O, O}, "<<<<|<<<"},
      {{O, O, P}, "<<=<|<="},
      {{O, O, S}, "<<=|="},
      {{P, F, F}, "<=<==|<"},
      {{P, F, I}, "<=<=<|=<=<|<"},
      {{P, F, P}, "<<=<<<|<=<<|<<=|="},
      {{P, F, S}, "<=<=<|<"},
      {{P, O, F}, "<=<=|<"},
      {{P, O, I}, "<=<=|<="},
      {{P, O, O}, "<==|<"},
      {{P, O, P}, "<=<=<|<="},
      {{P, O, S}, "<=<|<"},
      {{P, P, I}, "<=<|<"},
      {{P, P, P}, "<<==|<"},
      {{S, F, F}, "<<<=<<|<<=<|<<=|="},
      {{S, F, I}, "<<<=<<|<<=<|<=<<|="},
      {{S, F, P}, "<<<=<<<|<<=<|<=<<|="},
      {{S, F, S}, "<<<=<<|<<=<|=<<|="},
      {{S, I, I}, "<==|="},
      {{S, I, P}, "<=<|="},
      {{S, O, F}, "<<=><|<=|>"},
      {{S, O, I}, "<===|=="},
      {{S, O, O}, "<<=<|<="},
      {{S, O, P}, "<===<|=="},
      {{S, O, S}, "<<=<=|<="},
      {{S, P, I}, "<<=<=|<=<|="},
      {{S, P, P}, "<<=<<|<=<|="},
      {{S, S, F}, "<<=<|="},
      {{S, S, I}, "<=<|="},
      {{S, S, P}, "<<=<<|<=<|="},
      {{S, S, S}, "<<==|="},
  };
  return rows;
}

const std::vector<CorpusCell>& evaluation_corpus() {
  static const std::vector<CorpusCell> cells = {
      {"nb_dec_seq", 1, 2, {1, 0, 0, -1}, {1, 0, 1}, {1, 1, 1}},
      {"nb_dec_seq", 2, 2, {1, 0, 0, -1}, {1, 0, 1}, {1, 1, 1}},
      {"sum_width_dec_seq", 1, 2, {1, 0, 0, 0, -1}, {2, 0, 0, 2},
       {2, -1, -1, 2}},
      {"sum_surf_dec_seq", 1, 2, {-1, -2, -2, -2, -3, 2}, {-3, 0, 0, -5, 0},
       {-3, 2, 2, -5, 0}},
      {"sum_surf_dec_seq", 2, 2, {-1, 0, -1}, {0, -1}, {0, 0}},
      {"sum_max_dec_seq", 1, 2, {1, -1, -1, -2}, {1, 0, -1}, {1, -1, -1}},
      {"sum_max_dec_seq", 2, 2, {-2, -3, 2}, {-2, 0}, {0, 0}},
      {"sum_min_dec_seq", 1, 2, {1, -1, -1, -2}, {-1, 0, -2}, {-1, -1, -2}},
      {"sum_min_dec_seq", 2, 2, {-1, 0, -1}, {0, -1}, {0, 0}},
      {"nb_dec_terrace", 1, 2, {1, 0, 0, -1}, {0, 0, 0}, {0, -1, 0}},
      {"sum_width_dec_terrace", 1, 2, {1, 0, 0, -1}, {0, 0, 0}, {0, -2, 0}},
      {"sum_surf_dec_terrace", 1, 2, {1, -1, -1, -2}, {0, 0, 0}, {0, 2, 0}},
      {"sum_surf_dec_terrace", 2, 2, {1, -1, -1, -2}, {0, 0, 0}, {0, 2, 0}},
      {"sum_height_dec_terrace", 1, 2, {1, -1, -1, -2}, {0, 0, 0}, {0, 1, 0}},
      {"sum_height_dec_terrace", 2, 2, {1, -1, -1, -2}, {0, 0, 0}, {0, 1, 0}},
      {"sum_width_gorge", 1, 2, {0, -1, 0, 1}, {0, 0, 0}, {0, -1, 0}},
      {"sum_surf_gorge", 1, 2, {-3, -4, 2, 3}, {0, 0, 0}, {0, -2, 0}},
      {"sum_surf_gorge", 2, 3, {0, -1, 0}, {-1}, {0}},
      {"sum_min_gorge", 2, 3, {0, -1, 0}, {-1}, {0}},
      {"nb_inc_seq", 1, 2, {-1, 0, 0, 1}, {1, 0, 1}, {1, 1, 1}},
      {"nb_inc_seq", 2, 2, {-1, 0, 0, 1}, {1, 0, 1}, {1, 1, 1}},
      {"sum_width_inc_seq", 1, 2, {-3, 0, 0, 0, 3}, {2, 0, 0, 2},
       {2, -1, -1, 2}},
      {"sum_surf_inc_seq", 1, 2, {-2, -1, -1, -1, 1}, {-3, 0, 0, 0},
       {-3, 1, 1, 0}},
      {"sum_surf_inc_seq", 2, 2, {-2, -2, 1}, {0, -1}, {0, 0}},
      {"sum_max_inc_seq", 1, 2, {-2, -1, -1, 2}, {-1, 0, 2}, {-1, -1, 2}},
      {"sum_max_inc_seq", 2, 2, {-2, -1, 1}, {-1, 1}, {0, 1}},
      {"sum_min_inc_seq", 1, 2, {-2, -1, -1, 2}, {-2, 0, -1}, {-2, -1, -1}},
      {"sum_min_inc_seq", 2, 2, {-1, -1, 1}, {0, -1}, {0, 0}},
      {"nb_inc_terrace", 1, 2, {-1, 0, 0, 1}, {0, 0, 0}, {0, -1, 0}},
      {"sum_width_inc_terrace", 1, 2, {-1, 0, 0, 1}, {0, 0, 0}, {0, -2, 0}},
      {"sum_surf_inc_terrace", 1, 2, {-2, -1, -1, 2}, {0, 0, 0}, {0, 2, 0}},
      {"sum_surf_inc_terrace", 2, 2, {-2, -1, -1, 2}, {0, 0, 0}, {0, 2, 0}},
      {"sum_height_inc_terrace", 1, 2, {-2, -1, -1, 2}, {0, 0, 0}, {0, 1, 0}},
      {"sum_height_inc_terrace", 2, 2, {-2, -1, -1, 2}, {0, 0, 0}, {0, 1, 0}},
      {"nb_peak", 1, 2, {-1, 1, 1, 0}, {0, 0, 0}, {0, -1, 0}},
      {"sum_width_peak", 1, 2, {-1, 0, 1, 0}, {0, 0, 0}, {0, -1, 0}},
      {"sum_surf_peak", 1, 2, {-2, -1, 1, -2}, {0, 0, 0}, {0, 1, 0}},
      {"sum_surf_peak", 2, 3, {-5, -4, -5, 4}, {-4, 0}, {0, 0}},
      {"sum_max_peak", 1, 2, {-1, 1, 1, 0}, {0, 0, 0}, {0, -1, 0}},
      {"sum_max_peak", 2, 3, {-5, -4, -5, 4}, {-4, 0}, {0, 0}},
      {"nb_plain", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, -1, 0}},
      {"sum_width_plain", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, -2, 0}},
      {"sum_surf_plain", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, 4, 0}},
      {"sum_surf_plain", 2, 3, {0, -1, 0}, {-1}, {0}},
      {"sum_height_plain", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, 2, 0}},
      {"sum_height_plain", 2, 3, {0, -1, 0}, {-1}, {0}},
      {"nb_plateau", 1, 2, {-1, 1, 1, 0}, {0, 0, 0}, {0, -1, 0}},
      {"sum_width_plateau", 1, 2, {-1, 1, 1, 0}, {0, 0, 0}, {0, -2, 0}},
      {"sum_surf_plateau", 1, 2, {-1, 1, 1, 0}, {0, 0, 0}, {0, -2, 0}},
      {"sum_surf_plateau", 2, 3, {-5, -4, -5, 4}, {-4, 0}, {0, 0}},
      {"sum_height_plateau", 1, 2, {-1, 1, 1, 0}, {0, 0, 0}, {0, -1, 0}},
      {"sum_height_plateau", 2, 3, {-5, -4, -5, 4}, {-4, 0}, {0, 0}},
      {"nb_proper_plain", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, -1, 0}},
      {"sum_width_proper_plain", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, -2, 0}},
      {"sum_surf_proper_plain", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, 4, 0}},
      {"sum_surf_proper_plain", 2, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, 4, 0}},
      {"sum_height_proper_plain", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, 2, 0}},
      {"sum_height_proper_plain", 2, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, 2, 0}},
      {"nb_proper_plateau", 1, 2, {-1, 1, 1, 0}, {0, 0, 0}, {0, -1, 0}},
      {"sum_width_proper_plateau", 1, 2, {-1, 1, 1, 0}, {0, 0, 0},
       {0, -2, 0}},
      {"sum_surf_proper_plateau", 1, 2, {-1, 1, 1, 0}, {0, 0, 0}, {0, -2, 0}},
      {"sum_surf_proper_plateau", 2, 2, {-2, -1, -1, -3, 3}, {0, 0, 0, 0},
       {0, 2, 0, 0}},
      {"sum_height_proper_plateau", 1, 2, {-1, 1, 1, 0}, {0, 0, 0},
       {0, -1, 0}},
      {"sum_height_proper_plateau", 2, 2, {-2, -1, -1, -3, 3}, {0, 0, 0, 0},
       {0, 1, 0, 0}},
      {"sum_surf_steady_seq", 2, 2, {-1, -1, 1}, {-2, 0}, {0, 0}},
      {"sum_height_steady_seq", 2, 2, {-1, -1, 1}, {-1, 0}, {0, 0}},
      {"sum_surf_strictly_dec_seq", 2, 2, {-1, 0, -1}, {0, -1}, {0, 0}},
      {"sum_max_strictly_dec_seq", 2, 2, {-2, -3, 2}, {-2, 0}, {0, 0}},
      {"sum_min_strictly_dec_seq", 2, 2, {-1, 0, -1}, {0, -1}, {0, 0}},
      {"sum_surf_strictly_inc_seq", 2, 2, {-2, -2, 1}, {0, -1}, {0, 0}},
      {"sum_max_strictly_inc_seq", 2, 2, {-2, -1, 1}, {-1, 1}, {0, 1}},
      {"sum_min_strictly_inc_seq", 2, 2, {-1, -1, 1}, {0, -1}, {0, 0}},
      {"sum_width_summit", 1, 2, {-1, 0, 1, 0}, {0, 0, 0}, {0, -1, 0}},
      {"sum_surf_summit", 1, 2, {-2, -1, 1, -2}, {0, 0, 0}, {0, 1, 0}},
      {"sum_surf_summit", 2, 3, {-5, -4, -5, 4}, {-4, 0}, {0, 0}},
      {"sum_max_summit", 2, 3, {-5, -4, -5, 4}, {-4, 0}, {0, 0}},
      {"nb_valley", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, -1, 0}},
      {"sum_width_valley", 1, 2, {0, -1, 0, 1}, {0, 0, 0}, {0, -1, 0}},
      {"sum_surf_valley", 1, 2, {-3, -4, 2, 3}, {0, 0, 0}, {0, -2, 0}},
      {"sum_surf_valley", 2, 3, {0, -1, 0}, {-1}, {0}},
      {"sum_min_valley", 1, 2, {0, -2, -2, 1}, {0, 0, 0}, {0, 2, 0}},
      {"sum_min_valley", 2, 3, {0, -1, 0}, {-1}, {0}},
      {"nb_zigzag", 1, 2, {-1, 0, -1, 0}, {0, 0, 0}, {0, -1, 0}},
      {"nb_zigzag", 2, 3, {-1, 0, -1, 0, -1}, {0, 0, 0}, {0, 1, 0}},
      {"sum_width_zigzag", 1, 2, {-1, 0, -1, 0}, {0, 0, 0}, {0, -2, 0}},
      {"sum_width_zigzag", 2, 3, {-1, 0, -1, 0, -1}, {0, 0, 0}, {0, 1, 0}},
      {"sum_surf_zigzag", 1, 2, {-1, 0, -1, 0}, {0, 0, 0}, {0, 1, 0}},
      {"sum_surf_zigzag", 2, 2, {-1, 0, -1, 0}, {0, 0, 0}, {0, 1, 0}},
      {"sum_max_zigzag", 1, 2, {-5, -4, -5, 4}, {0, 0, 0}, {0, 4, 0}},
      {"sum_max_zigzag", 2, 2, {-5, -4, -5, 4}, {0, 0, 0}, {0, 4, 0}},
      {"sum_max_zigzag", 3, 4, {-1, 1, -1, 0, -1, 1, -1}, {1, 0, 0, 1},
       {1, 1, 1, 1}},
      {"sum_min_zigzag", 1, 2, {-1, 0, -1, 0}, {0, 0, 0}, {0, 1, 0}},
      {"sum_min_zigzag", 2, 2, {-1, 0, -1, 0}, {0, 0, 0}, {0, 1, 0}},
      {"sum_min_zigzag", 3, 4, {1, -3, 2, -1, 0, -2, 1}, {-3, -1, -1, -2},
       {-3, -2, -2, -2}},
  };
  return cells;
}

}  // namespace slidets
