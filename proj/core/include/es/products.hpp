#ifndef ES_PRODUCTS_HPP
#define ES_PRODUCTS_HPP

#include "es/words.hpp"

namespace es {

// ---- shuffle side (letter words, endpoints (0;...;1) implicit) ----

LinComb<Word> shuffle(const Word& a, const Word& b);
LinComb<Word> shuffle(const LinComb<Word>& a, const LinComb<Word>& b);

// S(w) = (-1)^|w| reverse(w)
LinComb<Word> antipode_shuffle(const Word& w);

// deconcatenation cuts (prefix, suffix), including the empty ones
std::vector<std::pair<Word, Word>> deconcat(const Word& w);

// ---- stuffle side (y-words, entries signed) ----

// quasi-shuffle: interleave or merge heads (abs-add, sign-multiply)
LinComb<YWord> stuffle(const YWord& a, const YWord& b);
LinComb<YWord> stuffle(const LinComb<YWord>& a, const LinComb<YWord>& b);

// w^* = sum over consecutive-merge coarsenings
LinComb<YWord> star_map(const YWord& w);
// w^# = sum over coarsenings weighted 2^{#blocks}
LinComb<YWord> sharp_map(const YWord& w);

// S(y_{n1}..y_{np}) = (-1)^p (y_{np}..y_{n1})^*
LinComb<YWord> antipode_stuffle(const YWord& w);

std::vector<std::pair<YWord, YWord>> deconcat(const YWord& w);

// product formula for the star values: signs (-1)^{#merges}
LinComb<YWord> stuffle_star(const YWord& a, const YWord& b);

// product formula for the sharp values: staircase blocks, signs (-1)^{sum k}
LinComb<YWord> stuffle_sharp(const YWord& a, const YWord& b);

} // namespace es

#endif
