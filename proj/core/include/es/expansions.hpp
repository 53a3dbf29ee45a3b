#ifndef ES_EXPANSIONS_HPP
#define ES_EXPANSIONS_HPP

#include "es/words.hpp"

namespace es {

// Replace every marked letter by its two-form combination:
//   (+-)* -> (+-)1 - 0,   (+-)# -> 2*(+-)1 - 0
LinComb<ExtWord> expand_marks(const ExtWord& w);
LinComb<ExtWord> expand_marks(const LinComb<ExtWord>& x);

// Express a decorated index in the target decoration.
LinComb<EsIndex> decorate_convert(const EsIndex& x, Deco target);

// shortcut: everything as plain indices (subscript preserved)
LinComb<EsIndex> to_plain(const EsIndex& x);

// Peel the leading-zero subscript off a plain index:
//   zeta_k(n1..np) = (-1)^k sum_{i1+..+ip=k} prod C(|nj|+ij-1, ij) zeta(n1+i1,..)
// entries grow in absolute value, signs stay.
LinComb<EsIndex> shuffle_regularize(const EsIndex& x);

// full pipeline: decorated index -> plain k=0 indices
LinComb<EsIndex> to_plain_regularized(const EsIndex& x);

// image of an index in word space after mark expansion (plain words)
LinComb<ExtWord> index_to_plain_words(const EsIndex& x);

} // namespace es

#endif
