#ifndef ES_COACTION_HPP
#define ES_COACTION_HPP

#include <map>
#include "es/words.hpp"

namespace es {

// One term of the raw combinatorial coproduct: a bag of arc integrals on the
// left, the subsequence integral on the right. Nothing is simplified here.
struct CoactTerm {
    std::vector<ExtWord> left;  // kept sorted; unit arcs dropped
    ExtWord right;
    auto operator<=>(const CoactTerm&) const = default;
    bool operator==(const CoactTerm&) const = default;
};

// all 2^n marked-point subsets
LinComb<CoactTerm> coact(const ExtWord& w);

// weight-r derivation: single arc of length r cut out, left factor rewritten
// with endpoints (0,1) modulo products
using TensorWW = std::pair<ExtWord, ExtWord>;
LinComb<TensorWW> derivation_D(int r, const ExtWord& w);
LinComb<TensorWW> derivation_D(int r, const LinComb<ExtWord>& x);

// collect a tensor combination by right factor
std::map<ExtWord, LinComb<ExtWord>> group_by_right(const LinComb<TensorWW>& t);

// closed form of D_{2r+1} on a plain convergent index; lefts come out as
// subscripted plain indices, rights as plain indices
using TensorII = std::pair<EsIndex, EsIndex>;
LinComb<TensorII> derivation_D_index(int r2p1, const EsIndex& x);

} // namespace es

#endif
