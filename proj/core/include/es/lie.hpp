#ifndef ES_LIE_HPP
#define ES_LIE_HPP

#include <map>
#include <vector>
#include <string>
#include <set>

#include "es/words.hpp"

namespace es {

// Pairing of weight-n words against the standard bracketing of Lyndon words
// over the ordered alphabet 0 < 1 < -1. A word combination pairs to zero
// with every bracket iff it is a combination of proper shuffle products, so
// these coordinates compute exactly in the indecomposable quotient.
struct LyndonBasis {
    int weight = 0;
    std::vector<std::vector<int8_t>> lyndon;  // letters coded 0,1,2
    // word (coded) -> sparse pairing column
    std::map<std::vector<int8_t>, std::vector<std::pair<int, long long>>> pairing;

    static const LyndonBasis& get(int weight);  // cached per weight

    std::vector<Rat> coords(const LinComb<ExtWord>& x) const;
    std::vector<Rat> coords(const LinComb<Word>& x) const;
};

std::vector<int8_t> code_word(const Word& w);

// eulerian idempotent: alternating sum of shuffled deconcatenations,
// kills shuffle products, fixes classes modulo products
LinComb<Word> project_indecomposable(const Word& w);
LinComb<Word> project_indecomposable(const LinComb<Word>& x);

// row space of a relation family inside the Lyndon coordinates of weight n
struct LSpace {
    int weight = 0;
    const LyndonBasis* basis = nullptr;
    std::vector<std::vector<Rat>> rows;  // reduced echelon, unit pivots
    std::vector<int> pivots;
    // mirror of rows modulo a large prime; lets add_row reject dependent
    // candidates with machine arithmetic before doing any exact work
    std::vector<std::vector<uint64_t>> mrows;

    explicit LSpace(int weight);
    LSpace(int weight, const std::vector<LinComb<ExtWord>>& rels);

    bool add_row(std::vector<Rat> v);      // true if it enlarged the space
    void add_rows(const std::vector<LinComb<ExtWord>>& rels);
    // reduce in place, return true when it lands in the span
    bool reduce(std::vector<Rat>& v) const;
    bool member(const LinComb<ExtWord>& x) const;
    bool equiv(const LinComb<ExtWord>& x, const LinComb<ExtWord>& y) const;
    int rank() const { return (int)rows.size(); }
};

// Relation span echeloned over a fixed 61-bit prime field instead of Q.
// Same membership questions as LSpace at a fraction of the cost; a nonzero
// vector can slip through only by hitting zero mod p, so answers err on the
// accepting side with vanishing probability. Meant for the weights where
// the exact build is out of reach.
struct ModSpace {
    static constexpr uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

    int weight = 0;
    const LyndonBasis* basis = nullptr;
    std::vector<std::vector<uint64_t>> rows;
    std::vector<int> pivots;

    ModSpace(int weight, const std::set<std::string>& families);

    // Lyndon coordinates reduced by the span, as field elements
    std::vector<uint64_t> residue(const LinComb<ExtWord>& x) const;

    static uint64_t to_mod(const Rat& x);
    static uint64_t mul(uint64_t a, uint64_t b);
    static uint64_t inv(uint64_t a);
    // lift a field element back to the small fraction it came from
    static Rat reconstruct(uint64_t x);
};

// relation family names understood by the generator
extern const std::vector<std::string> kRelationFamilies;

std::vector<LinComb<ExtWord>> generate_relations(int weight, const std::set<std::string>& families);

LSpace build_lspace(int weight, const std::set<std::string>& families);

bool equiv_mod_L(const LinComb<ExtWord>& x, const LinComb<ExtWord>& y, const LSpace& sp);

// motivic depth bound: least d with x congruent to a span of words of
// depth <= d modulo the relation space
int gr_depth(const LinComb<ExtWord>& x, const LSpace& sp);

} // namespace es

#endif
