#ifndef ES_WORDS_HPP
#define ES_WORDS_HPP

#include <vector>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <compare>

#include "es/linear.hpp"

namespace es {

// Letters of the extended integration alphabet.
// Lexicographic order used everywhere: 0 < +1 < -1 < +* < -* < +# < -#
enum class Letter : int8_t {
    Zero = 0, One, MinusOne, Star, MinusStar, Sharp, MinusSharp
};

inline bool is_zero(Letter l)   { return l == Letter::Zero; }
inline bool is_marked(Letter l) { return l >= Letter::Star; }
inline bool is_plain(Letter l)  { return l <= Letter::MinusOne; }

// sign of a nonzero letter
inline int letter_sign(Letter l) {
    switch (l) {
        case Letter::One: case Letter::Star: case Letter::Sharp: return +1;
        case Letter::MinusOne: case Letter::MinusStar: case Letter::MinusSharp: return -1;
        default: return 0;
    }
}

inline Letter negate(Letter l) {
    switch (l) {
        case Letter::One: return Letter::MinusOne;
        case Letter::MinusOne: return Letter::One;
        case Letter::Star: return Letter::MinusStar;
        case Letter::MinusStar: return Letter::Star;
        case Letter::Sharp: return Letter::MinusSharp;
        case Letter::MinusSharp: return Letter::Sharp;
        default: return Letter::Zero;
    }
}

enum class Mark : int8_t { None = 0, Star, Sharp };

inline Mark mark_of(Letter l) {
    if (l == Letter::Star || l == Letter::MinusStar) return Mark::Star;
    if (l == Letter::Sharp || l == Letter::MinusSharp) return Mark::Sharp;
    return Mark::None;
}

inline Letter make_letter(int sign, Mark m) {
    if (sign == 0) return Letter::Zero;
    switch (m) {
        case Mark::None:  return sign > 0 ? Letter::One : Letter::MinusOne;
        case Mark::Star:  return sign > 0 ? Letter::Star : Letter::MinusStar;
        case Mark::Sharp: return sign > 0 ? Letter::Sharp : Letter::MinusSharp;
    }
    return Letter::Zero;
}

// Iterated-integral word I(start; letters; end). Endpoints are plain values
// in {0, 1, -1}; the letters may carry marks.
struct ExtWord {
    int8_t start = 0;
    int8_t end = 1;
    std::vector<Letter> letters;

    ExtWord() = default;
    ExtWord(int8_t s, std::vector<Letter> w, int8_t e)
        : start(s), end(e), letters(std::move(w)) {}
    explicit ExtWord(std::vector<Letter> w) : letters(std::move(w)) {}

    int weight() const { return (int)letters.size(); }
    int depth() const {
        int d = 0;
        for (auto l : letters) if (!is_zero(l)) ++d;
        return d;
    }
    bool all_plain() const {
        for (auto l : letters) if (is_marked(l)) return false;
        return true;
    }
    bool all_zero() const {
        for (auto l : letters) if (!is_zero(l)) return false;
        return true;
    }
    ExtWord reversed() const {
        ExtWord r(end, {letters.rbegin(), letters.rend()}, start);
        return r;
    }
    ExtWord negated_letters() const {
        ExtWord r = *this;
        for (auto& l : r.letters) l = negate(l);
        return r;
    }
    auto operator<=>(const ExtWord&) const = default;
    bool operator==(const ExtWord&) const = default;
};

using Word = std::vector<Letter>;  // letters only, endpoints implicit (0;...;1)

enum class Deco : int8_t { Plain = 0, Star, StarStar, Sharp, SharpSharp };

// Euler sum index zeta^deco_k(n1,...,np); negative entries mean barred ones.
struct EsIndex {
    Deco deco = Deco::Plain;
    int k = 0;                 // leading-zero subscript
    std::vector<int> entries;  // nonzero; sign = epsilon_i

    EsIndex() = default;
    EsIndex(Deco d, int kk, std::vector<int> es)
        : deco(d), k(kk), entries(std::move(es)) {}

    int depth() const { return (int)entries.size(); }
    int weight() const {
        int w = k;
        for (int n : entries) w += n < 0 ? -n : n;
        return w;
    }
    int sign_product() const {
        int s = 1;
        for (int n : entries) if (n < 0) s = -s;
        return s;
    }
    bool convergent() const {
        if (k != 0 || entries.empty()) return false;
        int last = entries.back();
        return last < 0 || last >= 2;
    }
    EsIndex reversed() const {
        EsIndex r = *this;
        std::reverse(r.entries.begin(), r.entries.end());
        return r;
    }
    auto operator<=>(const EsIndex&) const = default;
    bool operator==(const EsIndex&) const = default;
};

// quasi-shuffle letters y_n, n nonzero signed
using YWord = std::vector<int>;

EsIndex make_index(Deco d, int k, const std::vector<int>& entries);

// The single-word encoding of an index: returns (coefficient, word) with
// zeta^deco_k(n1..np) = coeff * I(0; word; 1).
std::pair<Rat, ExtWord> index_to_word(const EsIndex& x);

// as a linear combination over words: image of the index
LinComb<ExtWord> index_word_lincomb(const EsIndex& x);

// Inverse on plain words with endpoints (0,1): I(0;W;1) = coeff * zeta_k(...).
// Empty for the all-zero word (that integral vanishes under regularization).
std::optional<std::pair<Rat, EsIndex>> word_to_index(const ExtWord& w);

// Rewrites I(a;X;b) as a combination of I(0;...;1), valid modulo products.
// Equal endpoints give 0; all-zero words are dropped.
LinComb<ExtWord> canonicalize_endpoints(const ExtWord& w);

// abs-add with sign multiplication: the "o" merge of two adjacent entries
inline int merge_entries(int a, int b) {
    int s = ((a < 0) != (b < 0)) ? -1 : 1;
    int v = (a < 0 ? -a : a) + (b < 0 ? -b : b);
    return s * v;
}

// all coarsenings of the composition by merging consecutive entries;
// each result paired with the number of merges performed
std::vector<std::pair<std::vector<int>, int>> merge_coarsenings(const std::vector<int>& ns);

} // namespace es

#endif
