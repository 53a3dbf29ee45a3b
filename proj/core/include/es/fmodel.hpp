#ifndef ES_FMODEL_HPP
#define ES_FMODEL_HPP

#include <compare>
#include <vector>

#include "es/linear.hpp"

namespace es {

// Free comodule model: noncommutative words in odd generators f_m tensored
// with a polynomial part f_2^e. Everything about the coaction is literally
// decidable here, which makes it the right place to sanity-check kernel and
// dimension statements before trusting them on actual words.

// N1: generators f_3, f_5, ...   N2: f_1, f_3, f_5, ...
enum class FMode { N1, N2 };

struct FWord {
    std::vector<int> gens;  // odd generator weights, left to right
    int e2 = 0;             // exponent of f_2

    int weight() const {
        int w = 2 * e2;
        for (int g : gens) w += g;
        return w;
    }
    auto operator<=>(const FWord&) const = default;
};

// all words of the given weight in the given mode, deterministic order
std::vector<FWord> enumerate_fwords(int weight, FMode mode);

// graded dimension of the model
long fmodel_dim(int weight, FMode mode);

// derivation indexed by the odd generator weight m: strips a leading f_m,
// kills the word otherwise; the polynomial part just rides along
LinComb<FWord> f_derivation(int m, const FWord& x);
LinComb<FWord> f_derivation(int m, const LinComb<FWord>& x);

// commutative product: shuffle on the generator letters, exponents add
LinComb<FWord> f_shuffle(const FWord& x, const FWord& y);

struct FKernelReport {
    int weight = 0;
    long dim = 0;          // dimension of the graded piece
    long kernel_dim = 0;   // dim of the joint kernel of all D_m, m < weight
    std::vector<FWord> kernel_basis;
};

// joint kernel of every derivation of weight below n, by exact rank
FKernelReport kernel_check(int n, FMode mode);

} // namespace es

#endif
