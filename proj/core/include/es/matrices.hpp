#ifndef ES_MATRICES_HPP
#define ES_MATRICES_HPP

#include <string>
#include <vector>

#include "es/words.hpp"

namespace es {

// zs(2a0+1, 2a1+3, ..., 2a_{p-1}+3, -(2a_p+2)), all a_i >= 0.
// Depth 0 degenerates to the single entry -(2a0+2).
struct SharpBasisIndex {
    std::vector<int> a;

    int depth() const { return (int)a.size() - 1; }
    int weight() const;
    EsIndex to_index() const;  // Deco::Sharp, barred entries negative
    auto operator<=>(const SharpBasisIndex&) const = default;
};

// zst(2^{a0}, 3, 2^{a1}, 3, ..., 3, 2^{a_l}), all a_i >= 0
struct HoffmanStarIndex {
    std::vector<int> a;

    int level() const { return (int)a.size() - 1; }
    int weight() const;
    EsIndex to_index() const;  // Deco::Star over {2,3} entries
    auto operator<=>(const HoffmanStarIndex&) const = default;
};

// all depths together; count equals d_n with d_n = d_{n-2} + d_{n-3}
std::vector<SharpBasisIndex> enumerate_sharp_basis(int n);
std::vector<SharpBasisIndex> enumerate_sharp_basis(int n, int p);
std::vector<HoffmanStarIndex> enumerate_hoffman(int n);
std::vector<HoffmanStarIndex> enumerate_hoffman(int n, int l);

// d_2 = d_3 = d_4 = 1, d_n = d_{n-2} + d_{n-3}; d_0 = 1, d_1 = 0
long dim_count(int n);

// Matrix of one of the graded derivation stacks. Rows carry (r, target
// coordinates), columns the source coordinates; both sides ordered so that
// the deconcatenation entries sit on the diagonal. The scale exponent is
// the per-row power of two dividing that block in the 2-adic certificate.
struct DerivMatrix {
    int n = 0;
    int grade = 0;                                     // depth p or level l
    std::string kind;                                  // "sharp" or "hoffman"
    std::vector<std::vector<int>> cols;                // source coordinates
    std::vector<std::pair<int, std::vector<int>>> rows; // (r, target)
    std::vector<int> scale;                            // per-row exponent e, row *= 2^e
    std::vector<std::vector<Rat>> entry;               // entry[row][col], unscaled

    Rat scaled(int i, int j) const { return entry[i][j] * pow2(scale[i]); }
};

struct Mod2Certificate {
    bool square = false;
    bool diag_odd = false;      // every scaled diagonal entry is an odd unit
    bool upper_even = false;    // scaled entries above the diagonal have v2 >= 1
    bool det_odd = false;       // v2(det of scaled matrix) == 0
    Rat det;                    // det of the scaled matrix
    std::string note;

    bool ok() const { return square && det_odd; }
};

// depth-graded derivations on the Euler sharp family
DerivMatrix matrix_MD(int n, int p);
// level-graded derivations on the Hoffman star family
DerivMatrix matrix_ML(int n, int l);

Mod2Certificate certify(const DerivMatrix& m);

// Cross-check of the closed-form entries against the word-level coaction
// engine, row stack by row stack: the difference of the two computations
// must die in the Lie coalgebra modulo the lower filtration step. Returns
// true when every residue vanishes; mismatches are listed in the report.
bool engine_check(const DerivMatrix& m, std::string* report = nullptr);

// Same setup, but solves for the entries instead of checking them: returns
// a copy of m whose entries are the ones the engine dictates. Rows whose
// residues fail to be proportional to the single zeta class are flagged in
// the report and left at zero.
DerivMatrix engine_matrix(const DerivMatrix& m, std::string* report = nullptr);

// Bernoulli number B_n, B_1 = -1/2
Rat bernoulli(int n);

// normalized coefficient of zst(2^n) inside zstst(2^{2n}), via the
// partition sum over distinct part sizes
Rat dtilde(int n);

// tabulated values (weights 2..9 resp. 2..5)
Rat dtilde_table(int n);
std::vector<Rat> dtilde_ab_table(int n);

// residue of 1 - D~_n - sum_k D~^{k,n-1-k} with the tabulated values
Rat check_F_identity(int n);

// Star-to-sharp index rewriting for zst(2^{a0}, c1, ..., c_p, 2^{a_p}),
// every c_i != 2: returns (sign, sharp index). A vanishing first entry
// (a0 = 0 next to c1 = 1) is dropped from the output.
std::pair<Rat, EsIndex> lz_transform(const EsIndex& x);

} // namespace es

#endif
