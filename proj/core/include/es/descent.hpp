#ifndef ES_DESCENT_HPP
#define ES_DESCENT_HPP

#include <set>
#include <string>
#include <vector>

#include "es/words.hpp"

namespace es {

// Detection of honorary multiple zeta values: alternating sums whose Galois
// side never leaves the unramified part. The recursion follows the cut
// structure of the odd derivations; membership of a right side is decided
// syntactically (all entries positive) or by prior certification, never by
// attempting a basis decomposition.

enum class DescentVerdict {
    CertifiedUnramified,
    SufficientConditionsMet,
    Inconclusive,
    FailsD1,
};

struct DescentTraceEntry {
    int r = 0;           // derivation weight 2r+1, 0 for the D1 gate
    EsIndex right;
    std::string status;  // plain / certified / seed / bar1 / uncertified
};

struct DescentReport {
    DescentVerdict verdict = DescentVerdict::Inconclusive;
    std::vector<DescentTraceEntry> trace;
    bool ok() const { return verdict == DescentVerdict::CertifiedUnramified; }
};

// the four syntactic sufficient conditions on a plain index
struct C1C4 {
    bool c1 = false;  // no bar-1 entry
    bool c2 = false;  // odd-weight prefixes leave a certified suffix
    bool c3 = false;  // interior odd cuts leave a certified remainder
    bool c4 = false;  // sign-twisted even windows are palindromic
    bool all() const { return c1 && c2 && c3 && c4; }
};

C1C4 check_C1_C4(const EsIndex& x, const std::set<EsIndex>* seeds = nullptr);

// One cut term of the odd derivation on a plain index, in index form.
// sign and left are recorded for inspection; the certification logic only
// ever looks at the right sides.
struct DescentTerm {
    int i = 0, j = 0;  // window, 1-based; j = 0 for initial cuts
    int y = 0;         // surviving piece of the boundary entry, interior cuts
    int sign = +1;
    EsIndex left;      // subscripted plain index
    EsIndex right;
};

// terms of D_{2r+1} grouped by cut type; pairs cancelled by a palindromic
// window are already removed, so the c list is empty exactly when the
// symmetry condition holds for the windows of this r
struct DescentTerms {
    std::vector<DescentTerm> a0;  // initial cuts
    std::vector<DescentTerm> ab;  // interior cuts, a piece of size y survives
    std::vector<DescentTerm> c;   // even windows leaving a bar-1 behind
};

DescentTerms descent_derivation_terms(const EsIndex& x, int r);

// full recursion: D1 must die in the Lie coalgebra, every right side of
// every odd derivation must be certifiable in turn
DescentReport certify(const EsIndex& x, const std::set<EsIndex>* seeds = nullptr);

// word-engine check that D1 of the index vanishes modulo relations
bool d1_vanishes(const EsIndex& x);

} // namespace es

#endif
