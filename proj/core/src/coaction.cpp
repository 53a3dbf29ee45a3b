#include "es/coaction.hpp"

#include <algorithm>
#include <stdexcept>

namespace es {

namespace {

int8_t endpoint_of(Letter l) {
    switch (l) {
        case Letter::Zero: return 0;
        case Letter::One: return 1;
        case Letter::MinusOne: return -1;
        default: throw std::invalid_argument("marked letter cannot be a cut endpoint");
    }
}

} // namespace

LinComb<CoactTerm> coact(const ExtWord& w) {
    const int n = w.weight();
    // endpoint sequence a_0 .. a_{n+1}
    std::vector<int8_t> a(n + 2);
    a[0] = w.start;
    for (int i = 1; i <= n; ++i) a[i] = endpoint_of(w.letters[i - 1]);
    a[n + 1] = w.end;

    LinComb<CoactTerm> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> marked;
        marked.push_back(0);
        for (int i = 1; i <= n; ++i)
            if (mask & (1ul << (i - 1))) marked.push_back(i);
        marked.push_back(n + 1);

        CoactTerm t;
        for (size_t p = 0; p + 1 < marked.size(); ++p) {
            int lo = marked[p], hi = marked[p + 1];
            if (hi - lo <= 1) continue;  // unit factor
            ExtWord arc;
            arc.start = a[lo];
            arc.end = a[hi];
            arc.letters.assign(w.letters.begin() + lo, w.letters.begin() + (hi - 1));
            t.left.push_back(arc);
        }
        std::sort(t.left.begin(), t.left.end());
        t.right.start = w.start;
        t.right.end = w.end;
        for (size_t p = 1; p + 1 < marked.size(); ++p)
            t.right.letters.push_back(w.letters[marked[p] - 1]);
        out.add(t, 1);
    }
    return out;
}

LinComb<TensorWW> derivation_D(int r, const ExtWord& w) {
    const int n = w.weight();
    if (r < 1 || r > n) return {};  // r = n gives the full cut, word x unit
    std::vector<int8_t> a(n + 2);
    a[0] = w.start;
    for (int i = 1; i <= n; ++i) a[i] = endpoint_of(w.letters[i - 1]);
    a[n + 1] = w.end;

    LinComb<TensorWW> out;
    for (int i = 0; i + r + 1 <= n + 1; ++i) {
        ExtWord arc;
        arc.start = a[i];
        arc.end = a[i + r + 1];
        arc.letters.assign(w.letters.begin() + i, w.letters.begin() + i + r);
        LinComb<ExtWord> left = canonicalize_endpoints(arc);
        if (left.zero()) continue;
        ExtWord rest;
        rest.start = w.start;
        rest.end = w.end;
        rest.letters.assign(w.letters.begin(), w.letters.begin() + i);
        rest.letters.insert(rest.letters.end(), w.letters.begin() + i + r, w.letters.end());
        for (auto& [lw, lc] : left.terms) out.add({lw, rest}, lc);
    }
    return out;
}

LinComb<TensorWW> derivation_D(int r, const LinComb<ExtWord>& x) {
    LinComb<TensorWW> out;
    for (auto& [w, c] : x.terms) out.add(derivation_D(r, w), c);
    return out;
}

std::map<ExtWord, LinComb<ExtWord>> group_by_right(const LinComb<TensorWW>& t) {
    std::map<ExtWord, LinComb<ExtWord>> out;
    for (auto& [p, c] : t.terms) out[p.second].add(p.first, c);
    for (auto it = out.begin(); it != out.end();)
        it = it->second.zero() ? out.erase(it) : std::next(it);
    return out;
}

LinComb<TensorII> derivation_D_index(int r2p1, const EsIndex& x) {
    if (x.deco != Deco::Plain || x.k != 0)
        throw std::invalid_argument("closed-form derivation wants plain k=0 index");
    const int p = x.depth();
    auto aabs = [&](int i) { int v = x.entries[i]; return v < 0 ? -v : v; };
    auto wsum = [&](int i, int j) {  // |n_i|+...+|n_j|, 0-based inclusive
        int s = 0;
        for (int k = i; k <= j; ++k) s += aabs(k);
        return s;
    };
    LinComb<TensorII> out;

    // initial cuts: prefix of weight exactly 2r+1 splits off
    for (int i = 1; i < p; ++i) {
        if (wsum(0, i - 1) != r2p1) continue;
        std::vector<int> lhs(x.entries.begin(), x.entries.begin() + i);
        std::vector<int> rhs(x.entries.begin() + i, x.entries.end());
        out.add({EsIndex(Deco::Plain, 0, lhs), EsIndex(Deco::Plain, 0, rhs)}, 1);
    }

    // interior windows i..j (1-based in the closed form; 0-based here)
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            int win = wsum(i, j);
            if (r2p1 > win - 1) continue;
            int sgn = 1;
            for (int k = i; k <= j; ++k) if (x.entries[k] < 0) sgn = -sgn;
            std::vector<int> rhs(x.entries.begin(), x.entries.begin() + i);
            rhs.push_back(sgn * (win - r2p1));
            rhs.insert(rhs.end(), x.entries.begin() + j + 1, x.entries.end());
            EsIndex right(Deco::Plain, 0, rhs);

            int s1 = wsum(i, j - 1);
            if (s1 <= r2p1) {
                std::vector<int> lhs;
                for (int k = j - 1; k >= i; --k) lhs.push_back(x.entries[k]);
                out.add({EsIndex(Deco::Plain, r2p1 - s1, lhs), right}, -1);
            }
            int s2 = wsum(i + 1, j);
            if (s2 <= r2p1) {
                std::vector<int> lhs(x.entries.begin() + i + 1, x.entries.begin() + j + 1);
                out.add({EsIndex(Deco::Plain, r2p1 - s2, lhs), right}, 1);
            }
        }
    }
    return out;
}

} // namespace es
