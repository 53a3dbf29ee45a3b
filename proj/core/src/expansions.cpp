#include "es/expansions.hpp"

#include <functional>

namespace es {

LinComb<ExtWord> expand_marks(const ExtWord& w) {
    LinComb<ExtWord> out;
    // depth-first over the marked positions
    std::vector<size_t> marked;
    for (size_t i = 0; i < w.letters.size(); ++i)
        if (is_marked(w.letters[i])) marked.push_back(i);
    const size_t m = marked.size();
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        ExtWord v = w;
        Rat c = 1;
        for (size_t j = 0; j < m; ++j) {
            Letter l = w.letters[marked[j]];
            bool take_zero = mask & (1ul << j);
            if (take_zero) {
                v.letters[marked[j]] = Letter::Zero;
                c *= -1;
            } else {
                v.letters[marked[j]] = letter_sign(l) > 0 ? Letter::One : Letter::MinusOne;
                if (mark_of(l) == Mark::Sharp) c *= 2;
            }
        }
        if (!v.all_zero()) out.add(v, c);  // bare 0^n integrates to 0
    }
    return out;
}

LinComb<ExtWord> expand_marks(const LinComb<ExtWord>& x) {
    LinComb<ExtWord> out;
    for (auto& [w, c] : x.terms) out.add(expand_marks(w), c);
    return out;
}

namespace {

// zeta^star_k -> plain: sum over all consecutive merges, coefficient 1
LinComb<EsIndex> star_to_plain(const EsIndex& x) {
    LinComb<EsIndex> out;
    for (auto& [ns, m] : merge_coarsenings(x.entries))
        out.add(EsIndex(Deco::Plain, x.k, ns), 1);
    return out;
}

// zeta^sharp_k -> plain: coefficient 2^{#blocks}
LinComb<EsIndex> sharp_to_plain(const EsIndex& x) {
    LinComb<EsIndex> out;
    for (auto& [ns, m] : merge_coarsenings(x.entries))
        out.add(EsIndex(Deco::Plain, x.k, ns), pow2((long)ns.size()));
    return out;
}

// plain -> star: coefficient (-1)^{#merges}
LinComb<EsIndex> plain_to_star(const EsIndex& x) {
    LinComb<EsIndex> out;
    for (auto& [ns, m] : merge_coarsenings(x.entries))
        out.add(EsIndex(Deco::Star, x.k, ns), (m % 2) ? Rat(-1) : Rat(1));
    return out;
}

// plain -> sharp: coefficient (-1)^{#merges} 2^{-p}, p the original depth
LinComb<EsIndex> plain_to_sharp(const EsIndex& x) {
    LinComb<EsIndex> out;
    Rat scale = pow2(-(long)x.entries.size());
    for (auto& [ns, m] : merge_coarsenings(x.entries))
        out.add(EsIndex(Deco::Sharp, x.k, ns), ((m % 2) ? Rat(-1) : Rat(1)) * scale);
    return out;
}

int abs_sum(const std::vector<int>& v, int upto) {
    int s = 0;
    for (int i = 0; i < upto; ++i) s += v[i] < 0 ? -v[i] : v[i];
    return s;
}

// double-decorated staircase: zeta^xx_k(n) = sum_i zeta^x_{k+|n1..ni|}(suffix)
LinComb<EsIndex> doubled_to_single(const EsIndex& x, Deco single) {
    LinComb<EsIndex> out;
    const int p = x.depth();
    for (int i = 0; i < p; ++i) {
        std::vector<int> suf(x.entries.begin() + i, x.entries.end());
        out.add(EsIndex(single, x.k + abs_sum(x.entries, i), suf), 1);
    }
    return out;
}

// inverse: zeta^x_k(n1..np) = zeta^xx_k(n1..np) - zeta^xx_{k+|n1|}(n2..np)
LinComb<EsIndex> single_to_doubled(const EsIndex& x, Deco doubled) {
    LinComb<EsIndex> out;
    out.add(EsIndex(doubled, x.k, x.entries), 1);
    if (x.depth() >= 2) {
        std::vector<int> suf(x.entries.begin() + 1, x.entries.end());
        int a0 = x.entries[0] < 0 ? -x.entries[0] : x.entries[0];
        out.add(EsIndex(doubled, x.k + a0, suf), -1);
    }
    return out;
}

template <class F>
LinComb<EsIndex> lift(const LinComb<EsIndex>& x, F&& f) {
    LinComb<EsIndex> out;
    for (auto& [k, c] : x.terms) out.add(f(k), c);
    return out;
}

} // namespace

LinComb<EsIndex> to_plain(const EsIndex& x) {
    switch (x.deco) {
        case Deco::Plain: return LinComb<EsIndex>(x);
        case Deco::Star:  return star_to_plain(x);
        case Deco::Sharp: return sharp_to_plain(x);
        case Deco::StarStar:
            return lift(doubled_to_single(x, Deco::Star), star_to_plain);
        case Deco::SharpSharp:
            return lift(doubled_to_single(x, Deco::Sharp), sharp_to_plain);
    }
    return {};
}

LinComb<EsIndex> decorate_convert(const EsIndex& x, Deco target) {
    if (x.deco == target) return LinComb<EsIndex>(x);
    LinComb<EsIndex> plain = to_plain(x);
    switch (target) {
        case Deco::Plain: return plain;
        case Deco::Star:  return lift(plain, plain_to_star);
        case Deco::Sharp: return lift(plain, plain_to_sharp);
        case Deco::StarStar:
            return lift(lift(plain, plain_to_star),
                        [](const EsIndex& y) { return single_to_doubled(y, Deco::StarStar); });
        case Deco::SharpSharp:
            return lift(lift(plain, plain_to_sharp),
                        [](const EsIndex& y) { return single_to_doubled(y, Deco::SharpSharp); });
    }
    return {};
}

LinComb<EsIndex> shuffle_regularize(const EsIndex& x) {
    if (x.deco != Deco::Plain)
        throw std::invalid_argument("shuffle_regularize wants a plain index");
    LinComb<EsIndex> out;
    const int p = x.depth();
    if (x.k == 0) { out.add(x, 1); return out; }
    if (p == 0) return out;  // I(0;0^k;1) = 0 once k >= 1
    // compositions i1+...+ip = k
    std::vector<int> comp(p, 0);
    Rat sign = (x.k % 2) ? Rat(-1) : Rat(1);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == p - 1) {
            comp[pos] = left;
            Rat c = sign;
            std::vector<int> ns(p);
            for (int j = 0; j < p; ++j) {
                int a = x.entries[j] < 0 ? -x.entries[j] : x.entries[j];
                c *= Rat(binom(a + comp[j] - 1, comp[j]));
                ns[j] = (x.entries[j] < 0 ? -1 : 1) * (a + comp[j]);
            }
            out.add(EsIndex(Deco::Plain, 0, ns), c);
            return;
        }
        for (int i = 0; i <= left; ++i) { comp[pos] = i; rec(pos + 1, left - i); }
    };
    rec(0, x.k);
    return out;
}

LinComb<EsIndex> to_plain_regularized(const EsIndex& x) {
    LinComb<EsIndex> out;
    for (auto& [y, c] : to_plain(x).terms)
        out.add(shuffle_regularize(y), c);
    return out;
}

LinComb<ExtWord> index_to_plain_words(const EsIndex& x) {
    auto [c, w] = index_to_word(x);
    LinComb<ExtWord> out = expand_marks(w);
    out *= c;
    return out;
}

} // namespace es
