#include "es/words.hpp"

namespace es {

EsIndex make_index(Deco d, int k, const std::vector<int>& entries) {
    if (k < 0) throw std::invalid_argument("negative subscript");
    for (int n : entries)
        if (n == 0) throw std::invalid_argument("zero entry in index");
    if (d != Deco::Plain && entries.empty())
        throw std::invalid_argument("decorated index needs positive depth");
    return EsIndex(d, k, entries);
}

std::pair<Rat, ExtWord> index_to_word(const EsIndex& x) {
    const int p = x.depth();
    // running sign s_i = eps_i * ... * eps_p
    std::vector<int> s(p + 1, 1);
    for (int i = p - 1; i >= 0; --i)
        s[i] = (x.entries[i] < 0 ? -1 : 1) * s[i + 1];

    ExtWord w;
    w.start = 0; w.end = 1;
    w.letters.assign(x.k, Letter::Zero);
    for (int i = 0; i < p; ++i) {
        Mark m = Mark::None;
        switch (x.deco) {
            case Deco::Plain: break;
            case Deco::Star:  if (i > 0) m = Mark::Star; break;
            case Deco::StarStar: m = Mark::Star; break;
            case Deco::Sharp: if (i > 0) m = Mark::Sharp; break;
            case Deco::SharpSharp: m = Mark::Sharp; break;
        }
        w.letters.push_back(make_letter(s[i], m));
        int a = x.entries[i] < 0 ? -x.entries[i] : x.entries[i];
        for (int j = 1; j < a; ++j) w.letters.push_back(Letter::Zero);
    }
    Rat c = (p % 2) ? Rat(-1) : Rat(1);
    if (x.deco == Deco::Sharp) c *= 2;
    return {c, w};
}

LinComb<ExtWord> index_word_lincomb(const EsIndex& x) {
    auto [c, w] = index_to_word(x);
    // the inverse relation: the word as seen from the index side,
    // zeta = c * I  so  I = (1/c) * zeta; callers want zeta's image, i.e. c*w
    LinComb<ExtWord> out;
    out.add(w, c);
    return out;
}

std::optional<std::pair<Rat, EsIndex>> word_to_index(const ExtWord& w) {
    if (w.start != 0 || w.end != 1) return std::nullopt;
    for (auto l : w.letters) if (is_marked(l)) return std::nullopt;
    size_t i = 0;
    int k = 0;
    while (i < w.letters.size() && is_zero(w.letters[i])) { ++k; ++i; }
    if (i == w.letters.size()) return std::nullopt;  // all zeros: vanishes

    std::vector<int> s;  // running signs s_j at block heads
    std::vector<int> abs;
    while (i < w.letters.size()) {
        s.push_back(letter_sign(w.letters[i]));
        ++i;
        int a = 1;
        while (i < w.letters.size() && is_zero(w.letters[i])) { ++a; ++i; }
        abs.push_back(a);
    }
    const int p = (int)s.size();
    std::vector<int> entries(p);
    for (int j = 0; j < p; ++j) {
        int eps = (j + 1 < p) ? s[j] * s[j + 1] : s[j];
        entries[j] = eps * abs[j];
    }
    Rat c = (p % 2) ? Rat(-1) : Rat(1);  // zeta_k(n) = c * I(0;W;1)
    return std::make_pair(c, EsIndex(Deco::Plain, k, entries));
}

LinComb<ExtWord> canonicalize_endpoints(const ExtWord& w) {
    LinComb<ExtWord> out;
    if (w.letters.empty()) return out;          // unit, caller drops it
    if (w.start == w.end) return out;           // closed path vanishes
    if (w.all_zero()) return out;

    auto piece = [&](int8_t ep, const Rat& c) {
        if (ep == 0) return;
        ExtWord v = w;
        v.start = 0; v.end = 1;
        if (ep == -1) for (auto& l : v.letters) l = negate(l);
        if (!v.all_zero()) out.add(v, c);
    };
    // I(a;X;b) == I(0;X;b) - I(0;X;a) modulo products
    piece(w.end, 1);
    piece(w.start, -1);
    return out;
}

std::vector<std::pair<std::vector<int>, int>> merge_coarsenings(const std::vector<int>& ns) {
    std::vector<std::pair<std::vector<int>, int>> out;
    const int p = (int)ns.size();
    if (p == 0) { out.push_back({{}, 0}); return out; }
    // bitmask over the p-1 gaps; set bit = merge across that gap
    for (unsigned long m = 0; m < (1ul << (p - 1)); ++m) {
        std::vector<int> cur;
        int merges = 0;
        cur.push_back(ns[0]);
        for (int i = 1; i < p; ++i) {
            if (m & (1ul << (i - 1))) {
                cur.back() = merge_entries(cur.back(), ns[i]);
                ++merges;
            } else cur.push_back(ns[i]);
        }
        out.push_back({std::move(cur), merges});
    }
    return out;
}

} // namespace es
