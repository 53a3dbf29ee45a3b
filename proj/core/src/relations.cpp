#include "es/lie.hpp"

#include <functional>

#include "es/expansions.hpp"
#include "es/coeffs.hpp"

namespace es {

const std::vector<std::string> kRelationFamilies = {
    "depth1", "antipode_shuffle", "antipode_stuffle", "hybrid",
    "starstar_shift", "sharpsharp_rules", "parity_depthdrop", "octagon_lin",
    "coeff54",
};

namespace {

using Rows = std::vector<LinComb<ExtWord>>;

// all (n1..np) with sum of |ni| = m, each entry signed, p >= 1
std::vector<std::vector<int>> signed_compositions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) { if (!cur.empty()) out.push_back(cur); return; }
        for (int a = 1; a <= left; ++a)
            for (int s : {1, -1}) {
                cur.push_back(s * a);
                rec(left - a);
                cur.pop_back();
            }
    };
    rec(m);
    return out;
}

std::vector<Word> plain_words(int m) {
    std::vector<Word> out;
    Word cur;
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == m) { out.push_back(cur); return; }
        for (Letter l : {Letter::Zero, Letter::One, Letter::MinusOne}) {
            cur.push_back(l);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

LinComb<ExtWord> words_of(const EsIndex& x) { return index_to_plain_words(x); }

EsIndex idx(Deco d, int k, const std::vector<int>& e) { return EsIndex(d, k, e); }

void depth1(int n, Rows& out) {
    if (n == 1) { out.push_back(words_of(idx(Deco::Plain, 0, {1}))); return; }
    if (n % 2 == 0) {
        out.push_back(words_of(idx(Deco::Plain, 0, {n})));
        out.push_back(words_of(idx(Deco::Plain, 0, {-n})));
    } else {
        LinComb<ExtWord> r = words_of(idx(Deco::Plain, 0, {-n}));
        r.add(words_of(idx(Deco::Plain, 0, {n})), -(pow2(1 - n) - 1));
        out.push_back(r);
    }
}

void antipode_shuffle_rows(int n, Rows& out) {
    Rat sgn = (n % 2) ? Rat(1) : Rat(-1);  // (-1)^{w+1}
    for (auto& w : plain_words(n)) {
        Word r(w.rbegin(), w.rend());
        if (w > r) continue;  // one row per pair
        LinComb<ExtWord> row;
        row.add(ExtWord(0, w, 1), 1);
        row.add(ExtWord(0, r, 1), -sgn);
        if (!row.zero()) out.push_back(row);
    }
}

void antipode_stuffle_rows(int n, Rows& out) {
    for (int k = 0; k < n; ++k) {
        for (auto& comp : signed_compositions(n - k)) {
            std::vector<int> rev(comp.rbegin(), comp.rend());
            const int p = (int)comp.size();
            Rat sgn = (p % 2) ? Rat(1) : Rat(-1);  // (-1)^{p+1}
            LinComb<ExtWord> r1 = words_of(idx(Deco::Plain, k, comp));
            r1.add(words_of(idx(Deco::Star, k, rev)), -sgn);
            out.push_back(r1);
            LinComb<ExtWord> r2 = words_of(idx(Deco::Sharp, k, comp));
            r2.add(words_of(idx(Deco::Sharp, k, rev)), -sgn);
            out.push_back(r2);
        }
    }
}

void hybrid_rows(int n, Rows& out) {
    Rat refl = (n % 2) ? Rat(1) : Rat(-1);  // (-1)^{w+1}
    for (int k = 0; k + 1 <= n; ++k) {
        int m = n - k - 1;
        for (auto& W : plain_words(m)) {
            for (int s : {1, -1}) {
                Letter st = s > 0 ? Letter::Star : Letter::MinusStar;
                Word A, B, C;
                A.assign(k, Letter::Zero);
                A.push_back(st);
                A.insert(A.end(), W.begin(), W.end());
                // exchange: marked letter walks to the other end
                for (auto l : W) B.push_back(s > 0 ? l : negate(l));
                B.push_back(st);
                B.insert(B.end(), k, Letter::Zero);
                // reversal
                C.assign(k, Letter::Zero);
                C.push_back(st);
                for (auto it = W.rbegin(); it != W.rend(); ++it)
                    C.push_back(s > 0 ? *it : negate(*it));

                LinComb<ExtWord> ea = expand_marks(ExtWord(0, A, 1));
                LinComb<ExtWord> r1 = ea;
                r1.add(expand_marks(ExtWord(0, B, 1)), -1);
                if (!r1.zero()) out.push_back(r1);
                LinComb<ExtWord> r2 = ea;
                r2.add(expand_marks(ExtWord(0, C, 1)), -refl);
                if (!r2.zero()) out.push_back(r2);
            }
        }
    }
}

void starstar_rows(int n, Rows& out) {
    Rat refl = (n % 2) ? Rat(1) : Rat(-1);  // (-1)^{w+1}
    for (int k = 0; k < n; ++k) {
        for (auto& comp : signed_compositions(n - k)) {
            std::vector<int> rev(comp.rbegin(), comp.rend());
            LinComb<ExtWord> r = words_of(idx(Deco::StarStar, k, comp));
            r.add(words_of(idx(Deco::StarStar, k, rev)), -refl);
            if (!r.zero()) out.push_back(r);
        }
    }
    // Shift: subscript |n0|-1 re-enters as a trailing entry whose sign is the
    // product of all the others
    for (int a0 = 1; a0 < n; ++a0) {
        for (auto& comp : signed_compositions(n - a0 + 1)) {
            int sgn = 1;
            for (int e : comp) if (e < 0) sgn = -sgn;
            std::vector<int> shifted(comp.begin() + 1, comp.end());
            shifted.push_back(sgn * a0);
            int a1 = comp[0] < 0 ? -comp[0] : comp[0];
            LinComb<ExtWord> r = words_of(idx(Deco::StarStar, a0 - 1, comp));
            r.add(words_of(idx(Deco::StarStar, a1 - 1, shifted)), -1);
            if (!r.zero()) out.push_back(r);
        }
    }
}

void sharpsharp_rows(int n, Rows& out) {
    for (int k = 0; k <= n; ++k) {
        for (auto& comp : signed_compositions(n - k)) {
            const int p = (int)comp.size();
            const int w = n;
            std::vector<int> rev(comp.rbegin(), comp.rend());
            // Reverse
            {
                LinComb<ExtWord> r = words_of(idx(Deco::SharpSharp, k, comp));
                r.add(words_of(idx(Deco::SharpSharp, k, rev)), (w % 2) ? Rat(-1) : Rat(1));
                if ((w + p) % 2 == 1)
                    r.add(words_of(idx(Deco::Sharp, k, comp)), -1);
                if (!r.zero()) out.push_back(r);
            }
            // Cut
            if ((w + p) % 2 == 1 && p >= 2) {
                int ap = comp.back() < 0 ? -comp.back() : comp.back();
                std::vector<int> head(comp.begin(), comp.end() - 1);
                LinComb<ExtWord> r = words_of(idx(Deco::SharpSharp, k, comp));
                r.add(words_of(idx(Deco::SharpSharp, k + ap, head)), -1);
                if (!r.zero()) out.push_back(r);
            }
            // Minus: |np| shrinks while the subscript grows
            if ((w + p) % 2 == 1) {
                int ap = comp.back() < 0 ? -comp.back() : comp.back();
                int sp = comp.back() < 0 ? -1 : 1;
                for (int i = 1; i < ap; ++i) {
                    // rewrite zhh_{k}(..,np) with base subscript m = k + i
                    std::vector<int> tail = comp;
                    tail.back() = sp * (ap - i);
                    LinComb<ExtWord> r = words_of(idx(Deco::SharpSharp, k, comp));
                    r.add(words_of(idx(Deco::SharpSharp, k + i, tail)), -1);
                    if (!r.zero()) out.push_back(r);
                }
            }
            // Sign
            if ((w + p) % 2 == 1) {
                std::vector<int> flip = comp;
                flip.back() = -flip.back();
                LinComb<ExtWord> r = words_of(idx(Deco::SharpSharp, k, comp));
                r.add(words_of(idx(Deco::SharpSharp, k, flip)), -1);
                if (!r.zero()) out.push_back(r);
            }
        }
    }
    // Shift, for w+p even: zhh_{m-1}(n1..np) == zhh_{|n1|-1}(n2..np, e1..ep*m)
    for (int m = 1; m <= n; ++m) {
        for (auto& comp : signed_compositions(n - m + 1)) {
            const int p = (int)comp.size();
            if ((n + p) % 2 != 0) continue;
            int sgn = 1;
            for (int e : comp) if (e < 0) sgn = -sgn;
            std::vector<int> shifted(comp.begin() + 1, comp.end());
            shifted.push_back(sgn * m);
            int a1 = comp[0] < 0 ? -comp[0] : comp[0];
            LinComb<ExtWord> r = words_of(idx(Deco::SharpSharp, m - 1, comp));
            r.add(words_of(idx(Deco::SharpSharp, a1 - 1, shifted)), -1);
            if (!r.zero()) out.push_back(r);
        }
    }
}

void parity_rows(int n, Rows& out) {
    for (int m = 1; m <= n; ++m) {
        for (auto& comp : signed_compositions(n - m + 1)) {
            const int p = (int)comp.size();
            if ((n + p) % 2 != 1) continue;  // needs w + p odd
            std::vector<int> rev(comp.rbegin(), comp.rend());
            LinComb<ExtWord> r = words_of(idx(Deco::Plain, m - 1, comp));
            r *= 2;
            if (p >= 2) {
                int a1 = comp[0] < 0 ? -comp[0] : comp[0];
                std::vector<int> t1(comp.begin() + 1, comp.end());
                r.add(words_of(idx(Deco::Plain, m + a1 - 1, t1)), 1);
                int ap = comp.back() < 0 ? -comp.back() : comp.back();
                std::vector<int> t2(rev.begin() + 1, rev.end());
                r.add(words_of(idx(Deco::Plain, m + ap - 1, t2)),
                      (p % 2) ? Rat(1) : Rat(-1));
            }
            Rat msgn = (p % 2) ? Rat(1) : Rat(-1);  // (-1)^{p+1}
            for (auto& [co, merges] : merge_coarsenings(rev))
                if (merges >= 1)
                    r.add(words_of(idx(Deco::Plain, m - 1, co)), -msgn);
            if (!r.zero()) out.push_back(r);
        }
    }
}

// Generating series coefficients for the three rotated versions of the
// straight-path series on the thrice-punctured line.  For a word
// e0^b0 e_mu1 e0^b1 ... e_muq e0^bq the coefficient is a single integral
// word, with nonzero letters remapped and an overall sign:
//   kind 2:  plain letters, sign flipped, weight sign (-1)^q
//   kind 3:  starred letters, sign flipped, weight sign (-1)^m
//   kind 4:  starred letters, sign kept, weight sign (-1)^{m+1}
// (m the length of u).  Starred letters get expanded to two-letter form.
LinComb<ExtWord> series_coeff(const Word& u, int kind) {
    int q = 0;
    Word letters;
    for (Letter l : u) {
        if (is_zero(l)) { letters.push_back(l); continue; }
        ++q;
        int s = (kind == 4) ? letter_sign(l) : -letter_sign(l);
        letters.push_back(kind == 2 ? (s > 0 ? Letter::One : Letter::MinusOne)
                                    : (s > 0 ? Letter::Star : Letter::MinusStar));
    }
    Rat sign;
    if (kind == 2) sign = (q % 2) ? Rat(-1) : Rat(1);
    else if (kind == 3) sign = (u.size() % 2) ? Rat(-1) : Rat(1);
    else sign = (u.size() % 2) ? Rat(1) : Rat(-1);
    LinComb<ExtWord> out = expand_marks(ExtWord(0, letters, 1));
    out *= sign;
    return out;
}

void octagon_rows(int n, Rows& out) {
    // The monodromy constraint in commutator form,
    //   [Phi2 - Phi3, e0] + [Phi3, e_{-1}] + [Phi4, e1] = 0 mod products,
    // read off coefficient-wise: each word of weight n+1 cuts its first or
    // last letter against the matching series and the cuts must cancel.
    for (auto& W : plain_words(n + 1)) {
        LinComb<ExtWord> row;
        Word head(W.begin() + 1, W.end());
        Word tail(W.begin(), W.end() - 1);
        switch (W.front()) {
            case Letter::Zero:
                row.add(series_coeff(head, 2), -1);
                row.add(series_coeff(head, 3), 1);
                break;
            case Letter::MinusOne: row.add(series_coeff(head, 3), -1); break;
            default: row.add(series_coeff(head, 4), 1); break;
        }
        switch (W.back()) {
            case Letter::Zero:
                row.add(series_coeff(tail, 2), 1);
                row.add(series_coeff(tail, 3), -1);
                break;
            case Letter::MinusOne: row.add(series_coeff(tail, 3), 1); break;
            default: row.add(series_coeff(tail, 4), -1); break;
        }
        if (!row.zero()) out.push_back(row);
    }
}

void coeff54_rows(int n, Rows& out) {
    // depth-1 reductions of the Hoffman-star blocks; weights are odd
    if (n % 2 == 0) return;
    long r = (n - 1) / 2;
    auto barodd = [&](long rr) {
        return words_of(idx(Deco::Plain, 0, {-(int)(2 * rr + 1)}));
    };
    if (r >= 1) {
        std::vector<int> twos(r, 2);
        LinComb<ExtWord> a = words_of(idx(Deco::Star, 1, twos));
        // the tail of the generating series telescopes against the even-weight
        // blocks, leaving twice the odd single zeta (not its alternating twin)
        a.add(words_of(idx(Deco::Plain, 0, {(int)(2 * r + 1)})), 2);
        out.push_back(a);
        LinComb<ExtWord> b = words_of(idx(Deco::StarStar, 1, twos));
        b.add(barodd(r), -coeff_C(r));
        out.push_back(b);
    }
    // zs(2^a,3,2^b) and zss(2^a,3,2^b), weight 2(a+b+1)+1
    if (r >= 1) {
        for (long a = 0; a + 1 <= r; ++a) {
            long b = r - 1 - a;
            std::vector<int> e;
            e.insert(e.end(), a, 2);
            e.push_back(3);
            e.insert(e.end(), b, 2);
            LinComb<ExtWord> ra = words_of(idx(Deco::Star, 0, e));
            ra.add(barodd(r), -coeff_A(a, b));
            out.push_back(ra);
            LinComb<ExtWord> rb = words_of(idx(Deco::StarStar, 0, e));
            rb.add(barodd(r), -coeff_B(a, b) * coeff_C(r));
            out.push_back(rb);
        }
    }
    // subscript-2 and mixed-level reductions
    if (r >= 2) {
        for (long a = 0; a + 2 <= r; ++a) {
            long b = r - 2 - a;
            std::vector<int> e;
            e.insert(e.end(), a, 2);
            e.push_back(3);
            e.insert(e.end(), b, 2);
            LinComb<ExtWord> rr2 = words_of(idx(Deco::StarStar, 2, e));
            rr2.add(barodd(r), -coeff_Bt(a + 1, b));
            out.push_back(rr2);
        }
        for (long a = 0; a + 3 <= r; ++a) {
            long b = r - 3 - a;
            if (b < 0) break;
            std::vector<int> e;
            e.insert(e.end(), a, 2);
            e.push_back(3);
            e.insert(e.end(), b, 2);
            e.push_back(3);
            LinComb<ExtWord> rr1 = words_of(idx(Deco::StarStar, 1, e));
            rr1.add(barodd(r), -coeff_Bt(b + 1, a + 1));
            out.push_back(rr1);
        }
    }
}

} // namespace

std::vector<LinComb<ExtWord>> generate_relations(int weight, const std::set<std::string>& families) {
    Rows out;
    auto has = [&](const char* f) {
        return families.empty() || families.count(f) > 0;
    };
    if (has("depth1")) depth1(weight, out);
    if (has("antipode_shuffle")) antipode_shuffle_rows(weight, out);
    if (has("antipode_stuffle")) antipode_stuffle_rows(weight, out);
    if (has("hybrid")) hybrid_rows(weight, out);
    if (has("starstar_shift")) starstar_rows(weight, out);
    if (has("sharpsharp_rules")) sharpsharp_rows(weight, out);
    if (has("parity_depthdrop")) parity_rows(weight, out);
    if (has("octagon_lin")) octagon_rows(weight, out);
    if (has("coeff54")) coeff54_rows(weight, out);
    return out;
}

LSpace build_lspace(int weight, const std::set<std::string>& families) {
    return LSpace(weight, generate_relations(weight, families));
}

} // namespace es
