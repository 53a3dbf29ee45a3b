#include "es/lie.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

#include "es/products.hpp"

namespace es {

namespace {

using Coded = std::vector<int8_t>;

int8_t code_letter(Letter l) {
    switch (l) {
        case Letter::Zero: return 0;
        case Letter::One: return 1;
        case Letter::MinusOne: return 2;
        default: throw std::invalid_argument("marked letter in Lie-coalgebra word");
    }
}

bool is_lyndon(const Coded& w) {
    // strictly smaller than all proper suffixes
    for (size_t i = 1; i < w.size(); ++i) {
        Coded suf(w.begin() + i, w.end());
        if (!(w < suf)) return false;
    }
    return true;
}

// Duval's algorithm, alphabet {0,1,2}; keeps only the words of full length
std::vector<Coded> lyndon_words(int n) {
    std::vector<Coded> out;
    Coded w{0};
    for (;;) {
        if ((int)w.size() == n) out.push_back(w);
        size_t m = w.size();
        while ((int)w.size() < n) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == 2) w.pop_back();
        if (w.empty()) break;
        ++w.back();
    }
    return out;
}

// concatenation-algebra expansion of the standard bracketing
using Expansion = std::map<Coded, long long>;

Expansion concat_mul(const Expansion& a, const Expansion& b, int sign) {
    Expansion out;
    for (auto& [u, cu] : a)
        for (auto& [v, cv] : b) {
            Coded w = u;
            w.insert(w.end(), v.begin(), v.end());
            out[w] += sign * cu * cv;
        }
    return out;
}

const Expansion& bracket_expansion(const Coded& w, std::map<Coded, Expansion>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    Expansion e;
    if (w.size() == 1) {
        e[w] = 1;
    } else {
        // standard factorization: v = longest proper Lyndon suffix
        size_t cut = 1;
        for (size_t i = 1; i < w.size(); ++i) {
            Coded suf(w.begin() + i, w.end());
            if (is_lyndon(suf)) { cut = i; break; }
        }
        Coded u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
        const Expansion& eu = bracket_expansion(u, memo);
        const Expansion& ev = bracket_expansion(v, memo);
        e = concat_mul(eu, ev, +1);
        for (auto& [k, c] : concat_mul(ev, eu, -1)) {
            e[k] += c;
            if (e[k] == 0) e.erase(k);
        }
    }
    return memo.emplace(w, std::move(e)).first->second;
}

std::map<int, LyndonBasis> g_basis_cache;
std::mutex g_basis_mutex;

} // namespace

std::vector<int8_t> code_word(const Word& w) {
    Coded c(w.size());
    for (size_t i = 0; i < w.size(); ++i) c[i] = code_letter(w[i]);
    return c;
}

const LyndonBasis& LyndonBasis::get(int weight) {
    std::lock_guard<std::mutex> lk(g_basis_mutex);
    auto it = g_basis_cache.find(weight);
    if (it != g_basis_cache.end()) return it->second;

    LyndonBasis b;
    b.weight = weight;
    b.lyndon = lyndon_words(weight);
    std::map<Coded, Expansion> memo;
    for (size_t li = 0; li < b.lyndon.size(); ++li) {
        const Expansion& e = bracket_expansion(b.lyndon[li], memo);
        for (auto& [w, c] : e) b.pairing[w].push_back({(int)li, c});
    }
    return g_basis_cache.emplace(weight, std::move(b)).first->second;
}

std::vector<Rat> LyndonBasis::coords(const LinComb<Word>& x) const {
    std::vector<Rat> v(lyndon.size(), Rat(0));
    for (auto& [w, c] : x.terms) {
        if ((int)w.size() != weight)
            throw std::invalid_argument("mixed weights in coordinate computation");
        auto it = pairing.find(code_word(w));
        if (it == pairing.end()) continue;
        for (auto& [li, pc] : it->second) v[li] += c * Rat((long)pc);
    }
    return v;
}

std::vector<Rat> LyndonBasis::coords(const LinComb<ExtWord>& x) const {
    LinComb<Word> y;
    for (auto& [w, c] : x.terms) {
        if (w.start != 0 || w.end != 1)
            throw std::invalid_argument("coords wants endpoints (0;..;1)");
        y.add(w.letters, c);
    }
    return coords(y);
}

LinComb<Word> project_indecomposable(const Word& w) {
    LinComb<Word> out;
    const int n = (int)w.size();
    if (n == 0) return out;
    // compositions of the word into k contiguous blocks, shuffled back together
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        std::vector<Word> blocks;
        Word cur;
        for (int i = 0; i < n; ++i) {
            cur.push_back(w[i]);
            bool cut = (i == n - 1) || (mask & (1ul << i));
            if (cut) { blocks.push_back(cur); cur.clear(); }
        }
        LinComb<Word> sh(blocks[0]);
        for (size_t i = 1; i < blocks.size(); ++i) sh = shuffle(sh, LinComb<Word>(blocks[i]));
        Rat c = Rat(1, (long)blocks.size());
        if ((blocks.size() + 1) % 2) c = -c;
        out.add(sh, c);
    }
    return out;
}

LinComb<Word> project_indecomposable(const LinComb<Word>& x) {
    LinComb<Word> out;
    for (auto& [w, c] : x.terms) out.add(project_indecomposable(w), c);
    return out;
}

LSpace::LSpace(int w) : weight(w), basis(&LyndonBasis::get(w)) {}

LSpace::LSpace(int w, const std::vector<LinComb<ExtWord>>& rels) : LSpace(w) {
    add_rows(rels);
}

bool LSpace::reduce(std::vector<Rat>& v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
        const Rat& c = v[pivots[i]];
        if (c == 0) continue;
        Rat f = c;
        for (size_t j = 0; j < v.size(); ++j)
            if (rows[i][j] != 0) v[j] -= f * rows[i][j];
    }
    for (auto& c : v) if (c != 0) return false;
    return true;
}

namespace {

// 2^61 - 1; the relation coefficients are dyadic, so the prime never meets
// a denominator, and a nonzero vector hitting zero mod p is vanishingly rare
// (and only costs us a skipped row, caught downstream by rank checks)
constexpr uint64_t kP = 2305843009213693951ull;

uint64_t mod_mul(uint64_t a, uint64_t b) {
    unsigned __int128 x = (unsigned __int128)a * b;
    uint64_t r = (uint64_t)(x & kP) + (uint64_t)(x >> 61);
    r = (r & kP) + (r >> 61);
    if (r >= kP) r -= kP;
    return r;
}

uint64_t mod_pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mod_mul(r, a);
        a = mod_mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t mod_sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }

bool mod_of(const Rat& x, uint64_t& out) {
    uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), kP);
    uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), kP);
    if (den == 0) return false;
    out = mod_mul(num, mod_pow(den, kP - 2));
    return true;
}

bool mod_image(const std::vector<Rat>& v, std::vector<uint64_t>& out) {
    out.resize(v.size());
    for (size_t j = 0; j < v.size(); ++j)
        if (!mod_of(v[j], out[j])) return false;
    return true;
}

} // namespace

bool LSpace::add_row(std::vector<Rat> v) {
    std::vector<uint64_t> vm;
    bool mirrored = mod_image(v, vm);
    if (mirrored) {
        // cheap rejection pass in the prime field
        std::vector<uint64_t> t = vm;
        for (size_t i = 0; i < mrows.size(); ++i) {
            const uint64_t c = t[pivots[i]];
            if (c == 0) continue;
            for (size_t j = 0; j < t.size(); ++j)
                if (mrows[i][j]) t[j] = mod_sub(t[j], mod_mul(c, mrows[i][j]));
        }
        bool zero = true;
        for (uint64_t x : t) if (x) { zero = false; break; }
        if (zero) return false;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        const Rat c = v[pivots[i]];
        if (c == 0) continue;
        if (mirrored) {
            const uint64_t cm = vm[pivots[i]];
            for (size_t j = 0; j < v.size(); ++j)
                if (mrows[i][j]) vm[j] = mod_sub(vm[j], mod_mul(cm, mrows[i][j]));
        }
        for (size_t j = 0; j < v.size(); ++j)
            if (rows[i][j] != 0) v[j] -= c * rows[i][j];
    }
    int piv = -1;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) { piv = (int)j; break; }
    if (piv < 0) return false;
    Rat inv = Rat(1) / v[piv];
    for (auto& c : v) c *= inv;
    if (!mirrored || vm[piv] == 0) mirrored = mod_image(v, vm);
    else {
        const uint64_t im = mod_pow(vm[piv], kP - 2);
        for (auto& x : vm) x = mod_mul(x, im);
    }
    if (!mirrored)
        throw std::runtime_error("prime hit a denominator in LSpace::add_row");
    // back-substitute into existing rows to keep them fully reduced
    for (size_t i = 0; i < rows.size(); ++i) {
        const Rat c = rows[i][piv];
        if (c == 0) continue;
        const uint64_t cm = mrows[i][piv];
        for (size_t j = 0; j < v.size(); ++j) {
            if (vm[j]) mrows[i][j] = mod_sub(mrows[i][j], mod_mul(cm, vm[j]));
            if (v[j] != 0) rows[i][j] -= c * v[j];
        }
    }
    rows.push_back(std::move(v));
    mrows.push_back(std::move(vm));
    pivots.push_back(piv);
    return true;
}

void LSpace::add_rows(const std::vector<LinComb<ExtWord>>& rels) {
    for (auto& r : rels) {
        if (r.zero()) continue;
        add_row(basis->coords(r));
    }
}

bool LSpace::member(const LinComb<ExtWord>& x) const {
    auto v = basis->coords(x);
    return reduce(v);
}

bool LSpace::equiv(const LinComb<ExtWord>& x, const LinComb<ExtWord>& y) const {
    LinComb<ExtWord> d = x;
    d -= y;
    return member(d);
}

bool equiv_mod_L(const LinComb<ExtWord>& x, const LinComb<ExtWord>& y, const LSpace& sp) {
    return sp.equiv(x, y);
}

int gr_depth(const LinComb<ExtWord>& x, const LSpace& sp) {
    auto v0 = sp.basis->coords(x);
    {
        auto v = v0;
        if (sp.reduce(v)) return 0;
    }
    const int n = sp.weight;
    for (int d = 1; d <= n; ++d) {
        LSpace aug = sp;
        // throw in every weight-n word of depth <= d
        std::function<void(ExtWord&, int, int)> gen = [&](ExtWord& w, int pos, int used) {
            if (pos == n) {
                aug.add_row(sp.basis->coords(LinComb<ExtWord>(w)));
                return;
            }
            w.letters.push_back(Letter::Zero);
            gen(w, pos + 1, used);
            w.letters.pop_back();
            if (used < d) {
                for (Letter l : {Letter::One, Letter::MinusOne}) {
                    w.letters.push_back(l);
                    gen(w, pos + 1, used + 1);
                    w.letters.pop_back();
                }
            }
        };
        ExtWord w;
        gen(w, 0, 0);
        auto v = v0;
        if (aug.reduce(v)) return d;
    }
    return n;
}

uint64_t ModSpace::to_mod(const Rat& x) {
    uint64_t v;
    if (!mod_of(x, v))
        throw std::runtime_error("prime hit a denominator in ModSpace");
    return v;
}

uint64_t ModSpace::mul(uint64_t a, uint64_t b) { return mod_mul(a, b); }
uint64_t ModSpace::inv(uint64_t a) { return mod_pow(a, kPrime - 2); }

ModSpace::ModSpace(int w, const std::set<std::string>& families)
    : weight(w), basis(&LyndonBasis::get(w)) {
    for (auto& rel : generate_relations(w, families)) {
        if (rel.zero()) continue;
        auto vq = basis->coords(rel);
        std::vector<uint64_t> v(vq.size());
        for (size_t j = 0; j < vq.size(); ++j) v[j] = to_mod(vq[j]);
        for (size_t i = 0; i < rows.size(); ++i) {
            const uint64_t c = v[pivots[i]];
            if (!c) continue;
            for (size_t j = 0; j < v.size(); ++j)
                if (rows[i][j]) v[j] = mod_sub(v[j], mod_mul(c, rows[i][j]));
        }
        int piv = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j]) { piv = (int)j; break; }
        if (piv < 0) continue;
        const uint64_t im = inv(v[piv]);
        for (auto& x : v) x = mod_mul(x, im);
        for (size_t i = 0; i < rows.size(); ++i) {
            const uint64_t c = rows[i][piv];
            if (!c) continue;
            for (size_t j = 0; j < v.size(); ++j)
                if (v[j]) rows[i][j] = mod_sub(rows[i][j], mod_mul(c, v[j]));
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
    }
}

std::vector<uint64_t> ModSpace::residue(const LinComb<ExtWord>& x) const {
    auto vq = basis->coords(x);
    std::vector<uint64_t> v(vq.size());
    for (size_t j = 0; j < vq.size(); ++j) v[j] = to_mod(vq[j]);
    for (size_t i = 0; i < rows.size(); ++i) {
        const uint64_t c = v[pivots[i]];
        if (!c) continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (rows[i][j]) v[j] = mod_sub(v[j], mod_mul(c, rows[i][j]));
    }
    return v;
}

Rat ModSpace::reconstruct(uint64_t x) {
    // half-extended Euclid until the remainder drops under sqrt(p/2)
    long long r0 = (long long)kPrime, r1 = (long long)x;
    long long t0 = 0, t1 = 1;
    const long long bound = 1ll << 30;
    while (r1 > bound) {
        const long long q = r0 / r1;
        const long long r2 = r0 - q * r1;
        const long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0 || (t1 < 0 ? -t1 : t1) > bound)
        throw std::runtime_error("no small fraction lifts this residue");
    return Rat((long)r1) / Rat((long)t1);
}

} // namespace es
