#include "es/descent.hpp"

#include <map>
#include <mutex>

#include "es/coaction.hpp"
#include "es/expansions.hpp"
#include "es/lie.hpp"

namespace es {

namespace {

int aw(int n) { return n < 0 ? -n : n; }

bool all_positive(const EsIndex& x) {
    for (int n : x.entries)
        if (n < 0) return false;
    return true;
}

bool has_bar1(const EsIndex& x) {
    for (int n : x.entries)
        if (n == -1) return true;
    return false;
}

bool palindrome(const std::vector<int>& n, int i, int j) {
    while (i < j)
        if (n[i++] != n[j--]) return false;
    return true;
}

EsIndex subindex(const std::vector<int>& n, int from, int to) {
    return EsIndex(Deco::Plain, 0,
                   std::vector<int>(n.begin() + from, n.begin() + to + 1));
}

// recursion state; weight strictly drops along the recursion, so a plain
// memo is enough and no cycle guard is needed
struct Ctx {
    const std::set<EsIndex>* seeds = nullptr;
    std::map<EsIndex, bool> memo;
};

bool certify_rec(const EsIndex& x, Ctx& ctx, DescentReport* top);

// status of one right side inside the recursion
std::string right_status(const EsIndex& rgt, Ctx& ctx) {
    if (all_positive(rgt)) return "plain";
    if (ctx.seeds && ctx.seeds->count(rgt)) return "seed";
    if (has_bar1(rgt)) return "bar1";
    return certify_rec(rgt, ctx, nullptr) ? "certified" : "uncertified";
}

bool certify_rec(const EsIndex& x, Ctx& ctx, DescentReport* top) {
    if (all_positive(x)) return true;
    if (ctx.seeds && ctx.seeds->count(x)) return true;
    auto it = ctx.memo.find(x);
    if (it != ctx.memo.end() && !top) return it->second;
    bool ok = !has_bar1(x);
    const int w = x.weight();
    for (int r = 1; 2 * r + 1 < w && (ok || top); ++r) {
        auto terms = descent_derivation_terms(x, r);
        auto eat = [&](const DescentTerm& t) {
            std::string st = right_status(t.right, ctx);
            if (top) top->trace.push_back({r, t.right, st});
            if (st == "bar1" || st == "uncertified") ok = false;
        };
        for (auto& t : terms.a0) eat(t);
        for (auto& t : terms.ab) eat(t);
        for (auto& t : terms.c) eat(t);
    }
    ctx.memo[x] = ok;
    return ok;
}

} // namespace

DescentTerms descent_derivation_terms(const EsIndex& x, int r) {
    if (x.deco != Deco::Plain || x.k != 0)
        throw std::invalid_argument("plain index expected");
    const auto& n = x.entries;
    const int p = (int)n.size();
    const int cut = 2 * r + 1;
    DescentTerms out;

    // initial cuts: a prefix of the full cut weight leaves as left factor
    int acc = 0;
    for (int i = 0; i + 1 < p; ++i) {
        acc += aw(n[i]);
        if (acc != cut) continue;
        DescentTerm t;
        t.i = 1;
        t.j = i + 1;
        t.left = subindex(n, 0, i);
        t.right = subindex(n, i + 1, p - 1);
        out.a0.push_back(t);
    }

    for (int i = 0; i < p; ++i) {
        int s = 0, eps = 1;
        for (int j = i; j < p; ++j) {
            s += aw(n[j]);
            eps *= n[j] < 0 ? -1 : 1;
            if (j == i) continue;

            // interior cuts: window minus a piece y of a boundary entry
            const int y = s - cut;
            if (y >= 2 && (y <= aw(n[i]) || y <= aw(n[j])) &&
                !palindrome(n, i, j)) {
                EsIndex right(Deco::Plain, 0, {});
                right.entries.assign(n.begin(), n.begin() + i);
                right.entries.push_back(eps * y);
                right.entries.insert(right.entries.end(), n.begin() + j + 1,
                                     n.end());
                if (y <= aw(n[j])) {
                    DescentTerm t;
                    t.i = i + 1;
                    t.j = j + 1;
                    t.y = y;
                    t.sign = -1;
                    t.left = subindex(n, i, j - 1).reversed();
                    t.left.k = aw(n[j]) - y;
                    t.right = right;
                    out.ab.push_back(t);
                }
                if (y <= aw(n[i])) {
                    DescentTerm t;
                    t.i = i + 1;
                    t.j = j + 1;
                    t.y = y;
                    t.sign = +1;
                    t.left = subindex(n, i + 1, j);
                    t.left.k = aw(n[i]) - y;
                    t.right = right;
                    out.ab.push_back(t);
                }
            }

            // even windows with twisted sign leave a bar-1 behind
            if (s == cut + 1 && eps != 1 && !palindrome(n, i, j)) {
                EsIndex right(Deco::Plain, 0, {});
                right.entries.assign(n.begin(), n.begin() + i);
                right.entries.push_back(-1);
                right.entries.insert(right.entries.end(), n.begin() + j + 1,
                                     n.end());
                DescentTerm plus;
                plus.i = i + 1;
                plus.j = j + 1;
                plus.sign = +1;
                plus.left = subindex(n, i + 1, j);
                plus.left.k = aw(n[i]) - 1;
                plus.right = right;
                out.c.push_back(plus);
                DescentTerm minus = plus;
                minus.sign = -1;
                minus.left = subindex(n, i, j - 1).reversed();
                minus.left.k = aw(n[j]) - 1;
                out.c.push_back(minus);
            }
        }
    }
    return out;
}

bool d1_vanishes(const EsIndex& x) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    static const LSpace sp = build_lspace(
        1, {"depth1", "antipode_shuffle", "antipode_stuffle", "hybrid"});
    const LyndonBasis& lb1 = LyndonBasis::get(1);
    LinComb<TensorWW> tens;
    for (auto& [w, c] : index_to_plain_words(x).terms)
        tens.add(derivation_D(1, w), c);
    for (auto& [rw, left] : group_by_right(tens)) {
        auto v = lb1.coords(left);
        if (!sp.reduce(v)) return false;
    }
    return true;
}

C1C4 check_C1_C4(const EsIndex& x, const std::set<EsIndex>* seeds) {
    C1C4 out;
    const auto& n = x.entries;
    const int p = (int)n.size();
    out.c1 = !has_bar1(x);

    Ctx ctx;
    ctx.seeds = seeds;

    out.c2 = true;
    int acc = 0;
    for (int i = 0; i + 1 < p; ++i) {
        acc += aw(n[i]);
        if (acc % 2 == 0) continue;
        EsIndex suffix = subindex(n, i + 1, p - 1);
        if (!all_positive(suffix) && !certify_rec(suffix, ctx, nullptr))
            out.c2 = false;
    }

    out.c3 = true;
    const int w = x.weight();
    for (int r = 1; 2 * r + 1 < w; ++r)
        for (auto& t : descent_derivation_terms(x, r).ab)
            if (!all_positive(t.right) && !certify_rec(t.right, ctx, nullptr))
                out.c3 = false;

    out.c4 = true;
    for (int i = 0; i < p; ++i) {
        int s = 0, eps = 1;
        for (int j = i; j < p; ++j) {
            s += aw(n[j]);
            eps *= n[j] < 0 ? -1 : 1;
            if (s % 2 == 0 && eps != 1 && !palindrome(n, i, j)) out.c4 = false;
        }
    }
    return out;
}

DescentReport certify(const EsIndex& x, const std::set<EsIndex>* seeds) {
    DescentReport rep;
    if (x.deco != Deco::Plain || x.k != 0)
        throw std::invalid_argument("plain index expected");
    if (all_positive(x)) {
        rep.verdict = DescentVerdict::CertifiedUnramified;
        rep.trace.push_back({0, x, "plain"});
        return rep;
    }
    if (!d1_vanishes(x)) {
        rep.verdict = DescentVerdict::FailsD1;
        rep.trace.push_back({0, x, "D1 residue"});
        return rep;
    }
    rep.trace.push_back({0, x, "D1 = 0"});
    Ctx ctx;
    ctx.seeds = seeds;
    if (certify_rec(x, ctx, &rep)) {
        rep.verdict = DescentVerdict::CertifiedUnramified;
        return rep;
    }
    rep.verdict = check_C1_C4(x, seeds).all()
                      ? DescentVerdict::SufficientConditionsMet
                      : DescentVerdict::Inconclusive;
    return rep;
}

} // namespace es
