#include "es/products.hpp"

#include <functional>

namespace es {

LinComb<Word> shuffle(const Word& a, const Word& b) {
    LinComb<Word> out;
    Word cur;
    cur.reserve(a.size() + b.size());
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == a.size() && j == b.size()) { out.add(cur, 1); return; }
        if (i < a.size()) { cur.push_back(a[i]); rec(i + 1, j); cur.pop_back(); }
        if (j < b.size()) { cur.push_back(b[j]); rec(i, j + 1); cur.pop_back(); }
    };
    rec(0, 0);
    return out;
}

LinComb<Word> shuffle(const LinComb<Word>& a, const LinComb<Word>& b) {
    LinComb<Word> out;
    for (auto& [wa, ca] : a.terms)
        for (auto& [wb, cb] : b.terms)
            out.add(shuffle(wa, wb), ca * cb);
    return out;
}

LinComb<Word> antipode_shuffle(const Word& w) {
    Word r(w.rbegin(), w.rend());
    LinComb<Word> out;
    out.add(r, (w.size() % 2) ? Rat(-1) : Rat(1));
    return out;
}

std::vector<std::pair<Word, Word>> deconcat(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    for (size_t i = 0; i <= w.size(); ++i)
        out.push_back({Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end())});
    return out;
}

LinComb<YWord> stuffle(const YWord& a, const YWord& b) {
    LinComb<YWord> out;
    YWord cur;
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == a.size() && j == b.size()) { out.add(cur, 1); return; }
        if (i < a.size()) { cur.push_back(a[i]); rec(i + 1, j); cur.pop_back(); }
        if (j < b.size()) { cur.push_back(b[j]); rec(i, j + 1); cur.pop_back(); }
        if (i < a.size() && j < b.size()) {
            cur.push_back(merge_entries(a[i], b[j]));
            rec(i + 1, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

LinComb<YWord> stuffle(const LinComb<YWord>& a, const LinComb<YWord>& b) {
    LinComb<YWord> out;
    for (auto& [wa, ca] : a.terms)
        for (auto& [wb, cb] : b.terms)
            out.add(stuffle(wa, wb), ca * cb);
    return out;
}

LinComb<YWord> star_map(const YWord& w) {
    LinComb<YWord> out;
    for (auto& [ns, m] : merge_coarsenings(w)) out.add(ns, 1);
    return out;
}

LinComb<YWord> sharp_map(const YWord& w) {
    LinComb<YWord> out;
    for (auto& [ns, m] : merge_coarsenings(w)) out.add(ns, pow2((long)ns.size()));
    return out;
}

LinComb<YWord> antipode_stuffle(const YWord& w) {
    YWord r(w.rbegin(), w.rend());
    LinComb<YWord> out = star_map(r);
    if (w.size() % 2) out *= -1;
    return out;
}

std::vector<std::pair<YWord, YWord>> deconcat(const YWord& w) {
    std::vector<std::pair<YWord, YWord>> out;
    for (size_t i = 0; i <= w.size(); ++i)
        out.push_back({YWord(w.begin(), w.begin() + i), YWord(w.begin() + i, w.end())});
    return out;
}

LinComb<YWord> stuffle_star(const YWord& a, const YWord& b) {
    LinComb<YWord> out;
    YWord cur;
    std::function<void(size_t, size_t, int)> rec = [&](size_t i, size_t j, int merges) {
        if (i == a.size() && j == b.size()) {
            out.add(cur, (merges % 2) ? Rat(-1) : Rat(1));
            return;
        }
        if (i < a.size()) { cur.push_back(a[i]); rec(i + 1, j, merges); cur.pop_back(); }
        if (j < b.size()) { cur.push_back(b[j]); rec(i, j + 1, merges); cur.pop_back(); }
        if (i < a.size() && j < b.size()) {
            cur.push_back(merge_entries(a[i], b[j]));
            rec(i + 1, j + 1, merges + 1);
            cur.pop_back();
        }
    };
    rec(0, 0, 0);
    return out;
}

LinComb<YWord> stuffle_sharp(const YWord& a, const YWord& b) {
    LinComb<YWord> out;
    YWord cur;
    // a staircase block headed in one word eats k+1 entries there and k in the
    // other, all folded into a single entry; sign (-1)^k per block
    std::function<void(size_t, size_t, int)> rec = [&](size_t i, size_t j, int ksum) {
        if (i == a.size() && j == b.size()) {
            out.add(cur, (ksum % 2) ? Rat(-1) : Rat(1));
            return;
        }
        if (i < a.size()) {
            size_t maxk = std::min(a.size() - i - 1, b.size() - j);
            for (size_t k = 0; k <= maxk; ++k) {
                int e = a[i];
                for (size_t l = 1; l <= k; ++l) e = merge_entries(e, a[i + l]);
                for (size_t l = 0; l < k; ++l) e = merge_entries(e, b[j + l]);
                cur.push_back(e);
                rec(i + k + 1, j + k, ksum + (int)k);
                cur.pop_back();
            }
        }
        if (j < b.size()) {
            size_t maxk = std::min(b.size() - j - 1, a.size() - i);
            for (size_t k = 0; k <= maxk; ++k) {
                int e = b[j];
                for (size_t l = 1; l <= k; ++l) e = merge_entries(e, b[j + l]);
                for (size_t l = 0; l < k; ++l) e = merge_entries(e, a[i + l]);
                cur.push_back(e);
                rec(i + k, j + k + 1, ksum + (int)k);
                cur.pop_back();
            }
        }
    };
    rec(0, 0, 0);
    return out;
}

} // namespace es
