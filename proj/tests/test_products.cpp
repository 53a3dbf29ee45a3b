#include "doctest.h"

#include <functional>

#include "es/products.hpp"

using namespace es;

namespace {

std::vector<Word> all_words(int n) {
    std::vector<Word> out;
    Word cur;
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == n) { out.push_back(cur); return; }
        for (Letter l : {Letter::Zero, Letter::One, Letter::MinusOne}) {
            cur.push_back(l); rec(); cur.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<YWord> all_ywords(int wt, int maxdepth) {
    std::vector<YWord> out;
    YWord cur;
    std::function<void(int)> rec = [&](int left) {
        if (!cur.empty()) out.push_back(cur);
        if ((int)cur.size() == maxdepth) return;
        for (int a = 1; a <= left; ++a)
            for (int s : {1, -1}) {
                cur.push_back(s * a);
                rec(left - a);
                cur.pop_back();
            }
    };
    rec(wt);
    return out;
}

} // namespace

TEST_CASE("shuffle is commutative and associative") {
    Word a = {Letter::One, Letter::Zero};
    Word b = {Letter::MinusOne};
    Word c = {Letter::Zero, Letter::One};
    CHECK(shuffle(a, b) == shuffle(b, a));
    LinComb<Word> ab = shuffle(a, b), bc = shuffle(b, c);
    CHECK(shuffle(ab, LinComb<Word>(c)) == shuffle(LinComb<Word>(a), bc));
}

TEST_CASE("stuffle is commutative and associative") {
    YWord a = {2, -1}, b = {3}, c = {-2};
    CHECK(stuffle(a, b) == stuffle(b, a));
    CHECK(stuffle(stuffle(a, b), LinComb<YWord>(c)) ==
          stuffle(LinComb<YWord>(a), stuffle(b, c)));
}

TEST_CASE("shuffle antipode axiom, exhaustive to weight 6") {
    for (int n = 1; n <= 6; ++n) {
        for (auto& w : all_words(n)) {
            LinComb<Word> acc;
            for (auto& [u, v] : deconcat(w))
                acc.add(shuffle(antipode_shuffle(u), LinComb<Word>(v)));
            CHECK(acc.zero());
        }
    }
}

TEST_CASE("stuffle antipode axiom, exhaustive to weight 6 depth 4") {
    for (auto& w : all_ywords(6, 4)) {
        LinComb<YWord> acc;
        for (auto& [u, v] : deconcat(w))
            acc.add(stuffle(antipode_stuffle(u), LinComb<YWord>(v)));
        CHECK(acc.zero());
    }
}

TEST_CASE("star and sharp maps intertwine the product formulas") {
    auto lift_star = [](const LinComb<YWord>& x) {
        LinComb<YWord> out;
        for (auto& [w, c] : x.terms) out.add(star_map(w), c);
        return out;
    };
    auto lift_sharp = [](const LinComb<YWord>& x) {
        LinComb<YWord> out;
        for (auto& [w, c] : x.terms) out.add(sharp_map(w), c);
        return out;
    };
    for (auto& a : all_ywords(4, 3)) {
        for (auto& b : all_ywords(3, 2)) {
            CHECK(lift_star(stuffle_star(a, b)) == stuffle(star_map(a), star_map(b)));
            CHECK(lift_sharp(stuffle_sharp(a, b)) == stuffle(sharp_map(a), sharp_map(b)));
        }
    }
}

TEST_CASE("alternating star product telescopes to the reversed star word") {
    // sum_i (-1)^i (y_{n_i}..y_{n_1})^* . (y_{n_{i+1}}..y_{n_p}), the i = p
    // term included, vanishes identically
    for (auto& w : all_ywords(6, 4)) {
        const int p = (int)w.size();
        LinComb<YWord> acc;
        for (int i = 0; i <= p; ++i) {
            YWord pre(w.begin(), w.begin() + i);
            std::reverse(pre.begin(), pre.end());
            YWord suf(w.begin() + i, w.end());
            LinComb<YWord> left = pre.empty() ? LinComb<YWord>(YWord{}) : star_map(pre);
            LinComb<YWord> term;
            if (suf.empty()) term = left;
            else {
                for (auto& [u, c] : left.terms)
                    term.add(u.empty() ? LinComb<YWord>(suf) : stuffle(u, suf), c);
            }
            acc.add(term, (i % 2) ? Rat(-1) : Rat(1));
        }
        CHECK(acc.zero());
    }
}

TEST_CASE("star map commutes with deconcatenation") {
    for (auto& w : all_ywords(5, 3)) {
        // delta(w^*) = (star x star)(delta w), compared cutwise
        LinComb<std::pair<YWord, YWord>> lhs, rhs;
        for (auto& [u, c] : star_map(w).terms)
            for (auto& [x, y] : deconcat(u)) lhs.add({x, y}, c);
        for (auto& [x, y] : deconcat(w)) {
            auto sx = x.empty() ? LinComb<YWord>(YWord{}) : star_map(x);
            auto sy = y.empty() ? LinComb<YWord>(YWord{}) : star_map(y);
            for (auto& [u, cu] : sx.terms)
                for (auto& [v, cv] : sy.terms) rhs.add({u, v}, cu * cv);
        }
        CHECK(lhs == rhs);
    }
}
