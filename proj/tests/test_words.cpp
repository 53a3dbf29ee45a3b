#include "doctest.h"

#include <functional>

#include "es/words.hpp"
#include "es/parse.hpp"
#include "es/expansions.hpp"

using namespace es;

TEST_CASE("single-word encodings of the decorated depth-3 example") {
    // zeta(2,-1,3) and its star/sharp cousins
    auto [cp, wp] = index_to_word(parse_index("z(2,-1,3)"));
    CHECK(cp == -1);
    CHECK(wp == parse_word("I(0; -1 0 -1 1 0 0; 1)"));

    auto [cs, ws] = index_to_word(parse_index("zs(2,-1,3)"));
    CHECK(cs == -1);
    CHECK(ws == parse_word("I(0; -1 0 -* * 0 0; 1)"));

    auto [ch, wh] = index_to_word(parse_index("zh(2,-1,3)"));
    CHECK(ch == -2);
    CHECK(wh == parse_word("I(0; -1 0 -# # 0 0; 1)"));

    auto [css, wss] = index_to_word(parse_index("zss(2,-1,3)"));
    CHECK(css == -1);
    CHECK(wss == parse_word("I(0; -* 0 -* * 0 0; 1)"));

    auto [chh, whh] = index_to_word(parse_index("zhh(2,-1,3)"));
    CHECK(chh == -1);
    CHECK(whh == parse_word("I(0; -# 0 -# # 0 0; 1)"));
}

TEST_CASE("word/index round trip on all plain words up to weight 5") {
    std::function<void(ExtWord&, int)> rec = [&](ExtWord& w, int left) {
        if (left == 0) {
            auto back = word_to_index(w);
            if (w.all_zero()) {
                CHECK(!back.has_value());
            } else {
                REQUIRE(back.has_value());
                auto [c, x] = *back;
                auto [c2, w2] = index_to_word(x);
                CHECK(w2 == w);
                CHECK(c * c2 == 1);  // zeta = c*I and zeta = c2^{-1}... consistency
            }
            return;
        }
        for (Letter l : {Letter::Zero, Letter::One, Letter::MinusOne}) {
            w.letters.push_back(l);
            rec(w, left - 1);
            w.letters.pop_back();
        }
    };
    for (int n = 1; n <= 5; ++n) {
        ExtWord w;
        rec(w, n);
    }
}

TEST_CASE("parse/print round trips") {
    for (const char* s : {"z(3)", "z(2,-1,3)", "zs_2(-1,3)", "zhh(4,-2)", "z_1(2)"}) {
        CHECK(print_index(parse_index(s)) == s);
    }
    CHECK(print_word(parse_word("I(0; -1 0 -* * 0 0; 1)")) == "I(0; -1 0 -* * 0 0; 1)");
    CHECK(print_word(parse_word("I(-1; 1 0; 0)")) == "I(-1; 1 0; 0)");
}

TEST_CASE("endpoint canonicalization basics") {
    // closed paths vanish
    CHECK(canonicalize_endpoints(parse_word("I(1; 0 1; 1)")).zero());
    // I(-1; X; 1) = I(0;X;1) - I(0;-X;1) modulo products
    auto lc = canonicalize_endpoints(parse_word("I(-1; 1 0; 1)"));
    LinComb<ExtWord> want;
    want.add(parse_word("I(0; 1 0; 1)"), 1);
    want.add(parse_word("I(0; -1 0; 1)"), -1);
    CHECK(lc == want);
    // all-zero content is dropped
    CHECK(canonicalize_endpoints(parse_word("I(-1; 0 0; 1)")).zero());
}

TEST_CASE("star conversion at depth 3") {
    auto lc = to_plain(parse_index("zs(2,-1,3)"));
    CHECK(lc.coeff(parse_index("z(2,-1,3)")) == 1);
    CHECK(lc.coeff(parse_index("z(-3,3)")) == 1);
    CHECK(lc.coeff(parse_index("z(2,-4)")) == 1);
    CHECK(lc.coeff(parse_index("z(-6)")) == 1);
    CHECK(lc.size() == 4);
}

TEST_CASE("leading-zero regularization, small cases") {
    auto a = shuffle_regularize(parse_index("z_1(2)"));
    CHECK(a.size() == 1);
    CHECK(a.coeff(parse_index("z(3)")) == -2);
    auto b = shuffle_regularize(parse_index("z_2(-1)"));
    CHECK(b.size() == 1);
    CHECK(b.coeff(parse_index("z(-3)")) == 1);
}

TEST_CASE("printed expansion of the starstar example") {
    auto lc = to_plain_regularized(parse_index("zss(2,-1,3)"));
    CHECK(lc.coeff(parse_index("z(-6)")) == 11);
    CHECK(lc.coeff(parse_index("z(-3,3)")) == 2);
    CHECK(lc.coeff(parse_index("z(2,-4)")) == 1);
    CHECK(lc.coeff(parse_index("z(2,-1,3)")) == 1);
    CHECK(lc.coeff(parse_index("z(-2,4)")) == 3);
    CHECK(lc.coeff(parse_index("z(-1,5)")) == 6);
    CHECK(lc.coeff(parse_index("z(6)")) == -10);
    CHECK(lc.size() == 7);
}

TEST_CASE("index merges agree with the two-form expansion of marks") {
    for (const char* s : {"zs(2,-1,3)", "zh(2,-1,3)", "zss(2,-1,3)", "zhh(2,-1,3)",
                          "zs(1,2)", "zh(-2,1,-1)", "zss(3,1)", "zhh(-1,-1,2)"}) {
        EsIndex x = parse_index(s);
        LinComb<ExtWord> via_marks = index_to_plain_words(x);
        LinComb<ExtWord> via_merges;
        for (auto& [y, c] : to_plain(x).terms) {
            auto [cy, wy] = index_to_word(y);
            via_merges.add(wy, c * cy);
        }
        CHECK(via_marks == via_merges);
    }
}

TEST_CASE("decoration conversions invert") {
    for (const char* s : {"z(2,-1,3)", "z(3,1,2)", "z(-2,-2)"}) {
        EsIndex x = parse_index(s);
        for (Deco d : {Deco::Star, Deco::StarStar, Deco::Sharp, Deco::SharpSharp}) {
            LinComb<EsIndex> there = decorate_convert(x, d);
            LinComb<EsIndex> back;
            for (auto& [y, c] : there.terms) back.add(decorate_convert(y, Deco::Plain), c);
            CHECK(back == LinComb<EsIndex>(x));
        }
    }
}
