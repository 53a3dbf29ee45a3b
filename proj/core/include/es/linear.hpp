#ifndef ES_LINEAR_HPP
#define ES_LINEAR_HPP

#include <map>
#include "es/rational.hpp"

namespace es {

// formal Q-linear combination with zero coefficients pruned on the fly
template <class K>
struct LinComb {
    std::map<K, Rat> terms;

    LinComb() = default;
    LinComb(const K& k, const Rat& c = 1) { add(k, c); }

    void add(const K& k, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(k);
        if (it == terms.end()) { terms.emplace(k, c); return; }
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    void add(const LinComb& o, const Rat& c = 1) {
        for (auto& [k, v] : o.terms) add(k, v * c);
    }
    LinComb& operator+=(const LinComb& o) { add(o); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, -1); return *this; }
    LinComb& operator*=(const Rat& c) {
        if (c == 0) { terms.clear(); return *this; }
        for (auto& [k, v] : terms) v *= c;
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(LinComb a, const Rat& c) { a *= c; return a; }
    friend LinComb operator*(const Rat& c, LinComb a) { a *= c; return a; }

    bool zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }
    Rat coeff(const K& k) const {
        auto it = terms.find(k);
        return it == terms.end() ? Rat(0) : it->second;
    }
    bool operator==(const LinComb& o) const { return terms == o.terms; }

    // apply a K -> LinComb<K2> map linearly
    template <class F>
    auto map(F&& f) const {
        using K2 = typename std::decay_t<decltype(f(std::declval<K>()))>::key_type;
        LinComb<K2> out;
        for (auto& [k, v] : terms) out.add(f(k), v);
        return out;
    }

    using key_type = K;
};

} // namespace es

#endif
