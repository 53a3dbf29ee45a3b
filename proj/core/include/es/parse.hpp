#ifndef ES_PARSE_HPP
#define ES_PARSE_HPP

#include <string>
#include <sstream>
#include "es/words.hpp"

namespace es {

// Text syntax
//   indices: z(2,-1,3)  zs(...)  zss(...)  zh(...)  zhh(...)  z_2(...)
//   words:   I(0; 1 0 -1; 1)  letters 0 1 -1 * -* # -#
EsIndex parse_index(const std::string& s);
ExtWord parse_word(const std::string& s);

std::string print_index(const EsIndex& x);
std::string print_word(const ExtWord& w);
std::string print_letter(Letter l);

template <class K, class F>
std::string print_lincomb(const LinComb<K>& lc, F&& pr) {
    if (lc.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : lc.terms) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "- "; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << rat_str(a) << "*";
        os << pr(k);
        first = false;
    }
    return os.str();
}

inline std::string print_lincomb(const LinComb<ExtWord>& lc) {
    return print_lincomb(lc, [](const ExtWord& w) { return print_word(w); });
}
inline std::string print_lincomb(const LinComb<EsIndex>& lc) {
    return print_lincomb(lc, [](const EsIndex& x) { return print_index(x); });
}

} // namespace es

#endif
