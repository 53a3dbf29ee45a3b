#include "es/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace es {

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

int parse_int(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t d = j;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j == d) throw std::invalid_argument("expected integer in '" + s + "'");
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
}

} // namespace

EsIndex parse_index(const std::string& s) {
    size_t i = 0;
    skip_ws(s, i);
    if (i >= s.size() || s[i] != 'z')
        throw std::invalid_argument("index must start with z: '" + s + "'");
    ++i;
    Deco d = Deco::Plain;
    if (i + 1 < s.size() && s[i] == 's' && s[i + 1] == 's') { d = Deco::StarStar; i += 2; }
    else if (i < s.size() && s[i] == 's') { d = Deco::Star; ++i; }
    else if (i + 1 < s.size() && s[i] == 'h' && s[i + 1] == 'h') { d = Deco::SharpSharp; i += 2; }
    else if (i < s.size() && s[i] == 'h') { d = Deco::Sharp; ++i; }
    int k = 0;
    if (i < s.size() && s[i] == '_') { ++i; k = parse_int(s, i); }
    skip_ws(s, i);
    if (i >= s.size() || s[i] != '(') throw std::invalid_argument("expected ( in '" + s + "'");
    ++i;
    std::vector<int> entries;
    skip_ws(s, i);
    if (i < s.size() && s[i] == ')') { ++i; return make_index(d, k, entries); }
    for (;;) {
        entries.push_back(parse_int(s, i));
        skip_ws(s, i);
        if (i < s.size() && s[i] == ',') { ++i; continue; }
        if (i < s.size() && s[i] == ')') { ++i; break; }
        throw std::invalid_argument("expected , or ) in '" + s + "'");
    }
    return make_index(d, k, entries);
}

std::string print_letter(Letter l) {
    switch (l) {
        case Letter::Zero: return "0";
        case Letter::One: return "1";
        case Letter::MinusOne: return "-1";
        case Letter::Star: return "*";
        case Letter::MinusStar: return "-*";
        case Letter::Sharp: return "#";
        case Letter::MinusSharp: return "-#";
    }
    return "?";
}

ExtWord parse_word(const std::string& s) {
    size_t i = 0;
    skip_ws(s, i);
    if (i >= s.size() || s[i] != 'I')
        throw std::invalid_argument("word must start with I: '" + s + "'");
    ++i;
    skip_ws(s, i);
    if (i >= s.size() || s[i] != '(') throw std::invalid_argument("expected (");
    ++i;
    int a = parse_int(s, i);
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ';') throw std::invalid_argument("expected ;");
    ++i;
    ExtWord w;
    if (a != 0 && a != 1 && a != -1) throw std::invalid_argument("bad endpoint");
    w.start = (int8_t)a;
    for (;;) {
        skip_ws(s, i);
        if (i >= s.size()) throw std::invalid_argument("unterminated word");
        if (s[i] == ';') { ++i; break; }
        int sign = 1;
        if (s[i] == '-') { sign = -1; ++i; }
        if (i >= s.size()) throw std::invalid_argument("dangling sign");
        char c = s[i];
        if (c == '*') { w.letters.push_back(sign > 0 ? Letter::Star : Letter::MinusStar); ++i; }
        else if (c == '#') { w.letters.push_back(sign > 0 ? Letter::Sharp : Letter::MinusSharp); ++i; }
        else if (c == '0') {
            if (sign < 0) throw std::invalid_argument("-0 is not a letter");
            w.letters.push_back(Letter::Zero); ++i;
        }
        else if (c == '1') { w.letters.push_back(sign > 0 ? Letter::One : Letter::MinusOne); ++i; }
        else throw std::invalid_argument(std::string("bad letter '") + c + "'");
    }
    int b = parse_int(s, i);
    if (b != 0 && b != 1 && b != -1) throw std::invalid_argument("bad endpoint");
    w.end = (int8_t)b;
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ')') throw std::invalid_argument("expected )");
    return w;
}

std::string print_index(const EsIndex& x) {
    std::string s = "z";
    switch (x.deco) {
        case Deco::Plain: break;
        case Deco::Star: s += "s"; break;
        case Deco::StarStar: s += "ss"; break;
        case Deco::Sharp: s += "h"; break;
        case Deco::SharpSharp: s += "hh"; break;
    }
    if (x.k > 0) s += "_" + std::to_string(x.k);
    s += "(";
    for (size_t i = 0; i < x.entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x.entries[i]);
    }
    s += ")";
    return s;
}

std::string print_word(const ExtWord& w) {
    std::string s = "I(" + std::to_string((int)w.start) + ";";
    for (size_t i = 0; i < w.letters.size(); ++i) {
        s += i ? " " : " ";
        s += print_letter(w.letters[i]);
    }
    s += "; " + std::to_string((int)w.end) + ")";
    return s;
}

} // namespace es
