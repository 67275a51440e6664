#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace quiverkit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical form is "p/q" in lowest terms, q > 0. parse accepts "p" as "p/1".
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& text) {
    auto bad = [&](const char* why) {
        return std::invalid_argument("invalid rational \"" + text + "\": " + why);
    };
    if (text.empty()) throw bad("empty");
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) throw bad("not of the form p or p/q");
    Int p(num), q(den);
    if (q == 0) throw bad("zero denominator");
    return Rational(p, q);
}

}  // namespace quiverkit
