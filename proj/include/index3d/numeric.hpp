#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace index3d {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer quad vector, ordered (a_j, b_j, c_j) per tetrahedron.
using QuadVector = std::vector<long long>;
using RatVector = std::vector<Rational>;

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Parses an integer or a fraction `p/q`.
inline Rational parse_rational(const std::string& s) {
    static const std::regex form(R"([+-]?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(s, form)) throw std::invalid_argument("not a rational number: '" + s + "'");
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace index3d
