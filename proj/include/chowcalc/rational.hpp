#ifndef CHOWCALC_RATIONAL_HPP
#define CHOWCALC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chowcalc {

// All arithmetic in the library is exact: arbitrary-precision rationals,
// always in lowest terms with positive denominator. No floating point
// anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    return Rational(std::move(num)) / Rational(std::move(den));
}

/// Strict "p/q" / "p" parser; rejects anything cpp_rational would merely
/// tolerate (spaces, empty numerator, "p/0").
inline Rational parse_rational(std::string_view text) {
    const std::string t(text);
    std::size_t i = 0;
    auto fail = [&] { throw Error("malformed rational '" + t + "'"); };
    if (i < t.size() && (t[i] == '+' || t[i] == '-'))
        ++i;
    std::size_t digits_start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
        ++i;
    if (i == digits_start)
        fail();
    Integer num(t.substr(0, i));
    if (i == t.size())
        return Rational(num);
    if (t[i] != '/')
        fail();
    ++i;
    std::size_t den_start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
        ++i;
    if (i == den_start || i != t.size())
        fail();
    Integer den(t.substr(den_start));
    return make_rational(std::move(num), std::move(den));
}

/// Canonical rendering: lowest terms, "p/q" with q > 0, integers without "/1".
inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace chowcalc

#endif
