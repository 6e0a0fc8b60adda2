#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "tropigusa/errors.hpp"

namespace tropigusa {

// All arithmetic in the library is exact. Integer/Rational are the only
// numeric types; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// std::min deduction trips over boost's expression templates
inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// gcd on the additive lattice of rationals: the largest q with both arguments
// in q*Z. gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d).
inline Rational rational_gcd(const Rational& x, const Rational& y) {
    if (x == 0) return y < 0 ? Rational(-y) : y;
    if (y == 0) return x < 0 ? Rational(-x) : x;
    Integer b = denominator(x), d = denominator(y);
    Integer g = gcd(numerator(x) * d, numerator(y) * b);
    if (g < 0) g = -g;
    return Rational(g, b * d);
}

inline Integer pow(Integer base, unsigned exp) {
    Integer r = 1;
    while (exp--) r *= base;
    return r;
}

// Exponent of prime p in a nonzero integer.
inline long p_order(Integer n, const Integer& p) {
    if (n == 0) throw std::logic_error("p_order of zero");
    if (n < 0) n = -n;
    long k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "a" or "a/b" with optional sign; exact decimal-free strings only.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() { return parse_error("not a rational literal: '" + s + "'"); };
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const parse_error*>(&e)) throw;
        throw bad();
    }
}

} // namespace tropigusa
