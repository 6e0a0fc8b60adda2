#pragma once

#include <boost/multiprecision/miller_rabin.hpp>
#include <cctype>
#include <concepts>
#include <string>

#include "tropigusa/errors.hpp"
#include "tropigusa/extrat.hpp"
#include "tropigusa/poly.hpp"
#include "tropigusa/rational.hpp"

namespace tropigusa {

// The two discretely valued base fields everything runs over: (Q, v_p) and
// (Q(t), v_t). Both are exact; scalars are Rational resp. RationalFunction.
enum class FieldKind { padic, tadic };

struct ValuedField {
    FieldKind kind = FieldKind::padic;
    Integer p = 2; // uniformizer prime, p-adic only

    static ValuedField padic(Integer prime) {
        if (prime < 2 || !boost::multiprecision::miller_rabin_test(prime, 25))
            throw parse_error("p must be prime, got " + prime.str());
        return ValuedField{FieldKind::padic, std::move(prime)};
    }
    static ValuedField tadic() { return ValuedField{FieldKind::tadic, 0}; }

    // p for p-adic; 0 for t-adic (residue field Q has characteristic 0)
    Integer residue_char() const { return kind == FieldKind::padic ? p : Integer(0); }
};

inline ExtRat padic_val(const Rational& x, const Integer& p) {
    if (x == 0) return ExtRat::infinity();
    long v = 0;
    Integer n = numerator(x);
    if (n % p == 0) v = p_order(n, p);
    Integer d = denominator(x);
    if (d % p == 0) v -= p_order(d, p);
    return ExtRat(Rational(v));
}

inline ExtRat tadic_val(const RationalFunction& x) {
    auto v = x.val();
    if (!v) return ExtRat::infinity();
    return ExtRat(Rational(*v));
}

struct PadicValuation {
    Integer p;
    ExtRat operator()(const Rational& x) const { return padic_val(x, p); }
};
struct TadicValuation {
    ExtRat operator()(const RationalFunction& x) const { return tadic_val(x); }
};

template <class K>
concept FieldScalar = requires(K a, K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
};

template <FieldScalar K>
K scalar_constant(const Rational& q);
template <>
inline Rational scalar_constant<Rational>(const Rational& q) { return q; }
template <>
inline RationalFunction scalar_constant<RationalFunction>(const Rational& q) {
    return RationalFunction(q);
}

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const RationalFunction& x) { return x.is_zero(); }

// --- scalar literal grammar ------------------------------------------------
//
//   scalar  := poly | '(' poly ')' '/' '(' poly ')'
//   poly    := [sign] term (('+'|'-') term)*
//   term    := coeff ['*' tpow] | tpow
//   tpow    := 't' ['^' nat]
//   coeff   := int | int '/' int
//
// Integers and fractions only; no decimals. The p-adic parser rejects 't'.

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    RationalFunction parse() {
        skip_ws();
        RationalFunction r = parse_ratio_or_poly();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return r;
    }

private:
    RationalFunction parse_ratio_or_poly() {
        if (peek() == '(') {
            std::size_t save = pos_;
            ++pos_;
            RationalFunction num = parse_poly();
            skip_ws();
            expect(')');
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                expect('(');
                RationalFunction den = parse_poly();
                skip_ws();
                expect(')');
                if (den.is_zero()) fail("zero denominator");
                return num / den;
            }
            // a parenthesized polynomial with no ratio part
            pos_ = save;
            ++pos_;
            RationalFunction r = parse_poly();
            skip_ws();
            expect(')');
            return r;
        }
        return parse_poly();
    }

    RationalFunction parse_poly() {
        RationalFunction acc(0L);
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                break;
            }
            skip_ws();
            RationalFunction term = parse_term();
            acc = sign > 0 ? acc + term : acc - term;
            first = false;
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
        }
        if (first) fail("expected a term");
        return acc;
    }

    RationalFunction parse_term() {
        if (peek() == 't') return parse_tpow();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number or t");
        Rational coeff = parse_number();
        skip_ws();
        if (peek() == '*' || peek() == 't') {
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
            return RationalFunction(coeff) * parse_tpow();
        }
        return RationalFunction(coeff);
    }

    RationalFunction parse_tpow() {
        expect('t');
        std::size_t k = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            k = static_cast<std::size_t>(parse_uint());
            if (k > 4096) fail("t exponent too large");
        }
        return RationalFunction(IntPoly::t_power(k), IntPoly(Integer(1)));
    }

    Rational parse_number() {
        Integer n = parse_uint();
        // '/' binds as a fraction only when followed by a digit, so that the
        // '(poly)/(poly)' form stays unambiguous
        if (peek() == '/' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            Integer d = parse_uint();
            if (d == 0) fail("zero denominator");
            return Rational(n, d);
        }
        return Rational(n);
    }

    Integer parse_uint() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("scalar literal '" + s_ + "': " + why + " at offset " +
                          std::to_string(pos_));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

inline std::string poly_str(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Integer& c = p.coeffs()[k];
        if (c == 0) continue;
        Integer a = c < 0 ? Integer(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace detail

inline RationalFunction parse_tadic_scalar(const std::string& s) {
    return detail::ScalarParser(s).parse();
}

inline Rational parse_padic_scalar(const std::string& s) {
    if (s.find('t') != std::string::npos)
        throw parse_error("scalar literal '" + s + "': 't' is not valid over a p-adic field");
    RationalFunction f = detail::ScalarParser(s).parse();
    return Rational(f.num().coeff(0), f.den().coeff(0));
}

inline std::string scalar_str(const Rational& x) { return to_string(x); }

inline std::string scalar_str(const RationalFunction& x) {
    std::string num = detail::poly_str(x.num());
    if (x.den() == IntPoly(Integer(1))) return num;
    return "(" + num + ")/(" + detail::poly_str(x.den()) + ")";
}

} // namespace tropigusa
