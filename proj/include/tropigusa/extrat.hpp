#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropigusa/rational.hpp"

namespace tropigusa {

// Extended value set Q ∪ {+inf} used for valuations, plus a distinguished
// -inf flag that only arises from a negative coefficient hitting +inf in a
// linear form. Total order: -inf < every rational < +inf, so predicates of
// the form "w >= 0" are false on the flag without special casing.
class ExtRat {
public:
    ExtRat() : kind_(Kind::finite), value_(0) {}
    ExtRat(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}
    ExtRat(int v) : kind_(Kind::finite), value_(v) {}

    static ExtRat infinity() { return ExtRat(Kind::pos_inf); }
    static ExtRat neg_infinity_flag() { return ExtRat(Kind::neg_inf); }

    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_infinity() const { return kind_ == Kind::pos_inf; }
    bool is_neg_infinity_flag() const { return kind_ == Kind::neg_inf; }

    // Finite value; callers check is_finite() first.
    const Rational& rational() const {
        if (!is_finite()) throw std::logic_error("ExtRat: not finite");
        return value_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::finite || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
        auto rank = [](Kind k) { return k == Kind::neg_inf ? 0 : k == Kind::finite ? 1 : 2; };
        if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
        if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
        return a.value_ < b.value_   ? std::strong_ordering::less
               : a.value_ > b.value_ ? std::strong_ordering::greater
                                     : std::strong_ordering::equal;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::pos_inf: return "inf";
            case Kind::neg_inf: return "-inf";
            default: return to_string(value_);
        }
    }

private:
    enum class Kind { finite, pos_inf, neg_inf };
    explicit ExtRat(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    Rational value_;
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

// Linear form sum c_i * v_i over ExtRat. +inf absorbs under a positive
// coefficient; any negative coefficient on +inf forces the -inf flag
// (classification predicates then read the term as "condition violated").
// Zero coefficients drop their term, infinite or not.
inline ExtRat ext_combine(std::span<const std::pair<Rational, ExtRat>> terms) {
    bool pos_inf = false;
    Rational acc = 0;
    for (const auto& [c, v] : terms) {
        if (c == 0) continue;
        if (v.is_neg_infinity_flag()) return c > 0 ? ExtRat::neg_infinity_flag() : ExtRat::infinity();
        if (v.is_infinity()) {
            if (c < 0) return ExtRat::neg_infinity_flag();
            pos_inf = true;
        } else if (!pos_inf) {
            acc += c * v.rational();
        }
    }
    if (pos_inf) return ExtRat::infinity();
    return ExtRat(acc);
}

inline ExtRat ext_combine(std::initializer_list<std::pair<Rational, ExtRat>> terms) {
    return ext_combine(std::span<const std::pair<Rational, ExtRat>>(terms.begin(), terms.size()));
}

} // namespace tropigusa
