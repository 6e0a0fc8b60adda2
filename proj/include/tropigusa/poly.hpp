#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tropigusa/rational.hpp"

namespace tropigusa {

// Dense polynomial in Z[t], coefficients lowest degree first, no trailing
// zero coefficient.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Integer c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { trim(); }

    static IntPoly t_power(std::size_t k) {
        std::vector<Integer> c(k + 1, Integer(0));
        c[k] = 1;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    // t-order: index of the lowest nonzero coefficient
    std::optional<long> ord() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<long>(i);
        return std::nullopt;
    }

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
    const Integer& leading() const { return coeffs_.back(); }

    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) g = gcd(g, c);
        return g;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    IntPoly operator-() const {
        std::vector<Integer> r(coeffs_);
        for (auto& c : r) c = -c;
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const Integer& c) {
        std::vector<Integer> r(a.coeffs_);
        for (auto& x : r) x *= c;
        return IntPoly(std::move(r));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    IntPoly divided_by_t_power(long k) const {
        std::vector<Integer> r(coeffs_.begin() + k, coeffs_.end());
        return IntPoly(std::move(r));
    }
    IntPoly divided_by_content(const Integer& g) const {
        std::vector<Integer> r(coeffs_);
        for (auto& x : r) x /= g;
        return IntPoly(std::move(r));
    }

    // Exact division; throws if the quotient is not in Z[t]. Used by the
    // fraction-free determinant, where exactness is guaranteed.
    friend IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
        if (b.is_zero()) throw std::logic_error("IntPoly: division by zero");
        if (a.is_zero()) return {};
        std::vector<Integer> rem(a.coeffs_);
        std::vector<Integer> q(a.coeffs_.size() - b.coeffs_.size() + 1, Integer(0));
        long db = b.degree();
        for (long d = a.degree(); d >= db;) {
            const Integer& lead = rem[static_cast<std::size_t>(d)];
            if (lead != 0) {
                if (lead % b.leading() != 0) throw std::logic_error("IntPoly: inexact division");
                Integer c = lead / b.leading();
                q[static_cast<std::size_t>(d - db)] = c;
                for (long i = 0; i <= db; ++i)
                    rem[static_cast<std::size_t>(d - db + i)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
            }
            --d;
        }
        for (const auto& c : rem)
            if (c != 0) throw std::logic_error("IntPoly: inexact division");
        return IntPoly(std::move(q));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Integer> coeffs_;
};

// Element of Q(t) as a ratio of Z[t] polynomials. Normalization cancels
// common powers of t and integer content and fixes the sign of the
// denominator's lowest coefficient; full polynomial gcd reduction is not
// performed (only the t-order matters for valuations, and equality tests
// cross-multiply).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Integer(1)) {}
    RationalFunction(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        normalize();
    }
    explicit RationalFunction(const Rational& q)
        : num_(IntPoly(numerator(q))), den_(IntPoly(denominator(q))) {}
    explicit RationalFunction(long n) : num_(IntPoly(Integer(n))), den_(IntPoly(Integer(1))) {}

    static RationalFunction t() { return RationalFunction(IntPoly::t_power(1), IntPoly(Integer(1))); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // ord_t(num) - ord_t(den); nullopt encodes +inf (the zero element)
    std::optional<long> val() const {
        auto on = num_.ord();
        if (!on) return std::nullopt;
        return *on - *den_.ord();
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = IntPoly(Integer(1));
            return;
        }
        long k = std::min(*num_.ord(), *den_.ord());
        if (k > 0) {
            num_ = num_.divided_by_t_power(k);
            den_ = den_.divided_by_t_power(k);
        }
        Integer g = gcd(num_.content(), den_.content());
        if (den_.coeff(static_cast<std::size_t>(*den_.ord())) < 0) g = -g;
        if (g != 1) {
            num_ = num_.divided_by_content(g);
            den_ = den_.divided_by_content(g);
        }
    }
    IntPoly num_, den_;
};

} // namespace tropigusa
