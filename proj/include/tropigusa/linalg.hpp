#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropigusa/rational.hpp"

namespace tropigusa {

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }
    // row_i -= q * row_j
    void row_axpy(std::size_t i, std::size_t j, const T& q) {
        for (std::size_t k = 0; k < cols_; ++k) at(i, k) -= q * at(j, k);
    }
    void col_axpy(std::size_t i, std::size_t j, const T& q) {
        for (std::size_t k = 0; k < rows_; ++k) at(k, i) -= q * at(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

// Fraction-free determinant (Bareiss). Works over any integral domain whose
// exact division is supplied; every division performed is exact by the
// Sylvester identity.
template <class D, class DivExact>
D bareiss_determinant(Mat<D> m, DivExact div, const D& one) {
    const std::size_t n = m.rows();
    if (n == 0) return one;
    int sign = 1;
    D prev = one;
    auto is_zero = [&](const D& x) { return x == D(); };
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m.at(k, k))) {
            std::size_t piv = k;
            while (piv < n && is_zero(m.at(piv, k))) ++piv;
            if (piv == n) return D();
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                D num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = div(num, prev);
            }
            m.at(i, k) = D();
        }
        prev = m.at(k, k);
    }
    D det = m.at(n - 1, n - 1);
    return sign < 0 ? D() - det : det;
}

// Smith normal form over Z with transform tracking: U*A*V = S diagonal with
// s_1 | s_2 | ... Diagonal entries normalized nonnegative.
struct SmithForm {
    Mat<Integer> U, V;
    std::vector<Integer> diag; // full min(n,m) diagonal, zeros included
};

inline SmithForm smith_normal_form(Mat<Integer> a) {
    const std::size_t n = a.rows(), m = a.cols();
    SmithForm s;
    s.U = Mat<Integer>::identity(n);
    s.V = Mat<Integer>::identity(m);
    const std::size_t r = std::min(n, m);

    auto abs_int = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };

    for (std::size_t k = 0; k < r; ++k) {
        // pivot: smallest nonzero absolute value in the trailing block
        std::size_t pi = k, pj = k;
        Integer best = 0;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < m; ++j) {
                const Integer& x = a.at(i, j);
                if (x == 0) continue;
                Integer ax = abs_int(x);
                if (best == 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        if (pi != k) {
            a.swap_rows(k, pi);
            s.U.swap_rows(k, pi);
        }
        if (pj != k) {
            a.swap_cols(k, pj);
            s.V.swap_cols(k, pj);
        }

        for (bool redo = true; redo;) {
            redo = false;
            for (bool dirty = true; dirty;) {
                dirty = false;
                for (std::size_t i = k + 1; i < n; ++i) {
                    if (a.at(i, k) == 0) continue;
                    Integer q = a.at(i, k) / a.at(k, k); // truncated division
                    if (q != 0) {
                        a.row_axpy(i, k, q);
                        s.U.row_axpy(i, k, q);
                    }
                    if (a.at(i, k) != 0) { // remainder became the smaller pivot
                        a.swap_rows(k, i);
                        s.U.swap_rows(k, i);
                        dirty = true;
                    }
                }
                for (std::size_t j = k + 1; j < m; ++j) {
                    if (a.at(k, j) == 0) continue;
                    Integer q = a.at(k, j) / a.at(k, k);
                    if (q != 0) {
                        a.col_axpy(j, k, q);
                        s.V.col_axpy(j, k, q);
                    }
                    if (a.at(k, j) != 0) {
                        a.swap_cols(k, j);
                        s.V.swap_cols(k, j);
                        dirty = true;
                    }
                }
            }
            // divisibility chain: fold a non-divisible entry into the pivot
            // row and eliminate again
            for (std::size_t i = k + 1; i < n && !redo; ++i)
                for (std::size_t j = k + 1; j < m && !redo; ++j)
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        a.row_axpy(k, i, Integer(-1)); // row_k += row_i
                        s.U.row_axpy(k, i, Integer(-1));
                        redo = true;
                    }
        }
        if (a.at(k, k) < 0) {
            a.negate_row(k);
            s.U.negate_row(k);
        }
    }

    s.diag.resize(r);
    for (std::size_t k = 0; k < r; ++k) s.diag[k] = a.at(k, k) < 0 ? Integer(-a.at(k, k)) : a.at(k, k);
    return s;
}

// Prefactored integer system L*x = d for a fixed square nonsingular L.
// Membership tests and solves are matrix-vector work against the stored
// Smith transforms; building one per graph keeps exhaustive scans cheap.
class IntegerSystem {
public:
    explicit IntegerSystem(Mat<Integer> l) : n_(l.rows()), snf_(smith_normal_form(std::move(l))) {}

    std::size_t size() const { return n_; }

    bool singular() const {
        for (const auto& d : snf_.diag)
            if (d == 0) return true;
        return false;
    }

    Integer det_abs() const {
        Integer r = 1;
        for (const auto& d : snf_.diag) r *= d;
        return r;
    }

    // x with L*x = d over the integers, if it exists
    std::optional<std::vector<Integer>> solve(std::span<const Integer> d) const {
        std::vector<Integer> y(n_, Integer(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) y[i] += snf_.U.at(i, j) * d[j];
        for (std::size_t i = 0; i < n_; ++i) {
            if (snf_.diag[i] == 0) {
                if (y[i] != 0) return std::nullopt;
                continue;
            }
            if (y[i] % snf_.diag[i] != 0) return std::nullopt;
            y[i] /= snf_.diag[i];
        }
        std::vector<Integer> x(n_, Integer(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) x[i] += snf_.V.at(i, j) * y[j];
        return x;
    }

    bool contains(std::span<const Integer> d) const {
        for (std::size_t i = 0; i < n_; ++i) {
            Integer yi = 0;
            for (std::size_t j = 0; j < n_; ++j) yi += snf_.U.at(i, j) * d[j];
            if (snf_.diag[i] == 0) {
                if (yi != 0) return false;
            } else if (yi % snf_.diag[i] != 0) {
                return false;
            }
        }
        return true;
    }

    const std::vector<Integer>& diagonal() const { return snf_.diag; }

private:
    std::size_t n_;
    SmithForm snf_;
};

} // namespace tropigusa
