#pragma once

#include <vector>

#include <gmpxx.h>

#include "vkn/errors.hpp"
#include "vkn/laurent.hpp"

namespace vkn::la {

using Int = mpz_class;

/// Dense matrix over an exact ring. Dimensions may both be zero.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw Error("DimensionMismatch", "negative dimension");
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 && cols_ == 0; }

    T& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using PolyMat1 = Mat<poly::LaurentPoly1>;
using PolyMat2 = Mat<poly::LaurentPoly2>;

IntMat identity(int n);
IntMat operator+(const IntMat& a, const IntMat& b);
IntMat operator-(const IntMat& a, const IntMat& b);
IntMat operator*(const IntMat& a, const IntMat& b);
IntMat negated(const IntMat& a);
std::vector<Int> operator*(const IntMat& a, const std::vector<Int>& v);
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

/// Exact integer determinant (Bareiss; cofactor for small matrices).
Int det_int(const IntMat& m);

/// Inverse of a matrix with determinant +-1; throws NotUnimodular otherwise.
IntMat inverse_unimodular(const IntMat& m);

// Ring hooks for the generic determinant.
inline bool ring_is_zero(const Int& x) { return x == 0; }
inline Int ring_one(const Int&) { return Int(1); }
inline Int ring_exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw Error("InexactDivision", "integer division not exact");
    return q;
}
inline bool ring_is_zero(const poly::LaurentPoly1& x) { return x.is_zero(); }
inline poly::LaurentPoly1 ring_one(const poly::LaurentPoly1&) { return poly::LaurentPoly1(1); }
inline poly::LaurentPoly1 ring_exact_div(const poly::LaurentPoly1& a, const poly::LaurentPoly1& b) {
    return poly::exact_div(a, b);
}
inline bool ring_is_zero(const poly::LaurentPoly2& x) { return x.is_zero(); }
inline poly::LaurentPoly2 ring_one(const poly::LaurentPoly2&) { return poly::LaurentPoly2(1); }
inline poly::LaurentPoly2 ring_exact_div(const poly::LaurentPoly2& a, const poly::LaurentPoly2& b) {
    return poly::exact_div(a, b);
}

/// Cofactor (Laplace) expansion along the first row. Exponential; used as
/// the small-dimension path and as an independent oracle in tests.
template <class T>
T det_cofactor(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw Error("NonSquare", "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return ring_one(T{});
    if (n == 1) return m.at(0, 0);
    T acc{};
    for (int j = 0; j < n; ++j) {
        if (ring_is_zero(m.at(0, j))) continue;
        Mat<T> minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, jj++) = m.at(i, k);
            }
        }
        T term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

/// Fraction-free Bareiss elimination with exact division.
template <class T>
T det_bareiss(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw Error("NonSquare", "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return ring_one(T{});
    Mat<T> a = m;
    T prev = ring_one(T{});
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(a.at(k, k))) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!ring_is_zero(a.at(i, k))) { p = i; break; }
            if (p < 0) return T{};  // singular
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                T num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = ring_exact_div(num, prev);
            }
        prev = a.at(k, k);
    }
    T d = a.at(n - 1, n - 1);
    if (sign < 0) {
        T zero{};
        d = zero - d;
    }
    return d;
}

/// Exact determinant over the ring: Bareiss, with cofactor expansion for
/// dimension <= 4. det of the 0x0 matrix is 1.
template <class T>
T det_exact(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw Error("NonSquare", "determinant of non-square matrix");
    if (m.rows() <= 4) return det_cofactor(m);
    return det_bareiss(m);
}

} // namespace vkn::la
