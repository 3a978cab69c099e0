#include "vkn/matrix.hpp"

namespace vkn::la {

IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("DimensionMismatch", "matrix addition shape mismatch");
    IntMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("DimensionMismatch", "matrix subtraction shape mismatch");
    IntMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw Error("DimensionMismatch", "matrix product shape mismatch");
    IntMat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

IntMat negated(const IntMat& a) {
    IntMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = -a.at(i, j);
    return r;
}

std::vector<Int> operator*(const IntMat& a, const std::vector<Int>& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw Error("DimensionMismatch", "matrix-vector shape mismatch");
    std::vector<Int> r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "dot product length mismatch");
    Int r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Int det_int(const IntMat& m) { return det_exact(m); }

IntMat inverse_unimodular(const IntMat& m) {
    if (m.rows() != m.cols()) throw Error("NonSquare", "inverse of non-square matrix");
    Int d = det_int(m);
    if (d != 1 && d != -1)
        throw Error("NotUnimodular", "matrix determinant is not +-1");
    const int n = m.rows();
    // Gauss-Jordan over the rationals; the result is integral because det = +-1.
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = mpq_class(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) { p = i; break; }
        if (p < 0) throw Error("NotUnimodular", "matrix is singular");
        std::swap(a[k], a[p]);
        mpq_class pivot = a[k][k];
        for (int j = 0; j < 2 * n; ++j) a[k][j] /= pivot;
        for (int i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            mpq_class f = a[i][k];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    IntMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class& q = a[i][n + j];
            q.canonicalize();
            if (q.get_den() != 1)
                throw Error("NotUnimodular", "inverse is not integral");
            inv.at(i, j) = q.get_num();
        }
    return inv;
}

} // namespace vkn::la
