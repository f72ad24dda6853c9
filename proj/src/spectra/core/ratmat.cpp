#include "spectra/core/ratmat.hpp"

#include <stdexcept>
#include <string>

namespace spectra {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMat p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) p(i, j) += aik * o(k, j);
        }
    return p;
}

Rational RatMat::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    RatMat m = *this;
    const int n = rows_;
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            for (int j = c; j < n; ++j) std::swap(m(c, j), m(pivot, j));
            det = -det;
        }
        det *= m(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rational f = m(r, c) / m(c, c);
            for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const int n = rows_;
    RatMat m = *this;
    RatMat inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("singular matrix has no inverse");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(c, j), m(pivot, j));
                std::swap(inv(c, j), inv(pivot, j));
            }
        Rational p = m(c, c);
        for (int j = 0; j < n; ++j) {
            m(c, j) /= p;
            inv(c, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0) continue;
            Rational f = m(r, c);
            for (int j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

bool RatMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::vector<Rational> RatMat::leading_minors() const {
    if (rows_ != cols_) throw std::invalid_argument("leading minors of non-square matrix");
    std::vector<Rational> minors;
    minors.reserve(rows_);
    // Fraction-free forward elimination would also work; repeated determinants
    // are fine at these sizes.
    for (int k = 1; k <= rows_; ++k) {
        RatMat sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
        minors.push_back(sub.determinant());
    }
    return minors;
}

Ldl ldl_decompose(const RatMat& a) {
    if (!a.is_symmetric()) throw std::domain_error("LDL^T requires a symmetric matrix");
    const int n = a.rows();
    Ldl out;
    out.lower = RatMat::identity(n);
    out.diagonal.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        Rational d = a(i, i);
        for (int k = 0; k < i; ++k) d -= out.diagonal[k] * out.lower(i, k) * out.lower(i, k);
        if (d <= 0)
            throw std::domain_error("matrix not positive definite: pivot " + std::to_string(i + 1) +
                                    " is " + to_string(d));
        out.diagonal[i] = d;
        for (int j = i + 1; j < n; ++j) {
            Rational v = a(j, i);
            for (int k = 0; k < i; ++k) v -= out.diagonal[k] * out.lower(j, k) * out.lower(i, k);
            out.lower(j, i) = v / d;
        }
    }
    return out;
}

}  // namespace spectra
