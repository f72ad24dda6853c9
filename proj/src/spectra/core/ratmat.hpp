#pragma once

#include "spectra/core/rational.hpp"

#include <vector>

namespace spectra {

using RatVec = std::vector<Rational>;

/// Dense rational matrix, row-major. Sizes here are tiny (n <= 16 or so),
/// so plain Gaussian elimination over Q is exact and fast enough.
class RatMat {
  public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const RatMat& o) const = default;

    RatMat transposed() const;
    RatMat operator*(const RatMat& o) const;

    Rational determinant() const;
    /// Throws std::domain_error on a singular matrix.
    RatMat inverse() const;

    bool is_symmetric() const;
    /// Leading principal minors, sizes 1..n (square matrices only).
    std::vector<Rational> leading_minors() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// Unit lower-triangular L and positive diagonal D with A = L D L^T.
/// Requires A symmetric positive definite; throws otherwise, reporting the
/// index of the first non-positive pivot.
struct Ldl {
    RatMat lower;      // unit diagonal
    RatVec diagonal;   // all > 0
};
Ldl ldl_decompose(const RatMat& a);

}  // namespace spectra
