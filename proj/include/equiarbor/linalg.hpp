#pragma once

// Exact dense linear algebra over Eigen matrices whose scalar is an exact ring
// (BigInt) or field (Rational). Nothing here rounds.

#include <Eigen/Dense>

#include <string>
#include <utility>

#include "equiarbor/errors.hpp"
#include "equiarbor/rational.hpp"

namespace equiarbor {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntegerMatrix = Matrix<BigInt>;

/// Soft limit on matrix order; the library is meant for desk-scale problems.
inline constexpr Eigen::Index kMatrixSoftLimit = 512;

namespace detail {

inline std::string shape(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant. Every division is exact, so the same
/// code serves integer matrices and rational ones. The pivot is the first row
/// with a nonzero entry in the current column. A 0x0 matrix has determinant 1.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw DimensionError("determinant of non-square " + detail::shape(m.rows(), m.cols()) +
                         " matrix");
  }
  Matrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = Scalar(0);
    }
    previous = a(k, k);
  }
  Scalar det = n == 0 ? Scalar(1) : a(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Solves a·X = B exactly by Gauss-Jordan elimination over the rationals.
/// B may have any number of columns. The result is checked by substitution.
template <class DerivedA, class DerivedB>
RationalMatrix solve_all(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols()) {
    throw DimensionError("solve with non-square " + detail::shape(a.rows(), a.cols()) +
                         " coefficient matrix");
  }
  if (b.rows() != a.rows()) {
    throw DimensionError("right-hand side has " + std::to_string(b.rows()) + " rows, expected " +
                         std::to_string(a.rows()));
  }
  const Eigen::Index n = a.rows();
  RationalMatrix lhs = a.template cast<Rational>();
  RationalMatrix rhs = b.template cast<Rational>();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && lhs(pivot, k) == 0) ++pivot;
    if (pivot == n) {
      throw SingularSystemError("singular system: no pivot in column " + std::to_string(k));
    }
    if (pivot != k) {
      lhs.row(k).swap(lhs.row(pivot));
      rhs.row(k).swap(rhs.row(pivot));
    }
    const Rational inv = Rational(1) / lhs(k, k);
    lhs.row(k) *= inv;
    rhs.row(k) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || lhs(i, k) == 0) continue;
      const Rational factor = lhs(i, k);
      lhs.row(i) -= factor * lhs.row(k);
      rhs.row(i) -= factor * rhs.row(k);
    }
  }
  if (RationalMatrix(a.template cast<Rational>() * rhs) != RationalMatrix(b.template cast<Rational>())) {
    throw VerificationError("exact solve failed back-substitution check");
  }
  return rhs;
}

/// Solves a·x = b for a single right-hand side.
template <class DerivedA>
RationalVector solve(const Eigen::MatrixBase<DerivedA>& a, const RationalVector& b) {
  return solve_all(a, b).col(0);
}

/// Exact inverse; throws SingularSystemError.
template <class Derived>
RationalMatrix inverse(const Eigen::MatrixBase<Derived>& a) {
  return solve_all(a, RationalMatrix::Identity(a.rows(), a.rows()));
}

}  // namespace equiarbor
