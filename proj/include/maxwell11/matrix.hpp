#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <utility>

#include "maxwell11/indexing.hpp"
#include "maxwell11/scalar.hpp"

namespace mx11 {

/// Dense 11x11 matrix over the exact complex-rational field, rows and
/// columns indexed by ComponentIndex in canonical order.
template <typename Scalar>
using Dense11 = Eigen::Matrix<Scalar, ComponentIndex::kDim, ComponentIndex::kDim>;

using RepMatrix = Dense11<ComplexRational>;
using Vec11 = Eigen::Matrix<ComplexRational, ComponentIndex::kDim, 1>;
using RowVec11 = Eigen::Matrix<ComplexRational, 1, ComponentIndex::kDim>;

/// Elementary matrix with a single unit entry at row A, column B:
/// (eps(A,B))_{CD} = delta_{AC} delta_{BD}.
inline RepMatrix eps_matrix(ComponentIndex a, ComponentIndex b) {
  RepMatrix m = RepMatrix::Zero();
  m(a.code(), b.code()) = ComplexRational(1);
  return m;
}

/// Evaluates sum_i c_i M^i exactly, with M^0 = identity.
template <typename Scalar>
Dense11<Scalar> mat_poly(const Dense11<Scalar>& m, std::span<const Scalar> coeffs) {
  Dense11<Scalar> acc = Dense11<Scalar>::Zero();
  if (coeffs.empty()) return acc;
  const Dense11<Scalar> id = Dense11<Scalar>::Identity();
  acc = coeffs.back() * id;
  for (std::size_t i = coeffs.size(); i-- > 1;) acc = acc * m + coeffs[i - 1] * id;
  return acc;
}

inline RepMatrix mat_poly(const RepMatrix& m, std::initializer_list<ComplexRational> coeffs) {
  return mat_poly<ComplexRational>(m, std::span<const ComplexRational>(coeffs.begin(), coeffs.size()));
}

template <typename Derived>
bool is_exactly_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m.derived().coeff(r, c).is_zero()) return false;
  return true;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return is_exactly_zero((a - b).eval());
}

/// First nonzero entry in row-major scan, if any. The standard witness for
/// a failed exact-zero identity.
template <typename Derived>
std::optional<std::pair<Eigen::Index, Eigen::Index>> first_nonzero(
    const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m.derived().coeff(r, c).is_zero()) return std::make_pair(r, c);
  return std::nullopt;
}

/// Conjugate transpose.
inline RepMatrix dagger(const RepMatrix& m) {
  RepMatrix r;
  for (int i = 0; i < ComponentIndex::kDim; ++i)
    for (int j = 0; j < ComponentIndex::kDim; ++j) r(i, j) = m(j, i).conjugate();
  return r;
}

inline RepMatrix commutator(const RepMatrix& a, const RepMatrix& b) { return a * b - b * a; }

inline ComplexRational trace(const RepMatrix& m) {
  ComplexRational t;
  for (int i = 0; i < ComponentIndex::kDim; ++i) t += m(i, i);
  return t;
}

/// Outer product psi * psi_bar.
inline RepMatrix outer(const Vec11& psi, const RowVec11& psi_bar) { return psi * psi_bar; }

}  // namespace mx11
