#pragma once

#include <optional>
#include <vector>

#include "maxwell11/matrix.hpp"

namespace mx11::oracle {

// Brute-force exact linear algebra used to cross-check the constructive
// formulas. Inputs are copied into flat local storage and reduced by
// fraction-free Gaussian elimination; no formula code is shared with the
// representation or momentum modules.

struct NullspaceBasis {
  std::vector<Vec11> vectors;  // linearly independent, each annihilated by the input
  int dimension() const { return static_cast<int>(vectors.size()); }
};

/// Exact rank of an 11 x n column collection.
int rank(const std::vector<Vec11>& columns);
int rank(const RepMatrix& m);

/// Basis of {v : Mv = 0}; dimension + rank = 11 (asserted internally).
NullspaceBasis null_space(const RepMatrix& m);

/// Least-degree monic polynomial p with p(M) = 0, coefficients ascending
/// (constant term first, leading 1 last). Empty when no dependency exists
/// within max_degree.
std::vector<ComplexRational> minimal_polynomial(const RepMatrix& m, int max_degree);

struct RankOneReport {
  bool pass = false;
  std::string witness;  // nonzero 2x2 minor, or "zero matrix"
};

/// Pass iff M is nonzero and every 2x2 minor vanishes exactly.
RankOneReport rank_one_check(const RepMatrix& m);

/// True when the two column collections span the same subspace.
bool same_span(const std::vector<Vec11>& a, const std::vector<Vec11>& b);

/// Nonzero columns of a matrix, as vectors.
std::vector<Vec11> nonzero_columns(const RepMatrix& m);

}  // namespace mx11::oracle
