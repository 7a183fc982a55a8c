#pragma once

#include <span>
#include <vector>

#include "maxwell11/momentum.hpp"

namespace mx11 {

/// Frozen verification set: 25 exact lightlike momenta built from signed
/// permutations and rational rescalings of Pythagorean triples and
/// quadruples. Order is fixed for reproducible reports.
const std::vector<LightlikeMomentum>& builtin_momenta();

/// Frozen kappa sweep {1, 2, 1/3}.
const std::vector<Rational>& builtin_kappas();

struct MomentumCase {
  LightlikeMomentum k;
  Rational kappa;
  std::string str() const { return "k=" + k.str() + " kappa=" + to_string(kappa); }
};

/// Full cross product of the builtin momenta and kappas (75 cases), or of
/// the first `momentum_count` momenta when given.
std::vector<MomentumCase> builtin_cases(int momentum_count = -1);

}  // namespace mx11
