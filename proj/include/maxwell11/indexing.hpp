#pragma once

#include <array>
#include <cassert>
#include <optional>
#include <string>

#include "maxwell11/scalar.hpp"

namespace mx11 {

/// Label for one of the 11 basis slots of the representation space:
/// the scalar S, a vector component V(mu) with mu in 1..4, or an ordered
/// antisymmetric pair T(mu,nu) with 1 <= mu < nu <= 4.
///
/// Canonical linear order, frozen for bit-exact reports:
///   [S, V1, V2, V3, V4, T12, T13, T14, T23, T24, T34]
class ComponentIndex {
 public:
  enum class Kind { Scalar, Vector, Tensor };

  static constexpr int kDim = 11;

  static ComponentIndex scalar() { return ComponentIndex(0); }

  static ComponentIndex vector(int mu) {
    assert(mu >= 1 && mu <= 4);
    return ComponentIndex(mu);
  }

  static ComponentIndex tensor(int mu, int nu) {
    assert(mu >= 1 && nu <= 4 && mu < nu);
    static constexpr int off[5][5] = {{0, 0, 0, 0, 0},
                                      {0, 0, 5, 6, 7},
                                      {0, 0, 0, 8, 9},
                                      {0, 0, 0, 0, 10},
                                      {0, 0, 0, 0, 0}};
    return ComponentIndex(off[mu][nu]);
  }

  static ComponentIndex from_code(int code) {
    assert(code >= 0 && code < kDim);
    return ComponentIndex(code);
  }

  static const std::array<ComponentIndex, kDim>& all();

  int code() const { return code_; }

  Kind kind() const {
    if (code_ == 0) return Kind::Scalar;
    return code_ <= 4 ? Kind::Vector : Kind::Tensor;
  }

  /// Vector index, or the first (smaller) index of a tensor slot.
  int mu() const {
    assert(code_ >= 1);
    if (code_ <= 4) return code_;
    static constexpr int first[6] = {1, 1, 1, 2, 2, 3};
    return first[code_ - 5];
  }

  /// Second (larger) index of a tensor slot.
  int nu() const {
    assert(code_ >= 5);
    static constexpr int second[6] = {2, 3, 4, 3, 4, 4};
    return second[code_ - 5];
  }

  std::string label() const;

  friend bool operator==(ComponentIndex a, ComponentIndex b) { return a.code_ == b.code_; }
  friend bool operator!=(ComponentIndex a, ComponentIndex b) { return a.code_ != b.code_; }

 private:
  explicit ComponentIndex(int code) : code_(code) {}
  int code_;
};

/// Resolves an arbitrary antisymmetric double index [mu nu] onto ordered
/// storage: psi_[nu mu] = -psi_[mu nu] and psi_[mu mu] = 0.
struct PairSlot {
  std::optional<ComponentIndex> slot;
  int sign;  // +1, -1, or 0 when mu == nu
};

inline PairSlot pair_slot(int mu, int nu) {
  assert(mu >= 1 && mu <= 4 && nu >= 1 && nu <= 4);
  if (mu == nu) return {std::nullopt, 0};
  if (mu < nu) return {ComponentIndex::tensor(mu, nu), +1};
  return {ComponentIndex::tensor(nu, mu), -1};
}

/// Sign of the permutation (a,b,c,d) of (1,2,3,4); 0 on repeated indices.
int perm_sign4(int a, int b, int c, int d);

/// Spatial Levi-Civita symbol with e_123 = +1.
int levi_civita3(int a, int b, int c);

/// Four-dimensional Levi-Civita tensor in the imaginary-time convention,
/// normalized to eps_1234 = -i.
inline ComplexRational levi_civita4(int a, int b, int c, int d) {
  int s = perm_sign4(a, b, c, d);
  return ComplexRational(Rational(0), Rational(-s));
}

}  // namespace mx11
