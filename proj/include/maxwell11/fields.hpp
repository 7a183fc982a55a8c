#pragma once

#include <array>

#include "maxwell11/identities.hpp"
#include "maxwell11/matrix.hpp"

namespace mx11 {

class LightlikeMomentum;

/// Named view of an 11-component state: scalar psi0, vector psi_mu, and the
/// six independent antisymmetric tensor components psi_[mu nu] with mu < nu.
/// Bijective with the packed state vector.
struct FieldComponents {
  ComplexRational psi0;
  std::array<ComplexRational, 4> psi;  // psi[mu-1]
  std::array<ComplexRational, 6> F;    // canonical tensor-slot order

  /// Signed access: F_at(nu, mu) = -F_at(mu, nu), F_at(mu, mu) = 0.
  ComplexRational F_at(int mu, int nu) const;
  void set_F(int mu, int nu, const ComplexRational& value);
};

Vec11 pack(const FieldComponents& fc);
FieldComponents unpack(const Vec11& psi);

/// Electric and magnetic fields of a state, in the imaginary-time
/// convention: E_m = i psi_[m 4], H_m = 1/2 e_{mnk} psi_[n k] with
/// e_123 = +1. E stays complex-valued for real tensor slots; no conversion
/// to real-signature components is performed.
struct EMFields {
  std::array<ComplexRational, 3> E;
  std::array<ComplexRational, 3> H;
};

EMFields em_fields(const Vec11& psi);

/// The three component equations at momentum k (gradients replaced by i k),
/// evaluated slot-by-slot and reported in canonical order:
///   scalar slot: i k_mu psi_mu + kappa psi0
///   vector slots: i k_nu psi_[mu nu] + i k_mu psi0
///   tensor slots: i k_nu psi_mu - i k_mu psi_nu + kappa psi_[mu nu]
/// Positionally equal to the matrix residual (i kslash + kappa P) psi; this
/// is the convention-locking cross-check, computed without any matrix code.
Vec11 component_residual(const FieldComponents& fc, const LightlikeMomentum& k,
                         const Rational& kappa);

/// Passes iff psi0 = 0 and the source-free residuals vanish:
/// i k_nu psi_[mu nu] = 0 and i k_nu psi_mu - i k_mu psi_nu + kappa psi_[mu nu] = 0.
CheckResult maxwell_limit_check(const Vec11& psi, const LightlikeMomentum& k,
                                const Rational& kappa);

}  // namespace mx11
