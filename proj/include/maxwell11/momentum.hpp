#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "maxwell11/representation.hpp"

namespace mx11 {

/// Raw four-momentum components in the imaginary-time convention:
/// k4 = i*k0, so k^2 = |k|^2 - k0^2.
struct FourMomentum {
  Rational k1, k2, k3, k0;

  std::array<ComplexRational, 4> components() const {
    return {ComplexRational(k1), ComplexRational(k2), ComplexRational(k3),
            ComplexRational(Rational(0), k0)};
  }
  Rational spatial_norm2() const { return k1 * k1 + k2 * k2 + k3 * k3; }
  Rational minkowski_norm2() const { return spatial_norm2() - k0 * k0; }
  std::string str() const;
};

enum class MomentumError { NotLightlike, ZeroFrequency };

class BadMomentum : public std::invalid_argument {
 public:
  BadMomentum(MomentumError kind, const std::string& what)
      : std::invalid_argument(what), kind(kind) {}
  MomentumError kind;
};

class BadKappa : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Four-momentum with |k|^2 = k0^2 exactly and k0 != 0. Negative k0 is a
/// valid (negative-frequency) choice.
class LightlikeMomentum {
 public:
  static LightlikeMomentum make(Rational k1, Rational k2, Rational k3, Rational k0);
  const FourMomentum& four() const { return k_; }
  const Rational& k0() const { return k_.k0; }
  std::string str() const { return k_.str(); }

 private:
  explicit LightlikeMomentum(FourMomentum k) : k_(std::move(k)) {}
  FourMomentum k_;
};

/// On-shell massive momentum: |k|^2 - k0^2 = -m^2 with m > 0.
class MassiveMomentum {
 public:
  static MassiveMomentum make(Rational k1, Rational k2, Rational k3, Rational k0, Rational m);
  const FourMomentum& four() const { return k_; }
  const Rational& mass() const { return m_; }

 private:
  MassiveMomentum(FourMomentum k, Rational m) : k_(std::move(k)), m_(std::move(m)) {}
  FourMomentum k_;
  Rational m_;
};

/// kslash = alpha_mu k_mu, entries Gaussian-rational.
RepMatrix k_slash(const RepresentationSet& rep, const FourMomentum& k);

/// D = i kslash + kappa P. Rejects kappa = 0 (the zero-eigenvalue projector
/// divides by kappa).
RepMatrix wave_operator(const RepresentationSet& rep, const LightlikeMomentum& k,
                        const Rational& kappa);

/// i kslash + m I. The kernel is nontrivial exactly on the mass shell.
RepMatrix massive_operator(const RepresentationSet& rep, const FourMomentum& k, const Rational& m);
inline RepMatrix massive_operator(const RepresentationSet& rep, const MassiveMomentum& k) {
  return massive_operator(rep, k.four(), k.mass());
}

/// gamma = ((D - kappa)/kappa)^2, the projector onto the kernel of D.
RepMatrix gamma_projector(const RepresentationSet& rep, const LightlikeMomentum& k,
                          const Rational& kappa);

/// Squared spin operator, contracted form (1/k0^2) J_{mu s} J_{s nu} k_mu k_nu.
RepMatrix spin_squared_contracted(const RepresentationSet& rep, const LightlikeMomentum& k);

/// Same operator through the Levi-Civita route,
/// ((1/2 k0) e_{mu nu a b} k_nu J_{a b})^2 with the real unit-normalized
/// symbol e_1234 = +1 (the -i normalization would flip the sign of the
/// square and break the agreement of the two routes).
RepMatrix spin_squared_eps_form(const RepresentationSet& rep, const LightlikeMomentum& k);

/// Computes both routes and compares entry-by-entry; throws std::logic_error
/// on any disagreement instead of silently preferring one.
RepMatrix spin_squared(const RepresentationSet& rep, const LightlikeMomentum& k);

/// Helicity operator sigma_k = -(i/k0) e_{abc} k_a beta1_b beta1_c.
RepMatrix helicity_operator(const RepresentationSet& rep, const LightlikeMomentum& k);

struct SpinProjectors {
  RepMatrix S2_0;  // 1 - sigma^2/2
  RepMatrix S2_1;  // sigma^2/2
};
SpinProjectors spin_projectors(const RepresentationSet& rep, const LightlikeMomentum& k);

struct HelicityProjectors {
  RepMatrix plus;   // 1/2 sigma_k (sigma_k + 1)
  RepMatrix minus;  // 1/2 sigma_k (sigma_k - 1)
  RepMatrix zero;   // 1 - sigma_k^2
};
/// Polynomial assembly from an arbitrary helicity matrix; lets tests probe
/// the orientation flip e_123 -> -e_123 (which negates sigma_k).
HelicityProjectors helicity_projectors_of(const RepMatrix& sigma_k);
HelicityProjectors helicity_projectors(const RepresentationSet& rep, const LightlikeMomentum& k);

struct StateProjectors {
  RepMatrix zero;   // (1 - sigma^2/2) gamma
  RepMatrix plus;   // 1/2 sigma_k (sigma_k + 1) gamma
  RepMatrix minus;  // 1/2 sigma_k (sigma_k - 1) gamma
};
StateProjectors state_projectors(const RepresentationSet& rep, const LightlikeMomentum& k,
                                 const Rational& kappa);

/// Every momentum-space operator for one (k, kappa), built once.
struct ProjectorSet {
  RepMatrix D;
  RepMatrix gamma;
  RepMatrix spin_sq;
  RepMatrix helicity;
  RepMatrix S2_0, S2_1;
  RepMatrix Shat_plus, Shat_minus, Shat_0;
  RepMatrix Pi_0, Pi_plus, Pi_minus;
  Rational kappa;
  FourMomentum k;
};
ProjectorSet build_projector_set(const RepresentationSet& rep, const LightlikeMomentum& k,
                                 const Rational& kappa);

/// Exact solution of D psi = 0 with prescribed vector part: psi0 and the
/// tensor components are eliminated through the component equations,
///   psi0 = -(i/kappa) k_mu psi_mu,
///   psi_[mu nu] = -(i/kappa)(k_nu psi_mu - k_mu psi_nu).
Vec11 solution_state(const LightlikeMomentum& k, const Rational& kappa,
                     const std::array<ComplexRational, 4>& psi_mu);

/// Four linearly independent solutions, one per unit vector part. Their
/// span equals the kernel of D.
std::array<Vec11, 4> solution_basis(const LightlikeMomentum& k, const Rational& kappa);

class NotRankOne : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Pure polarization state extracted from a rank-1 idempotent. psi is the
/// pivot column (first nonzero diagonal), psi_bar the matching row scaled so
/// that psi_bar * psi = 1; then psi * psi_bar reproduces the input exactly.
struct DyadSolution {
  std::string label;
  Vec11 psi;
  RowVec11 psi_bar;
  /// c with psi_bar = c * psi^+ eta when that proportionality holds exactly.
  std::optional<ComplexRational> eta_factor;
};

/// Rejects input with any nonzero 2x2 minor (rank != 1).
DyadSolution dyad_decompose(const RepMatrix& pi, const RepMatrix& eta);

}  // namespace mx11
