#pragma once

#include <string>
#include <vector>

#include "maxwell11/representation.hpp"

namespace mx11 {

/// Outcome of one named exact identity check. `residual` is "0" on pass,
/// otherwise the exact value of a witness entry.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;   // first failing index tuple / relation, empty on pass
  std::string residual;  // "0" or exact-rational string

  static CheckResult ok(std::string name) { return {std::move(name), true, "", "0"}; }
  static CheckResult failed(std::string name, std::string witness, std::string residual) {
    return {std::move(name), false, std::move(witness), std::move(residual)};
  }
};

/// Marks `out` failed with the first nonzero entry of `m` as witness, if any.
/// Returns true when `m` is exactly zero.
bool expect_zero(CheckResult& out, const RepMatrix& m, const std::string& relation);

enum class BetaFamily { beta1, beta0 };

/// P^2 = P, Pbar^2 = Pbar, P + Pbar = I, and the two absorption relations
/// alpha_mu P + P alpha_mu = alpha_mu (same with Pbar), all exact.
CheckResult check_projector_relations(const RepresentationSet& rep);

/// Trilinear relation b_m b_n b_a + b_a b_n b_m = d_mn b_a + d_an b_m over
/// all 64 triples for the chosen family.
CheckResult check_pdk_algebra(const RepresentationSet& rep, BetaFamily family);

/// Same trilinear relation fed the alpha family; expected to fail (the
/// alphas obey the six-term symmetrized algebra instead).
CheckResult check_pdk_algebra_alpha(const RepresentationSet& rep);

/// Six-term symmetrized cubic relation for the alpha family over all 64
/// triples, plus the contraction consequence kslash^3 = k^2 kslash at five
/// fixed momenta.
CheckResult check_alpha_algebra(const RepresentationSet& rep);

/// [J_rs, J_mn] = d_sm J_rn + d_rn J_sm - d_rm J_sn - d_sn J_rm over all
/// tuples, and [alpha_l, J_mn] = d_lm alpha_n - d_ln alpha_m.
CheckResult check_lorentz_commutators(const RepresentationSet& rep);

/// eta alpha_i = -alpha_i eta for spatial i, eta alpha_4 = alpha_4 eta,
/// eta^2 = I, and self-adjointness of eta*(i kslash) at sample momenta.
CheckResult check_eta_relations(const RepresentationSet& rep);

/// Structural facts of the constructed matrices: entry bounds, symmetry of
/// the alphas, the alpha = beta1 + beta0 split, P Pbar = 0,
/// Pbar alpha Pbar = 0, J antisymmetry and scalar invariance.
CheckResult check_representation_invariants(const RepresentationSet& rep);

/// Every momentum-independent suite in deterministic order.
std::vector<CheckResult> run_all(const RepresentationSet& rep);

inline bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace mx11
