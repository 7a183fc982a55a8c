#pragma once

#include <array>

#include "maxwell11/matrix.hpp"

namespace mx11 {

/// alpha_nu = eps(mu,[mu nu]) + eps([mu nu],mu) + eps(nu,S) + eps(S,nu),
/// summed over mu with antisymmetric sign resolution on [mu nu].
/// Exactly 8 nonzero entries, each +-1; symmetric.
RepMatrix build_alpha(int nu);

/// The two summands of alpha_nu, zero-padded into the full space:
/// beta1 lives on the vector/tensor block, beta0 on the scalar/vector block.
RepMatrix build_beta1(int nu);
RepMatrix build_beta0(int nu);

/// P = eps(S,S) + 1/2 eps([mu nu],[mu nu]): diagonal 1 on the scalar and all
/// six tensor slots. Pbar = eps(mu,mu): diagonal 1 on the vector slots.
RepMatrix build_P();
RepMatrix build_Pbar();

/// Identity of the vector+tensor subspace, zero-padded.
RepMatrix build_I10();

/// Hermitianizing matrix eta = -eps(S,S) + 2 beta1_4^2 - I10.
/// Diagonal (-1; +1,+1,+1,-1; -1,-1,+1,-1,+1,+1) in canonical order.
RepMatrix build_eta();

/// Lorentz generator J_{mu nu} = beta1_mu beta1_nu - beta1_nu beta1_mu.
/// Antisymmetric in (mu,nu); scalar row and column identically zero.
RepMatrix build_J(int mu, int nu);

/// Every named matrix of the representation, built once and shared
/// read-only. All members immutable after construction.
struct RepresentationSet {
  std::array<RepMatrix, 4> alpha;  // alpha[mu-1]
  std::array<RepMatrix, 4> beta1;
  std::array<RepMatrix, 4> beta0;
  RepMatrix P;
  RepMatrix Pbar;
  RepMatrix eta;
  RepMatrix I10;
  RepMatrix I11;
  std::array<std::array<RepMatrix, 4>, 4> J;  // J[mu-1][nu-1]

  const RepMatrix& alpha_at(int mu) const { return alpha[mu - 1]; }
  const RepMatrix& beta1_at(int mu) const { return beta1[mu - 1]; }
  const RepMatrix& beta0_at(int mu) const { return beta0[mu - 1]; }
  const RepMatrix& J_at(int mu, int nu) const { return J[mu - 1][nu - 1]; }
};

RepresentationSet build_representation();

/// Contraction sum_mu c_mu alpha_mu.
RepMatrix contract_alpha(const RepresentationSet& rep, const std::array<ComplexRational, 4>& c);

}  // namespace mx11
