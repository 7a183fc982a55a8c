#include "maxwell11/representation.hpp"

namespace mx11 {

namespace {

void add_pair_entry(RepMatrix& m, int row_mu, int mu, int nu) {
  // eps(V(mu), [mu nu]) resolved through ordered storage; dropped when mu == nu.
  PairSlot ps = pair_slot(mu, nu);
  if (!ps.slot) return;
  ComplexRational s{Rational(ps.sign)};
  if (row_mu) {
    m(ComponentIndex::vector(mu).code(), ps.slot->code()) += s;
  } else {
    m(ps.slot->code(), ComponentIndex::vector(mu).code()) += s;
  }
}

}  // namespace

RepMatrix build_beta1(int nu) {
  RepMatrix m = RepMatrix::Zero();
  for (int mu = 1; mu <= 4; ++mu) {
    add_pair_entry(m, /*row_mu=*/1, mu, nu);
    add_pair_entry(m, /*row_mu=*/0, mu, nu);
  }
  return m;
}

RepMatrix build_beta0(int nu) {
  RepMatrix m = RepMatrix::Zero();
  const int s = ComponentIndex::scalar().code();
  const int v = ComponentIndex::vector(nu).code();
  m(v, s) += ComplexRational(1);
  m(s, v) += ComplexRational(1);
  return m;
}

RepMatrix build_alpha(int nu) { return build_beta1(nu) + build_beta0(nu); }

RepMatrix build_P() {
  RepMatrix m = RepMatrix::Zero();
  const int s = ComponentIndex::scalar().code();
  m(s, s) += ComplexRational(1);
  const ComplexRational half{Rational(1, 2)};
  // Free sum over both index orders; the 1/2 cancels the double counting.
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      PairSlot ps = pair_slot(mu, nu);
      if (!ps.slot) continue;
      m(ps.slot->code(), ps.slot->code()) += half;  // sign^2 = 1
    }
  return m;
}

RepMatrix build_Pbar() {
  RepMatrix m = RepMatrix::Zero();
  for (int mu = 1; mu <= 4; ++mu) {
    const int v = ComponentIndex::vector(mu).code();
    m(v, v) += ComplexRational(1);
  }
  return m;
}

RepMatrix build_I10() {
  RepMatrix m = build_Pbar();
  const ComplexRational half{Rational(1, 2)};
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      PairSlot ps = pair_slot(mu, nu);
      if (!ps.slot) continue;
      m(ps.slot->code(), ps.slot->code()) += half;
    }
  return m;
}

RepMatrix build_eta() {
  const RepMatrix b4 = build_beta1(4);
  RepMatrix m = -eps_matrix(ComponentIndex::scalar(), ComponentIndex::scalar());
  m += ComplexRational(2) * (b4 * b4);
  m -= build_I10();
  return m;
}

RepMatrix build_J(int mu, int nu) {
  const RepMatrix a = build_beta1(mu);
  const RepMatrix b = build_beta1(nu);
  return a * b - b * a;
}

RepMatrix contract_alpha(const RepresentationSet& rep, const std::array<ComplexRational, 4>& c) {
  RepMatrix m = RepMatrix::Zero();
  for (int mu = 1; mu <= 4; ++mu) m += c[mu - 1] * rep.alpha_at(mu);
  return m;
}

RepresentationSet build_representation() {
  RepresentationSet rep;
  for (int mu = 1; mu <= 4; ++mu) {
    rep.beta1[mu - 1] = build_beta1(mu);
    rep.beta0[mu - 1] = build_beta0(mu);
    rep.alpha[mu - 1] = rep.beta1[mu - 1] + rep.beta0[mu - 1];
  }
  rep.P = build_P();
  rep.Pbar = build_Pbar();
  rep.eta = build_eta();
  rep.I10 = build_I10();
  rep.I11 = RepMatrix::Identity();
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu)
      rep.J[mu - 1][nu - 1] =
          rep.beta1[mu - 1] * rep.beta1[nu - 1] - rep.beta1[nu - 1] * rep.beta1[mu - 1];
  return rep;
}

}  // namespace mx11
