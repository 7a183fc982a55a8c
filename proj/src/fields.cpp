#include "maxwell11/fields.hpp"

#include "maxwell11/momentum.hpp"

namespace mx11 {

namespace {

int slot_pos(int mu, int nu) { return ComponentIndex::tensor(mu, nu).code() - 5; }

}  // namespace

ComplexRational FieldComponents::F_at(int mu, int nu) const {
  PairSlot ps = pair_slot(mu, nu);
  if (!ps.slot) return ComplexRational(0);
  ComplexRational v = F[ps.slot->code() - 5];
  return ps.sign > 0 ? v : -v;
}

void FieldComponents::set_F(int mu, int nu, const ComplexRational& value) {
  PairSlot ps = pair_slot(mu, nu);
  if (!ps.slot) {
    if (!value.is_zero()) throw std::invalid_argument("psi_[mu mu] must vanish");
    return;
  }
  F[ps.slot->code() - 5] = ps.sign > 0 ? value : -value;
}

Vec11 pack(const FieldComponents& fc) {
  Vec11 v;
  v(0) = fc.psi0;
  for (int mu = 1; mu <= 4; ++mu) v(mu) = fc.psi[mu - 1];
  for (int i = 0; i < 6; ++i) v(5 + i) = fc.F[i];
  return v;
}

FieldComponents unpack(const Vec11& psi) {
  FieldComponents fc;
  fc.psi0 = psi(0);
  for (int mu = 1; mu <= 4; ++mu) fc.psi[mu - 1] = psi(mu);
  for (int i = 0; i < 6; ++i) fc.F[i] = psi(5 + i);
  return fc;
}

EMFields em_fields(const Vec11& psi) {
  FieldComponents fc = unpack(psi);
  EMFields em;
  for (int m = 1; m <= 3; ++m) {
    em.E[m - 1] = ComplexRational::i() * fc.F_at(m, 4);
    ComplexRational h;
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) {
        int s = levi_civita3(m, n, k);
        if (s == 0) continue;
        h += ComplexRational(Rational(s, 2)) * fc.F_at(n, k);
      }
    em.H[m - 1] = h;
  }
  return em;
}

Vec11 component_residual(const FieldComponents& fc, const LightlikeMomentum& k,
                         const Rational& kappa) {
  const auto kc = k.four().components();
  const ComplexRational i = ComplexRational::i();
  const ComplexRational kap{kappa};
  Vec11 r;

  ComplexRational scalar_eq;
  for (int mu = 1; mu <= 4; ++mu) scalar_eq += i * kc[mu - 1] * fc.psi[mu - 1];
  r(0) = scalar_eq + kap * fc.psi0;

  for (int mu = 1; mu <= 4; ++mu) {
    ComplexRational v = i * kc[mu - 1] * fc.psi0;
    for (int nu = 1; nu <= 4; ++nu) v += i * kc[nu - 1] * fc.F_at(mu, nu);
    r(mu) = v;
  }

  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = mu + 1; nu <= 4; ++nu)
      r(5 + slot_pos(mu, nu)) = i * kc[nu - 1] * fc.psi[mu - 1] -
                                i * kc[mu - 1] * fc.psi[nu - 1] + kap * fc.F_at(mu, nu);
  return r;
}

CheckResult maxwell_limit_check(const Vec11& psi, const LightlikeMomentum& k,
                                const Rational& kappa) {
  CheckResult r = CheckResult::ok("maxwell_limit");
  FieldComponents fc = unpack(psi);
  if (!fc.psi0.is_zero()) {
    return CheckResult::failed("maxwell_limit", "scalar present: psi0 != 0",
                               to_string(fc.psi0));
  }
  const auto kc = k.four().components();
  const ComplexRational i = ComplexRational::i();
  for (int mu = 1; mu <= 4; ++mu) {
    ComplexRational div;
    for (int nu = 1; nu <= 4; ++nu) div += i * kc[nu - 1] * fc.F_at(mu, nu);
    if (!div.is_zero())
      return CheckResult::failed("maxwell_limit",
                                 "strength divergence nonzero, mu=" + std::to_string(mu),
                                 to_string(div));
  }
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = mu + 1; nu <= 4; ++nu) {
      ComplexRational curl = i * kc[nu - 1] * fc.psi[mu - 1] - i * kc[mu - 1] * fc.psi[nu - 1] +
                             ComplexRational(kappa) * fc.F_at(mu, nu);
      if (!curl.is_zero())
        return CheckResult::failed(
            "maxwell_limit",
            "curl equation violated at pair (" + std::to_string(mu) + "," + std::to_string(nu) + ")",
            to_string(curl));
    }
  return r;
}

}  // namespace mx11
