#include "maxwell11/momentum.hpp"

#include "maxwell11/fields.hpp"

namespace mx11 {

std::string FourMomentum::str() const {
  return "(" + to_string(k1) + "," + to_string(k2) + "," + to_string(k3) + ";" + to_string(k0) +
         ")";
}

LightlikeMomentum LightlikeMomentum::make(Rational k1, Rational k2, Rational k3, Rational k0) {
  FourMomentum k{std::move(k1), std::move(k2), std::move(k3), std::move(k0)};
  if (sgn(k.k0) == 0)
    throw BadMomentum(MomentumError::ZeroFrequency,
                      "momentum has k0 = 0 (frequency must be nonzero)");
  if (sgn(k.minkowski_norm2()) != 0)
    throw BadMomentum(MomentumError::NotLightlike,
                      "momentum is not lightlike: |k|^2 - k0^2 = " + to_string(k.minkowski_norm2()));
  return LightlikeMomentum(std::move(k));
}

MassiveMomentum MassiveMomentum::make(Rational k1, Rational k2, Rational k3, Rational k0,
                                      Rational m) {
  if (sgn(m) <= 0) throw std::invalid_argument("mass must be positive");
  FourMomentum k{std::move(k1), std::move(k2), std::move(k3), std::move(k0)};
  if (k.minkowski_norm2() != -m * m)
    throw std::invalid_argument("momentum is off the mass shell: |k|^2 - k0^2 = " +
                                to_string(k.minkowski_norm2()) + ", want " + to_string(-m * m));
  return MassiveMomentum(std::move(k), std::move(m));
}

RepMatrix k_slash(const RepresentationSet& rep, const FourMomentum& k) {
  return contract_alpha(rep, k.components());
}

RepMatrix wave_operator(const RepresentationSet& rep, const LightlikeMomentum& k,
                        const Rational& kappa) {
  if (sgn(kappa) == 0) throw BadKappa("kappa must be nonzero");
  return ComplexRational::i() * k_slash(rep, k.four()) + ComplexRational(kappa) * rep.P;
}

RepMatrix massive_operator(const RepresentationSet& rep, const FourMomentum& k,
                           const Rational& m) {
  return ComplexRational::i() * k_slash(rep, k) + ComplexRational(m) * rep.I11;
}

RepMatrix gamma_projector(const RepresentationSet& rep, const LightlikeMomentum& k,
                          const Rational& kappa) {
  RepMatrix d = wave_operator(rep, k, kappa);
  RepMatrix num = d - ComplexRational(kappa) * rep.I11;
  ComplexRational inv_kappa = ComplexRational(1) / ComplexRational(kappa);
  RepMatrix scaled = inv_kappa * num;
  return scaled * scaled;
}

RepMatrix spin_squared_contracted(const RepresentationSet& rep, const LightlikeMomentum& k) {
  const auto kc = k.four().components();
  RepMatrix acc = RepMatrix::Zero();
  for (int sigma = 1; sigma <= 4; ++sigma) {
    RepMatrix left = RepMatrix::Zero();   // J_{mu sigma} k_mu
    RepMatrix right = RepMatrix::Zero();  // J_{sigma nu} k_nu
    for (int mu = 1; mu <= 4; ++mu) left += kc[mu - 1] * rep.J_at(mu, sigma);
    for (int nu = 1; nu <= 4; ++nu) right += kc[nu - 1] * rep.J_at(sigma, nu);
    acc += left * right;
  }
  ComplexRational norm = ComplexRational(1) / ComplexRational(k.k0() * k.k0());
  return norm * acc;
}

RepMatrix spin_squared_eps_form(const RepresentationSet& rep, const LightlikeMomentum& k) {
  const auto kc = k.four().components();
  ComplexRational half_inv(Rational(1, 2) / k.k0());
  RepMatrix acc = RepMatrix::Zero();
  for (int mu = 1; mu <= 4; ++mu) {
    RepMatrix w = RepMatrix::Zero();
    for (int nu = 1; nu <= 4; ++nu)
      for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
          int s = perm_sign4(mu, nu, a, b);
          if (s == 0) continue;
          w += (ComplexRational(s) * kc[nu - 1]) * rep.J_at(a, b);
        }
    w = half_inv * w;
    acc += w * w;
  }
  return acc;
}

RepMatrix spin_squared(const RepresentationSet& rep, const LightlikeMomentum& k) {
  RepMatrix contracted = spin_squared_contracted(rep, k);
  RepMatrix eps_form = spin_squared_eps_form(rep, k);
  if (!exactly_equal(contracted, eps_form))
    throw std::logic_error("spin_squared: contracted and Levi-Civita routes disagree at k=" +
                           k.str());
  return contracted;
}

RepMatrix helicity_operator(const RepresentationSet& rep, const LightlikeMomentum& k) {
  const FourMomentum& four = k.four();
  const Rational spatial[3] = {four.k1, four.k2, four.k3};
  RepMatrix acc = RepMatrix::Zero();
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        int s = levi_civita3(a, b, c);
        if (s == 0) continue;
        acc += ComplexRational(s * spatial[a - 1]) * (rep.beta1_at(b) * rep.beta1_at(c));
      }
  ComplexRational coeff = ComplexRational(Rational(0), Rational(-1)) / ComplexRational(k.k0());
  return coeff * acc;
}

SpinProjectors spin_projectors(const RepresentationSet& rep, const LightlikeMomentum& k) {
  RepMatrix s1 = ComplexRational(Rational(1, 2)) * spin_squared(rep, k);
  return {RepMatrix(rep.I11 - s1), s1};
}

HelicityProjectors helicity_projectors_of(const RepMatrix& sigma_k) {
  const RepMatrix id = RepMatrix::Identity();
  const ComplexRational half(Rational(1, 2));
  HelicityProjectors h;
  h.plus = half * (sigma_k * (sigma_k + id));
  h.minus = half * (sigma_k * (sigma_k - id));
  h.zero = id - sigma_k * sigma_k;
  return h;
}

HelicityProjectors helicity_projectors(const RepresentationSet& rep, const LightlikeMomentum& k) {
  return helicity_projectors_of(helicity_operator(rep, k));
}

StateProjectors state_projectors(const RepresentationSet& rep, const LightlikeMomentum& k,
                                 const Rational& kappa) {
  RepMatrix g = gamma_projector(rep, k, kappa);
  SpinProjectors s = spin_projectors(rep, k);
  HelicityProjectors h = helicity_projectors(rep, k);
  return {RepMatrix(s.S2_0 * g), RepMatrix(h.plus * g), RepMatrix(h.minus * g)};
}

ProjectorSet build_projector_set(const RepresentationSet& rep, const LightlikeMomentum& k,
                                 const Rational& kappa) {
  ProjectorSet p;
  p.D = wave_operator(rep, k, kappa);
  p.gamma = gamma_projector(rep, k, kappa);
  p.spin_sq = spin_squared(rep, k);
  p.helicity = helicity_operator(rep, k);
  SpinProjectors s = spin_projectors(rep, k);
  p.S2_0 = s.S2_0;
  p.S2_1 = s.S2_1;
  HelicityProjectors h = helicity_projectors(rep, k);
  p.Shat_plus = h.plus;
  p.Shat_minus = h.minus;
  p.Shat_0 = h.zero;
  p.Pi_0 = p.S2_0 * p.gamma;
  p.Pi_plus = h.plus * p.gamma;
  p.Pi_minus = h.minus * p.gamma;
  p.kappa = kappa;
  p.k = k.four();
  return p;
}

Vec11 solution_state(const LightlikeMomentum& k, const Rational& kappa,
                     const std::array<ComplexRational, 4>& psi_mu) {
  if (sgn(kappa) == 0) throw BadKappa("kappa must be nonzero");
  const auto kc = k.four().components();
  const ComplexRational minus_i_over_kappa =
      ComplexRational(Rational(0), Rational(-1)) / ComplexRational(kappa);

  FieldComponents fc;
  ComplexRational kdotpsi;
  for (int mu = 1; mu <= 4; ++mu) kdotpsi += kc[mu - 1] * psi_mu[mu - 1];
  fc.psi0 = minus_i_over_kappa * kdotpsi;
  fc.psi = psi_mu;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = mu + 1; nu <= 4; ++nu)
      fc.set_F(mu, nu,
               minus_i_over_kappa * (kc[nu - 1] * psi_mu[mu - 1] - kc[mu - 1] * psi_mu[nu - 1]));
  return pack(fc);
}

std::array<Vec11, 4> solution_basis(const LightlikeMomentum& k, const Rational& kappa) {
  std::array<Vec11, 4> basis;
  for (int mu = 1; mu <= 4; ++mu) {
    std::array<ComplexRational, 4> e{};
    e[mu - 1] = ComplexRational(1);
    basis[mu - 1] = solution_state(k, kappa, e);
  }
  return basis;
}

DyadSolution dyad_decompose(const RepMatrix& pi, const RepMatrix& eta) {
  const int n = ComponentIndex::kDim;
  bool nonzero = false;
  for (int i = 0; i < n && !nonzero; ++i)
    for (int j = 0; j < n; ++j)
      if (!pi(i, j).is_zero()) {
        nonzero = true;
        break;
      }
  if (!nonzero) throw NotRankOne("dyad extraction rejected: zero matrix");
  for (int r1 = 0; r1 < n; ++r1)
    for (int r2 = r1 + 1; r2 < n; ++r2)
      for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2) {
          ComplexRational minor = pi(r1, c1) * pi(r2, c2) - pi(r1, c2) * pi(r2, c1);
          if (!minor.is_zero())
            throw NotRankOne("dyad extraction rejected: nonzero 2x2 minor at rows (" +
                             ComponentIndex::from_code(r1).label() + "," +
                             ComponentIndex::from_code(r2).label() + ") cols (" +
                             ComponentIndex::from_code(c1).label() + "," +
                             ComponentIndex::from_code(c2).label() + "), value " +
                             to_string(minor));
        }

  int pivot = -1;
  for (int j = 0; j < n; ++j)
    if (!pi(j, j).is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0)
    throw NotRankOne("dyad extraction rejected: zero diagonal (trace must be nonzero)");

  DyadSolution dyad;
  dyad.psi = pi.col(pivot);
  ComplexRational inv = ComplexRational(1) / pi(pivot, pivot);
  dyad.psi_bar = inv * pi.row(pivot);

  // Consistency with the invariant bilinear form: psi_bar ?= c * psi^+ eta.
  RowVec11 adj;
  for (int j = 0; j < n; ++j) {
    ComplexRational s;
    for (int i = 0; i < n; ++i) s += dyad.psi(i).conjugate() * eta(i, j);
    adj(j) = s;
  }
  std::optional<ComplexRational> factor;
  for (int j = 0; j < n; ++j)
    if (!adj(j).is_zero()) {
      factor = dyad.psi_bar(j) / adj(j);
      break;
    }
  if (factor) {
    for (int j = 0; j < n; ++j)
      if (dyad.psi_bar(j) != *factor * adj(j)) {
        factor.reset();
        break;
      }
  }
  dyad.eta_factor = factor;
  return dyad;
}

}  // namespace mx11
