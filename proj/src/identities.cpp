#include "maxwell11/identities.hpp"

#include <set>

namespace mx11 {

namespace {

Rational delta(int a, int b) { return Rational(a == b ? 1 : 0); }

std::string tuple_str(std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

struct SampleMomentum {
  std::array<ComplexRational, 4> k;  // k4 = i k0 already applied
  Rational k2;                       // spatial^2 - k0^2
  std::string label;
};

std::vector<SampleMomentum> sample_momenta() {
  auto mk = [](long k1, long k2, long k3, long k0) {
    SampleMomentum s;
    s.k = {ComplexRational(Rational(k1)), ComplexRational(Rational(k2)),
           ComplexRational(Rational(k3)), ComplexRational(Rational(0), Rational(k0))};
    s.k2 = Rational(k1 * k1 + k2 * k2 + k3 * k3 - k0 * k0);
    s.label = "(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(k3) +
              ";" + std::to_string(k0) + ")";
    return s;
  };
  // Three lightlike, two off the cone (one of them a rest-frame massive k).
  return {mk(3, 4, 0, 5), mk(0, 0, 1, 1), mk(5, 12, 0, 13), mk(0, 0, 1, 2), mk(0, 0, 0, 1)};
}

}  // namespace

bool expect_zero(CheckResult& out, const RepMatrix& m, const std::string& relation) {
  if (!out.pass) return false;  // keep the first witness
  auto nz = first_nonzero(m);
  if (!nz) return true;
  auto a = ComponentIndex::from_code(static_cast<int>(nz->first));
  auto b = ComponentIndex::from_code(static_cast<int>(nz->second));
  out.pass = false;
  out.witness = relation + " at entry (" + a.label() + "," + b.label() + ")";
  out.residual = to_string(m(nz->first, nz->second));
  return false;
}

CheckResult check_projector_relations(const RepresentationSet& rep) {
  CheckResult r = CheckResult::ok("projector_relations");
  expect_zero(r, rep.P * rep.P - rep.P, "P*P - P");
  expect_zero(r, rep.Pbar * rep.Pbar - rep.Pbar, "Pbar*Pbar - Pbar");
  expect_zero(r, rep.P + rep.Pbar - rep.I11, "P + Pbar - I");
  for (int mu = 1; mu <= 4; ++mu) {
    const RepMatrix& a = rep.alpha_at(mu);
    expect_zero(r, a * rep.Pbar + rep.Pbar * a - a, "alpha*Pbar + Pbar*alpha - alpha, mu=" + std::to_string(mu));
    expect_zero(r, a * rep.P + rep.P * a - a, "alpha*P + P*alpha - alpha, mu=" + std::to_string(mu));
  }
  return r;
}

namespace {

CheckResult trilinear_check(const std::string& name, const std::array<RepMatrix, 4>& b) {
  CheckResult r = CheckResult::ok(name);
  for (int mu = 1; mu <= 4 && r.pass; ++mu)
    for (int nu = 1; nu <= 4 && r.pass; ++nu)
      for (int al = 1; al <= 4 && r.pass; ++al) {
        RepMatrix lhs = b[mu - 1] * b[nu - 1] * b[al - 1] + b[al - 1] * b[nu - 1] * b[mu - 1];
        RepMatrix rhs = ComplexRational(delta(mu, nu)) * b[al - 1] +
                        ComplexRational(delta(al, nu)) * b[mu - 1];
        expect_zero(r, lhs - rhs, "trilinear relation, triple " + tuple_str({mu, nu, al}));
      }
  return r;
}

}  // namespace

CheckResult check_pdk_algebra(const RepresentationSet& rep, BetaFamily family) {
  const bool one = family == BetaFamily::beta1;
  return trilinear_check(one ? "pdk_algebra_beta1" : "pdk_algebra_beta0",
                         one ? rep.beta1 : rep.beta0);
}

CheckResult check_pdk_algebra_alpha(const RepresentationSet& rep) {
  CheckResult inner = trilinear_check("_", rep.alpha);
  // Documented counterexample: the alphas do not close under the trilinear
  // relation; they satisfy the six-term algebra instead.
  if (inner.pass)
    return CheckResult::failed("pdk_trilinear_rejects_alpha",
                               "alpha family unexpectedly satisfies the trilinear relation", "0");
  CheckResult r = CheckResult::ok("pdk_trilinear_rejects_alpha");
  r.witness = "counterexample " + inner.witness;
  return r;
}

CheckResult check_alpha_algebra(const RepresentationSet& rep) {
  CheckResult r = CheckResult::ok("alpha_algebra");
  const auto& a = rep.alpha;
  for (int mu = 1; mu <= 4 && r.pass; ++mu)
    for (int nu = 1; nu <= 4 && r.pass; ++nu)
      for (int al = 1; al <= 4 && r.pass; ++al) {
        const RepMatrix &am = a[mu - 1], &an = a[nu - 1], &aa = a[al - 1];
        RepMatrix lhs = am * an * aa + aa * an * am + am * aa * an + an * aa * am +
                        an * am * aa + aa * am * an;
        RepMatrix rhs = ComplexRational(2 * delta(mu, nu)) * aa +
                        ComplexRational(2 * delta(al, nu)) * am +
                        ComplexRational(2 * delta(mu, al)) * an;
        expect_zero(r, lhs - rhs, "six-term relation, triple " + tuple_str({mu, nu, al}));
      }
  // Contraction consequence: kslash^3 = k^2 kslash for any momentum.
  for (const auto& s : sample_momenta()) {
    if (!r.pass) break;
    RepMatrix ks = contract_alpha(rep, s.k);
    expect_zero(r, ks * ks * ks - ComplexRational(s.k2) * ks,
                "kslash^3 - k^2 kslash at k=" + s.label);
  }
  return r;
}

CheckResult check_lorentz_commutators(const RepresentationSet& rep) {
  CheckResult r = CheckResult::ok("lorentz_commutators");
  for (int rho = 1; rho <= 4 && r.pass; ++rho)
    for (int sg = 1; sg <= 4 && r.pass; ++sg)
      for (int mu = 1; mu <= 4 && r.pass; ++mu)
        for (int nu = 1; nu <= 4 && r.pass; ++nu) {
          RepMatrix lhs = commutator(rep.J_at(rho, sg), rep.J_at(mu, nu));
          RepMatrix rhs = ComplexRational(delta(sg, mu)) * rep.J_at(rho, nu) +
                          ComplexRational(delta(rho, nu)) * rep.J_at(sg, mu) -
                          ComplexRational(delta(rho, mu)) * rep.J_at(sg, nu) -
                          ComplexRational(delta(sg, nu)) * rep.J_at(rho, mu);
          expect_zero(r, lhs - rhs, "[J,J] relation, tuple " + tuple_str({rho, sg, mu, nu}));
        }
  for (int la = 1; la <= 4 && r.pass; ++la)
    for (int mu = 1; mu <= 4 && r.pass; ++mu)
      for (int nu = 1; nu <= 4 && r.pass; ++nu) {
        RepMatrix lhs = commutator(rep.alpha_at(la), rep.J_at(mu, nu));
        RepMatrix rhs = ComplexRational(delta(la, mu)) * rep.alpha_at(nu) -
                        ComplexRational(delta(la, nu)) * rep.alpha_at(mu);
        expect_zero(r, lhs - rhs, "[alpha,J] relation, tuple " + tuple_str({la, mu, nu}));
      }
  return r;
}

CheckResult check_eta_relations(const RepresentationSet& rep) {
  CheckResult r = CheckResult::ok("eta_relations");
  for (int i = 1; i <= 3; ++i)
    expect_zero(r, rep.eta * rep.alpha_at(i) + rep.alpha_at(i) * rep.eta,
                "eta alpha_i + alpha_i eta, i=" + std::to_string(i));
  expect_zero(r, rep.eta * rep.alpha_at(4) - rep.alpha_at(4) * rep.eta,
              "eta alpha_4 - alpha_4 eta");
  expect_zero(r, rep.eta * rep.eta - rep.I11, "eta^2 - I");
  // eta*(i kslash) is self-adjoint for real spatial momentum, k4 = i k0.
  for (const auto& s : sample_momenta()) {
    if (!r.pass) break;
    RepMatrix m = rep.eta * (ComplexRational::i() * contract_alpha(rep, s.k));
    expect_zero(r, m - dagger(m), "eta*(i kslash) self-adjointness at k=" + s.label);
  }
  return r;
}

CheckResult check_representation_invariants(const RepresentationSet& rep) {
  CheckResult r = CheckResult::ok("representation_invariants");

  // Entry bound {0, +-1, +-1/2, +-2} on every constructed matrix.
  const std::set<Rational> allowed = {Rational(0),     Rational(1),  Rational(-1),
                                      Rational(1, 2),  Rational(-1, 2), Rational(2),
                                      Rational(-2)};
  auto bounded = [&](const RepMatrix& m, const std::string& what) {
    if (!r.pass) return;
    for (int i = 0; i < ComponentIndex::kDim; ++i)
      for (int j = 0; j < ComponentIndex::kDim; ++j) {
        const ComplexRational& z = m(i, j);
        if (allowed.count(z.re) && allowed.count(z.im)) continue;
        r.pass = false;
        r.witness = what + " entry out of bound at (" +
                    ComponentIndex::from_code(i).label() + "," +
                    ComponentIndex::from_code(j).label() + ")";
        r.residual = to_string(z);
        return;
      }
  };
  for (int mu = 1; mu <= 4; ++mu) {
    bounded(rep.alpha_at(mu), "alpha_" + std::to_string(mu));
    bounded(rep.beta1_at(mu), "beta1_" + std::to_string(mu));
    bounded(rep.beta0_at(mu), "beta0_" + std::to_string(mu));
    for (int nu = 1; nu <= 4; ++nu) bounded(rep.J_at(mu, nu), "J_" + tuple_str({mu, nu}));
  }
  bounded(rep.P, "P");
  bounded(rep.Pbar, "Pbar");
  bounded(rep.eta, "eta");

  for (int mu = 1; mu <= 4; ++mu) {
    expect_zero(r, rep.beta1_at(mu) + rep.beta0_at(mu) - rep.alpha_at(mu),
                "beta1 + beta0 - alpha, mu=" + std::to_string(mu));
    expect_zero(r, RepMatrix(rep.alpha_at(mu) - rep.alpha_at(mu).transpose()),
                "alpha symmetry, mu=" + std::to_string(mu));
    expect_zero(r, rep.Pbar * rep.alpha_at(mu) * rep.Pbar,
                "Pbar alpha Pbar, mu=" + std::to_string(mu));
  }
  expect_zero(r, rep.P * rep.Pbar, "P*Pbar");

  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      expect_zero(r, rep.J_at(mu, nu) + rep.J_at(nu, mu),
                  "J antisymmetry, tuple " + tuple_str({mu, nu}));
      if (!r.pass) break;
      // The scalar slot is a Lorentz invariant: row and column S vanish.
      const RepMatrix& j = rep.J_at(mu, nu);
      for (int c = 0; c < ComponentIndex::kDim; ++c) {
        if (!j(0, c).is_zero() || !j(c, 0).is_zero()) {
          r.pass = false;
          r.witness = "J scalar row/column nonzero, tuple " + tuple_str({mu, nu});
          r.residual = to_string(j(0, c).is_zero() ? j(c, 0) : j(0, c));
          break;
        }
      }
    }
  return r;
}

std::vector<CheckResult> run_all(const RepresentationSet& rep) {
  std::vector<CheckResult> out;
  out.push_back(check_projector_relations(rep));
  out.push_back(check_pdk_algebra(rep, BetaFamily::beta1));
  out.push_back(check_pdk_algebra(rep, BetaFamily::beta0));
  out.push_back(check_pdk_algebra_alpha(rep));
  out.push_back(check_alpha_algebra(rep));
  out.push_back(check_lorentz_commutators(rep));
  out.push_back(check_eta_relations(rep));
  out.push_back(check_representation_invariants(rep));
  return out;
}

}  // namespace mx11
