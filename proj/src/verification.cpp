#include "maxwell11/verification.hpp"

#include "maxwell11/fields.hpp"
#include "maxwell11/oracle.hpp"

namespace mx11 {

namespace {

void expect_zero_vec(CheckResult& out, const Vec11& v, const std::string& relation) {
  if (!out.pass) return;
  for (int i = 0; i < ComponentIndex::kDim; ++i)
    if (!v(i).is_zero()) {
      out.pass = false;
      out.witness = relation + " at slot " + ComponentIndex::from_code(i).label();
      out.residual = to_string(v(i));
      return;
    }
}

void expect_true(CheckResult& out, bool ok, const std::string& what) {
  if (!out.pass || ok) return;
  out.pass = false;
  out.witness = what;
  out.residual = "1";
}

void expect_scalar(CheckResult& out, const ComplexRational& got, const ComplexRational& want,
                   const std::string& what) {
  if (!out.pass || got == want) return;
  out.pass = false;
  out.witness = what + ": got " + to_string(got) + ", want " + to_string(want);
  out.residual = to_string(got - want);
}

bool poly_equal(const std::vector<ComplexRational>& got,
                const std::vector<ComplexRational>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (got[i] != want[i]) return false;
  return true;
}

std::string poly_str(const std::vector<ComplexRational>& coeffs) {
  if (coeffs.empty()) return "(none)";
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ", ";
    s += to_string(coeffs[i]);
  }
  return s + "]";
}

}  // namespace

std::vector<CheckResult> momentum_suite(const RepresentationSet& rep,
                                        std::span<const MomentumCase> cases) {
  CheckResult wave_min = CheckResult::ok("wave_operator_minimal_equation");
  CheckResult gamma_idem = CheckResult::ok("gamma_idempotent");
  CheckResult gamma_ann = CheckResult::ok("gamma_annihilated_by_wave_operator");
  CheckResult ssq_routes = CheckResult::ok("spin_squared_route_agreement");
  CheckResult ssq_min = CheckResult::ok("spin_squared_minimal_equation");
  CheckResult hel_min = CheckResult::ok("helicity_minimal_equation");
  CheckResult comm_wave = CheckResult::ok("projector_commutators_with_wave_matrix");
  CheckResult comm_mixed = CheckResult::ok("spin_helicity_projector_commutators");
  CheckResult ssq_fixes = CheckResult::ok("spin_squared_fixes_helicity_range");
  CheckResult spin_complete = CheckResult::ok("spin_projector_completeness");
  CheckResult spin_idem = CheckResult::ok("spin_projector_idempotence");
  CheckResult spin_orth = CheckResult::ok("spin_projector_orthogonality");
  CheckResult hel_part = CheckResult::ok("helicity_projector_partition");
  CheckResult hel_eigen = CheckResult::ok("helicity_projector_eigen_action");
  CheckResult st_hel_idem = CheckResult::ok("state_projector_helicity_idempotent");
  CheckResult st_zero_idem = CheckResult::ok("state_projector_spin0_idempotent");
  CheckResult st_hel_orth = CheckResult::ok("state_projector_helicity_orthogonal");
  CheckResult st_zero_orth = CheckResult::ok("state_projector_spin0_orthogonal");
  CheckResult st_ann = CheckResult::ok("state_projector_annihilated");
  CheckResult st_sum = CheckResult::ok("state_projector_sum_idempotent");
  CheckResult scaling = CheckResult::ok("momentum_scaling_invariance");
  CheckResult orientation = CheckResult::ok("helicity_orientation_flip");
  CheckResult basis_ann = CheckResult::ok("solution_basis_annihilated");

  const RepMatrix id = RepMatrix::Identity();
  for (const MomentumCase& c : cases) {
    const std::string at = " @ " + c.str();
    const RepMatrix ks = k_slash(rep, c.k.four());
    const RepMatrix d = wave_operator(rep, c.k, c.kappa);
    const ComplexRational kap{c.kappa};
    const RepMatrix d_minus = d - kap * id;

    expect_zero(wave_min, RepMatrix(d * d_minus * d_minus), "D(D-kappa)^2" + at);

    const RepMatrix g = gamma_projector(rep, c.k, c.kappa);
    expect_zero(gamma_idem, RepMatrix(g * g - g), "gamma^2 - gamma" + at);
    expect_zero(gamma_ann, RepMatrix(d * g), "D gamma" + at);

    const RepMatrix ssq = spin_squared_contracted(rep, c.k);
    expect_zero(ssq_routes, RepMatrix(ssq - spin_squared_eps_form(rep, c.k)),
                "contracted - eps route" + at);
    expect_zero(ssq_min, RepMatrix(ssq * (ssq - ComplexRational(2) * id)),
                "sigma^2(sigma^2 - 2)" + at);

    const RepMatrix sk = helicity_operator(rep, c.k);
    expect_zero(hel_min, RepMatrix(sk * (sk - id) * (sk + id)),
                "sigma_k(sigma_k-1)(sigma_k+1)" + at);

    SpinProjectors sp{RepMatrix(id - ComplexRational(Rational(1, 2)) * ssq),
                      RepMatrix(ComplexRational(Rational(1, 2)) * ssq)};
    HelicityProjectors hp = helicity_projectors_of(sk);

    expect_zero(comm_wave, commutator(sp.S2_0, ks), "[S2_0, kslash]" + at);
    expect_zero(comm_wave, commutator(sp.S2_1, ks), "[S2_1, kslash]" + at);
    expect_zero(comm_wave, commutator(hp.plus, ks), "[Shat_plus, kslash]" + at);
    expect_zero(comm_wave, commutator(hp.minus, ks), "[Shat_minus, kslash]" + at);
    expect_zero(comm_wave, commutator(hp.zero, ks), "[Shat_0, kslash]" + at);

    expect_zero(comm_mixed, commutator(sp.S2_0, hp.plus), "[S2_0, Shat_plus]" + at);
    expect_zero(comm_mixed, commutator(sp.S2_0, hp.minus), "[S2_0, Shat_minus]" + at);
    expect_zero(comm_mixed, commutator(sp.S2_1, hp.plus), "[S2_1, Shat_plus]" + at);
    expect_zero(comm_mixed, commutator(sp.S2_1, hp.minus), "[S2_1, Shat_minus]" + at);
    expect_zero(comm_mixed, commutator(sp.S2_0, hp.zero), "[S2_0, Shat_0]" + at);

    expect_zero(ssq_fixes,
                RepMatrix(ComplexRational(Rational(1, 2)) * (ssq * sk) - sk),
                "(sigma^2/2) sigma_k - sigma_k" + at);

    expect_zero(spin_complete, RepMatrix(sp.S2_0 + sp.S2_1 - id), "S2_0 + S2_1 - I" + at);
    expect_zero(spin_idem, RepMatrix(sp.S2_0 * sp.S2_0 - sp.S2_0), "S2_0^2 - S2_0" + at);
    expect_zero(spin_idem, RepMatrix(sp.S2_1 * sp.S2_1 - sp.S2_1), "S2_1^2 - S2_1" + at);
    expect_zero(spin_orth, RepMatrix(sp.S2_0 * sp.S2_1), "S2_0 S2_1" + at);

    expect_zero(hel_part, RepMatrix(hp.plus + hp.minus + hp.zero - id),
                "Shat partition sum - I" + at);
    expect_zero(hel_part, RepMatrix(hp.plus * hp.plus - hp.plus), "Shat_plus^2 - Shat_plus" + at);
    expect_zero(hel_part, RepMatrix(hp.minus * hp.minus - hp.minus),
                "Shat_minus^2 - Shat_minus" + at);
    expect_zero(hel_part, RepMatrix(hp.zero * hp.zero - hp.zero), "Shat_0^2 - Shat_0" + at);
    expect_zero(hel_part, RepMatrix(hp.plus * hp.minus), "Shat_plus Shat_minus" + at);
    expect_zero(hel_part, RepMatrix(hp.plus * hp.zero), "Shat_plus Shat_0" + at);
    expect_zero(hel_part, RepMatrix(hp.minus * hp.zero), "Shat_minus Shat_0" + at);

    expect_zero(hel_eigen, RepMatrix(sk * hp.plus - hp.plus),
                "sigma_k Shat_plus - Shat_plus" + at);
    expect_zero(hel_eigen, RepMatrix(sk * hp.minus + hp.minus),
                "sigma_k Shat_minus + Shat_minus" + at);

    StateProjectors st{RepMatrix(sp.S2_0 * g), RepMatrix(hp.plus * g), RepMatrix(hp.minus * g)};
    expect_zero(st_hel_idem, RepMatrix(st.plus * st.plus - st.plus), "Pi_plus^2 - Pi_plus" + at);
    expect_zero(st_hel_idem, RepMatrix(st.minus * st.minus - st.minus),
                "Pi_minus^2 - Pi_minus" + at);
    expect_zero(st_zero_idem, RepMatrix(st.zero * st.zero - st.zero), "Pi_0^2 - Pi_0" + at);
    expect_zero(st_hel_orth, RepMatrix(st.plus * st.minus), "Pi_plus Pi_minus" + at);
    expect_zero(st_hel_orth, RepMatrix(st.minus * st.plus), "Pi_minus Pi_plus" + at);
    expect_zero(st_zero_orth, RepMatrix(st.zero * st.plus), "Pi_0 Pi_plus" + at);
    expect_zero(st_zero_orth, RepMatrix(st.zero * st.minus), "Pi_0 Pi_minus" + at);
    expect_zero(st_ann, RepMatrix(d * st.zero), "D Pi_0" + at);
    expect_zero(st_ann, RepMatrix(d * st.plus), "D Pi_plus" + at);
    expect_zero(st_ann, RepMatrix(d * st.minus), "D Pi_minus" + at);
    RepMatrix pi_sum = st.zero + st.plus + st.minus;
    expect_zero(st_sum, RepMatrix(pi_sum * pi_sum - pi_sum),
                "(Pi_0+Pi_plus+Pi_minus)^2 - sum" + at);

    {
      const FourMomentum& f = c.k.four();
      LightlikeMomentum k2 = LightlikeMomentum::make(2 * f.k1, 2 * f.k2, 2 * f.k3, 2 * f.k0);
      expect_zero(scaling, RepMatrix(spin_squared_contracted(rep, k2) - ssq),
                  "sigma^2 under k -> 2k" + at);
      expect_zero(scaling, RepMatrix(helicity_operator(rep, k2) - sk),
                  "sigma_k under k -> 2k" + at);
      expect_zero(scaling, RepMatrix(gamma_projector(rep, k2, 2 * c.kappa) - g),
                  "gamma under (k,kappa) -> (2k,2kappa)" + at);
    }

    {
      HelicityProjectors flipped = helicity_projectors_of(RepMatrix(-sk));
      expect_zero(orientation, RepMatrix(flipped.plus - hp.minus),
                  "orientation flip: Shat_plus vs Shat_minus" + at);
      expect_zero(orientation, RepMatrix(flipped.minus - hp.plus),
                  "orientation flip: Shat_minus vs Shat_plus" + at);
      expect_zero(orientation, RepMatrix(flipped.zero - hp.zero),
                  "orientation flip: Shat_0 fixed" + at);
    }

    for (const Vec11& b : solution_basis(c.k, c.kappa))
      expect_zero_vec(basis_ann, Vec11(d * b), "D * solution_state" + at);
  }

  return {wave_min,   gamma_idem,  gamma_ann,  ssq_routes,   ssq_min,      hel_min,
          comm_wave,  comm_mixed,  ssq_fixes,  spin_complete, spin_idem,   spin_orth,
          hel_part,   hel_eigen,   st_hel_idem, st_zero_idem, st_hel_orth, st_zero_orth,
          st_ann,     st_sum,      scaling,    orientation,  basis_ann};
}

std::vector<CheckResult> oracle_suite(const RepresentationSet& rep,
                                      std::span<const MomentumCase> cases) {
  CheckResult kern_dim = CheckResult::ok("oracle_kernel_dimension");
  CheckResult gamma_rank = CheckResult::ok("oracle_gamma_rank");
  CheckResult gamma_span = CheckResult::ok("oracle_gamma_column_space");
  CheckResult basis_span = CheckResult::ok("oracle_solution_basis_span");
  CheckResult wave_poly = CheckResult::ok("oracle_wave_operator_minimal_polynomial");
  CheckResult ssq_poly = CheckResult::ok("oracle_spin_squared_minimal_polynomial");
  CheckResult hel_poly = CheckResult::ok("oracle_helicity_minimal_polynomial");
  CheckResult hel_traces = CheckResult::ok("oracle_helicity_projector_traces");
  CheckResult dyad_traces = CheckResult::ok("oracle_helicity_dyad_traces");
  CheckResult spin0_trace = CheckResult::ok("oracle_spin0_projector_trace");

  for (const MomentumCase& c : cases) {
    const std::string at = " @ " + c.str();
    const RepMatrix d = wave_operator(rep, c.k, c.kappa);
    const RepMatrix g = gamma_projector(rep, c.k, c.kappa);

    oracle::NullspaceBasis kernel = oracle::null_space(d);
    expect_true(kern_dim, kernel.dimension() == 4,
                "kernel dimension " + std::to_string(kernel.dimension()) + " != 4" + at);
    expect_true(gamma_rank, oracle::rank(g) == 4,
                "rank(gamma) " + std::to_string(oracle::rank(g)) + " != 4" + at);
    expect_true(gamma_span, oracle::same_span(oracle::nonzero_columns(g), kernel.vectors),
                "columns of gamma do not span the kernel" + at);

    std::vector<Vec11> basis;
    for (const Vec11& b : solution_basis(c.k, c.kappa)) basis.push_back(b);
    expect_true(basis_span, oracle::same_span(basis, kernel.vectors),
                "solution basis does not span the kernel" + at);

    const ComplexRational kap{c.kappa};
    std::vector<ComplexRational> want_wave = {ComplexRational(0), kap * kap,
                                              ComplexRational(-2) * kap, ComplexRational(1)};
    auto got_wave = oracle::minimal_polynomial(d, 4);
    expect_true(wave_poly, poly_equal(got_wave, want_wave),
                "minimal polynomial of D is " + poly_str(got_wave) + ", want " +
                    poly_str(want_wave) + at);

    std::vector<ComplexRational> want_ssq = {ComplexRational(0), ComplexRational(-2),
                                             ComplexRational(1)};
    auto got_ssq = oracle::minimal_polynomial(spin_squared_contracted(rep, c.k), 3);
    expect_true(ssq_poly, poly_equal(got_ssq, want_ssq),
                "minimal polynomial of sigma^2 is " + poly_str(got_ssq) + ", want " +
                    poly_str(want_ssq) + at);

    std::vector<ComplexRational> want_hel = {ComplexRational(0), ComplexRational(-1),
                                             ComplexRational(0), ComplexRational(1)};
    auto got_hel = oracle::minimal_polynomial(helicity_operator(rep, c.k), 4);
    expect_true(hel_poly, poly_equal(got_hel, want_hel),
                "minimal polynomial of sigma_k is " + poly_str(got_hel) + ", want " +
                    poly_str(want_hel) + at);

    HelicityProjectors hp = helicity_projectors(rep, c.k);
    expect_scalar(hel_traces, trace(hp.plus), ComplexRational(3), "trace(Shat_plus)" + at);
    expect_scalar(hel_traces, trace(hp.minus), ComplexRational(3), "trace(Shat_minus)" + at);
    expect_scalar(hel_traces, trace(hp.zero), ComplexRational(5), "trace(Shat_0)" + at);

    StateProjectors st = state_projectors(rep, c.k, c.kappa);
    expect_scalar(dyad_traces, trace(st.plus), ComplexRational(1), "trace(Pi_plus)" + at);
    expect_scalar(dyad_traces, trace(st.minus), ComplexRational(1), "trace(Pi_minus)" + at);
    expect_scalar(spin0_trace, trace(st.zero), ComplexRational(1), "trace(Pi_0)" + at);
  }

  return {kern_dim, gamma_rank, gamma_span, basis_span, wave_poly,
          ssq_poly, hel_poly,   hel_traces, dyad_traces, spin0_trace};
}

std::vector<CheckResult> dyad_suite(const RepresentationSet& rep,
                                    std::span<const MomentumCase> cases) {
  CheckResult rank_one = CheckResult::ok("helicity_dyad_rank_one");
  CheckResult reconstruct = CheckResult::ok("helicity_dyad_reconstruction");
  CheckResult solves = CheckResult::ok("helicity_dyad_solves_wave_equation");
  CheckResult hel_eigen = CheckResult::ok("helicity_dyad_helicity_eigenvalue");
  CheckResult spin_eigen = CheckResult::ok("helicity_dyad_spin_squared_eigenvalue");
  CheckResult bilinear = CheckResult::ok("helicity_dyad_bilinear_consistency");
  CheckResult spin0 = CheckResult::ok("spin0_dyad_extraction");
  CheckResult rejects = CheckResult::ok("dyad_extraction_rejects_gamma");

  for (const MomentumCase& c : cases) {
    const std::string at = " @ " + c.str();
    const RepMatrix d = wave_operator(rep, c.k, c.kappa);
    const RepMatrix g = gamma_projector(rep, c.k, c.kappa);
    const RepMatrix ssq = spin_squared_contracted(rep, c.k);
    const RepMatrix sk = helicity_operator(rep, c.k);
    StateProjectors st = state_projectors(rep, c.k, c.kappa);

    struct Case {
      const RepMatrix* pi;
      int sign;
      const char* tag;
    } helicity_cases[2] = {{&st.plus, +1, "plus"}, {&st.minus, -1, "minus"}};

    for (const auto& hc : helicity_cases) {
      auto rk = oracle::rank_one_check(*hc.pi);
      expect_true(rank_one, rk.pass,
                  std::string("Pi_") + hc.tag + " not rank one (" + rk.witness + ")" + at);
      if (!rk.pass) continue;
      DyadSolution dyad = dyad_decompose(*hc.pi, rep.eta);
      expect_zero(reconstruct, RepMatrix(dyad.psi * dyad.psi_bar - *hc.pi),
                  std::string("psi psi_bar - Pi_") + hc.tag + at);
      ComplexRational norm;
      for (int i = 0; i < ComponentIndex::kDim; ++i) norm += dyad.psi_bar(i) * dyad.psi(i);
      expect_scalar(reconstruct, norm, ComplexRational(1),
                    std::string("psi_bar psi for Pi_") + hc.tag + at);
      expect_zero_vec(solves, Vec11(d * dyad.psi), std::string("D psi_") + hc.tag + at);
      expect_zero_vec(hel_eigen, Vec11(sk * dyad.psi - ComplexRational(hc.sign) * dyad.psi),
                      std::string("sigma_k psi - (") + (hc.sign > 0 ? "+1" : "-1") + ")psi" + at);
      expect_zero_vec(spin_eigen, Vec11(ssq * dyad.psi - ComplexRational(2) * dyad.psi),
                      std::string("sigma^2 psi - 2 psi for Pi_") + hc.tag + at);
      expect_true(bilinear, dyad.eta_factor.has_value(),
                  std::string("psi_bar not proportional to psi^+ eta for Pi_") + hc.tag + at);
    }

    {
      auto rk = oracle::rank_one_check(st.zero);
      expect_true(spin0, rk.pass, "Pi_0 not rank one (" + rk.witness + ")" + at);
      expect_scalar(spin0, trace(st.zero), ComplexRational(1), "trace(Pi_0)" + at);
      if (rk.pass) {
        DyadSolution dyad = dyad_decompose(st.zero, rep.eta);
        expect_zero(spin0, RepMatrix(dyad.psi * dyad.psi_bar - st.zero), "psi psi_bar - Pi_0" + at);
        expect_zero_vec(spin0, Vec11(d * dyad.psi), "D psi_0" + at);
        expect_zero_vec(spin0, Vec11(ssq * dyad.psi), "sigma^2 psi_0" + at);
      }
    }

    bool threw = false;
    try {
      dyad_decompose(g, rep.eta);
    } catch (const NotRankOne&) {
      threw = true;
    }
    expect_true(rejects, threw, "dyad extraction accepted gamma (rank 4)" + at);
  }

  return {rank_one, reconstruct, solves, hel_eigen, spin_eigen, bilinear, spin0, rejects};
}

std::vector<CheckResult> run_verification(const RepresentationSet& rep,
                                          std::span<const MomentumCase> cases) {
  std::vector<CheckResult> out = run_all(rep);
  for (auto& r : momentum_suite(rep, cases)) out.push_back(std::move(r));
  for (auto& r : oracle_suite(rep, cases)) out.push_back(std::move(r));
  for (auto& r : dyad_suite(rep, cases)) out.push_back(std::move(r));
  return out;
}

}  // namespace mx11
