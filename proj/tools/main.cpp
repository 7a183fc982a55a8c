// Command-line surface: run the exact verification suites, compute projector
// sets and polarization states at a given lightlike momentum, and emit
// deterministic text or JSON reports.
//
// Exit codes: 0 all emitted checks pass, 1 at least one check failed,
// 2 malformed input (non-lightlike momentum, k0 = 0, kappa = 0, bad flags).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "maxwell11/json_io.hpp"
#include "maxwell11/oracle.hpp"
#include "maxwell11/verification.hpp"

namespace {

using namespace mx11;

struct Options {
  std::string k_csv;
  std::string k0;
  std::string kappa;
  std::string format = "text";
  std::string out_path;
  std::string dump_name;
  int sweep = -1;
};

std::optional<LightlikeMomentum> parse_momentum(const Options& opt) {
  if (opt.k_csv.empty() && opt.k0.empty()) return std::nullopt;
  if (opt.k_csv.empty() || opt.k0.empty())
    throw CLI::ValidationError("--k and --k0 must be given together");
  std::vector<std::string> parts;
  std::stringstream ss(opt.k_csv);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3)
    throw std::invalid_argument("--k expects three comma-separated rationals, got '" +
                                opt.k_csv + "'");
  return LightlikeMomentum::make(parse_rational(parts[0]), parse_rational(parts[1]),
                                 parse_rational(parts[2]), parse_rational(opt.k0));
}

Rational parse_kappa_or_default(const Options& opt) {
  Rational kappa = opt.kappa.empty() ? Rational(1) : parse_rational(opt.kappa);
  if (sgn(kappa) == 0) throw BadKappa("kappa must be nonzero");
  return kappa;
}

void write_output(const Options& opt, const std::string& payload) {
  if (opt.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw std::runtime_error("cannot open output path: " + opt.out_path);
  out << payload;
}

Json meta_block(const std::string& command, const Options& opt,
                const std::optional<LightlikeMomentum>& k, const Rational& kappa) {
  Json meta;
  meta["tool"] = "maxwell11";
  meta["command"] = command;
  meta["momentum"] = k ? Json(k->str()) : Json(nullptr);
  meta["kappa"] = to_string(kappa);
  meta["format"] = opt.format;
  return meta;
}

std::string checks_text(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : checks) {
    if (c.pass) {
      os << "[pass] " << c.name << "\n";
    } else {
      ++failed;
      os << "[FAIL] " << c.name << " -- " << c.witness << " (residual " << c.residual << ")\n";
    }
  }
  os << checks.size() << " checks, " << failed << " failed\n";
  return os.str();
}

int exit_code_for(const std::vector<CheckResult>& checks) { return all_pass(checks) ? 0 : 1; }

int cmd_verify(const Options& opt) {
  RepresentationSet rep = build_representation();
  std::vector<MomentumCase> cases;
  auto k = parse_momentum(opt);
  Rational kappa = parse_kappa_or_default(opt);
  if (k) {
    cases.push_back({*k, kappa});
  } else if (!opt.kappa.empty()) {
    for (const auto& m : builtin_momenta()) cases.push_back({m, kappa});
    if (opt.sweep >= 0 && static_cast<std::size_t>(opt.sweep) < cases.size())
      cases.erase(cases.begin() + opt.sweep, cases.end());
  } else {
    cases = builtin_cases(opt.sweep);
  }

  std::vector<CheckResult> checks = run_verification(rep, cases);

  if (opt.format == "json") {
    Json j;
    j["meta"] = meta_block("verify", opt, k, kappa);
    j["meta"]["cases"] = static_cast<int>(cases.size());
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    j["checks"] = std::move(arr);
    j["solutions"] = Json::array();
    write_output(opt, j.dump(2) + "\n");
  } else {
    write_output(opt, checks_text(checks));
  }
  return exit_code_for(checks);
}

struct SolveData {
  ProjectorSet ps;
  std::vector<CheckResult> checks;
  std::vector<DyadSolution> dyads;
  std::string spin0_error;
  int gamma_rank = 0;
  int kernel_dimension = 0;
};

SolveData solve_at(const RepresentationSet& rep, const LightlikeMomentum& k,
                   const Rational& kappa) {
  SolveData data{build_projector_set(rep, k, kappa), {}, {}, "", 0, 0};
  std::vector<MomentumCase> cases = {{k, kappa}};
  data.checks = momentum_suite(rep, cases);
  for (auto& c : oracle_suite(rep, cases)) data.checks.push_back(std::move(c));
  for (auto& c : dyad_suite(rep, cases)) data.checks.push_back(std::move(c));

  data.gamma_rank = oracle::rank(data.ps.gamma);
  data.kernel_dimension = oracle::null_space(data.ps.D).dimension();

  try {
    DyadSolution plus = dyad_decompose(data.ps.Pi_plus, rep.eta);
    plus.label = "helicity+1";
    data.dyads.push_back(std::move(plus));
    DyadSolution minus = dyad_decompose(data.ps.Pi_minus, rep.eta);
    minus.label = "helicity-1";
    data.dyads.push_back(std::move(minus));
  } catch (const NotRankOne& e) {
    data.spin0_error = std::string("helicity dyad extraction failed: ") + e.what();
  }
  try {
    DyadSolution zero = dyad_decompose(data.ps.Pi_0, rep.eta);
    zero.label = "spin-0";
    data.dyads.push_back(std::move(zero));
  } catch (const NotRankOne& e) {
    data.spin0_error = e.what();
  }
  return data;
}

int cmd_solve(const Options& opt) {
  RepresentationSet rep = build_representation();
  auto k = parse_momentum(opt);
  if (!k) throw CLI::ValidationError("solve requires --k and --k0");
  Rational kappa = parse_kappa_or_default(opt);
  SolveData data = solve_at(rep, *k, kappa);

  if (opt.format == "json") {
    Json j;
    j["meta"] = meta_block("solve", opt, k, kappa);
    Json arr = Json::array();
    for (const auto& c : data.checks) arr.push_back(to_json(c));
    j["checks"] = std::move(arr);
    Json solutions = Json::array();
    for (const auto& d : data.dyads) solutions.push_back(dyad_to_json(d));
    j["solutions"] = std::move(solutions);
    j["spin0_extraction_error"] = data.spin0_error.empty() ? Json(nullptr) : Json(data.spin0_error);
    j["oracle"] = Json{{"gamma_rank", data.gamma_rank},
                       {"kernel_dimension", data.kernel_dimension}};
    Json mats = Json::array();
    mats.push_back(matrix_to_json("D", data.ps.D));
    mats.push_back(matrix_to_json("gamma", data.ps.gamma));
    mats.push_back(matrix_to_json("spin_squared", data.ps.spin_sq));
    mats.push_back(matrix_to_json("helicity", data.ps.helicity));
    mats.push_back(matrix_to_json("S2_0", data.ps.S2_0));
    mats.push_back(matrix_to_json("S2_1", data.ps.S2_1));
    mats.push_back(matrix_to_json("Shat_plus", data.ps.Shat_plus));
    mats.push_back(matrix_to_json("Shat_minus", data.ps.Shat_minus));
    mats.push_back(matrix_to_json("Shat_0", data.ps.Shat_0));
    mats.push_back(matrix_to_json("Pi_0", data.ps.Pi_0));
    mats.push_back(matrix_to_json("Pi_plus", data.ps.Pi_plus));
    mats.push_back(matrix_to_json("Pi_minus", data.ps.Pi_minus));
    j["matrices"] = std::move(mats);
    write_output(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "momentum " << k->str() << ", kappa " << to_string(kappa) << "\n";
    os << "trace(gamma) = " << to_string(trace(data.ps.gamma))
       << ", oracle rank(gamma) = " << data.gamma_rank
       << ", kernel dimension = " << data.kernel_dimension << "\n";
    os << "traces: Pi_0 = " << to_string(trace(data.ps.Pi_0))
       << ", Pi_plus = " << to_string(trace(data.ps.Pi_plus))
       << ", Pi_minus = " << to_string(trace(data.ps.Pi_minus)) << "\n";
    for (const auto& d : data.dyads) {
      ComplexRational norm;
      for (int i = 0; i < ComponentIndex::kDim; ++i) norm += d.psi_bar(i) * d.psi(i);
      os << "dyad " << d.label << ": psi_bar.psi = " << to_string(norm)
         << (d.eta_factor ? ", psi_bar = (" + to_string(*d.eta_factor) + ") psi^+ eta" : "")
         << "\n";
    }
    if (!data.spin0_error.empty()) os << "spin-0 dyad unavailable: " << data.spin0_error << "\n";
    os << checks_text(data.checks);
    write_output(opt, os.str());
  }
  return data.spin0_error.empty() ? exit_code_for(data.checks) : 1;
}

int cmd_states(const Options& opt) {
  RepresentationSet rep = build_representation();
  auto k = parse_momentum(opt);
  if (!k) throw CLI::ValidationError("states requires --k and --k0");
  Rational kappa = parse_kappa_or_default(opt);
  SolveData data = solve_at(rep, *k, kappa);

  std::vector<std::pair<DyadSolution, CheckResult>> states;
  for (const auto& d : data.dyads)
    states.emplace_back(d, maxwell_limit_check(d.psi, *k, kappa));

  if (opt.format == "json") {
    Json j;
    j["meta"] = meta_block("states", opt, k, kappa);
    Json arr = Json::array();
    for (const auto& [d, ml] : states) {
      Json s = dyad_to_json(d);
      s["maxwell_limit"] = to_json(ml);
      arr.push_back(std::move(s));
    }
    j["checks"] = Json::array();
    j["solutions"] = std::move(arr);
    j["spin0_extraction_error"] = data.spin0_error.empty() ? Json(nullptr) : Json(data.spin0_error);
    write_output(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "momentum " << k->str() << ", kappa " << to_string(kappa) << "\n";
    for (const auto& [d, ml] : states) {
      FieldComponents fc = unpack(d.psi);
      EMFields em = em_fields(d.psi);
      os << "state " << d.label << ":\n";
      os << "  psi0 = " << to_string(fc.psi0) << "\n  psi = (";
      for (int mu = 0; mu < 4; ++mu) os << (mu ? ", " : "") << to_string(fc.psi[mu]);
      os << ")\n  F = (";
      static const char* pair_names[6] = {"12", "13", "14", "23", "24", "34"};
      for (int i = 0; i < 6; ++i)
        os << (i ? ", " : "") << pair_names[i] << ": " << to_string(fc.F[i]);
      os << ")\n  E = (";
      for (int m = 0; m < 3; ++m) os << (m ? ", " : "") << to_string(em.E[m]);
      os << "), H = (";
      for (int m = 0; m < 3; ++m) os << (m ? ", " : "") << to_string(em.H[m]);
      os << ")\n  maxwell-limit: "
         << (ml.pass ? "pass" : "fail (" + ml.witness + ")") << "\n";
    }
    if (!data.spin0_error.empty()) os << "spin-0 state unavailable: " << data.spin0_error << "\n";
    write_output(opt, os.str());
  }
  bool ok = data.spin0_error.empty();
  return ok ? 0 : 1;
}

int cmd_dump(const Options& opt) {
  RepresentationSet rep = build_representation();
  std::map<std::string, RepMatrix> fixed;
  for (int mu = 1; mu <= 4; ++mu) {
    fixed["alpha" + std::to_string(mu)] = rep.alpha_at(mu);
    fixed["beta1_" + std::to_string(mu)] = rep.beta1_at(mu);
    fixed["beta0_" + std::to_string(mu)] = rep.beta0_at(mu);
  }
  fixed["P"] = rep.P;
  fixed["Pbar"] = rep.Pbar;
  fixed["eta"] = rep.eta;
  fixed["I10"] = rep.I10;
  fixed["I11"] = rep.I11;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu)
      if (mu != nu) fixed["J" + std::to_string(mu) + std::to_string(nu)] = rep.J_at(mu, nu);

  RepMatrix matrix;
  auto it = fixed.find(opt.dump_name);
  if (it != fixed.end()) {
    matrix = it->second;
  } else {
    auto k = parse_momentum(opt);
    if (!k)
      throw std::invalid_argument("matrix '" + opt.dump_name +
                                  "' is momentum-dependent; pass --k and --k0 (or check the name)");
    Rational kappa = parse_kappa_or_default(opt);
    ProjectorSet ps = build_projector_set(rep, *k, kappa);
    std::map<std::string, RepMatrix> dependent = {
        {"kslash", k_slash(rep, k->four())},
        {"D", ps.D},
        {"gamma", ps.gamma},
        {"spin_squared", ps.spin_sq},
        {"helicity", ps.helicity},
        {"S2_0", ps.S2_0},
        {"S2_1", ps.S2_1},
        {"Shat_plus", ps.Shat_plus},
        {"Shat_minus", ps.Shat_minus},
        {"Shat_0", ps.Shat_0},
        {"Pi_0", ps.Pi_0},
        {"Pi_plus", ps.Pi_plus},
        {"Pi_minus", ps.Pi_minus},
    };
    auto jt = dependent.find(opt.dump_name);
    if (jt == dependent.end())
      throw std::invalid_argument("unknown matrix name: " + opt.dump_name);
    matrix = jt->second;
  }

  if (opt.format == "json") {
    write_output(opt, matrix_to_json(opt.dump_name, matrix).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << opt.dump_name << ":\n";
    for (int r = 0; r < ComponentIndex::kDim; ++r) {
      os << "  " << ComponentIndex::from_code(r).label() << ":";
      for (int c = 0; c < ComponentIndex::kDim; ++c) os << " " << to_string(matrix(r, c));
      os << "\n";
    }
    write_output(opt, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maxwell11: exact verifier and solver for the 11-dimensional first-order "
               "formulation of the generalized Maxwell equations"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_dump) {
    sub->add_option("--k", opt.k_csv, "spatial momentum k1,k2,k3 (exact rationals)");
    sub->add_option("--k0", opt.k0, "frequency k0 (exact rational, nonzero)");
    sub->add_option("--kappa", opt.kappa, "equation parameter kappa (exact rational, nonzero)");
    sub->add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", opt.out_path, "write the report to this path");
    if (with_dump) sub->add_option("--dump", opt.dump_name, "matrix name to dump")->required();
  };

  CLI::App* verify = app.add_subcommand("verify", "run the exact identity suites");
  add_common(verify, false);
  verify->add_option("--sweep", opt.sweep, "use only the first N builtin momenta");

  CLI::App* solve = app.add_subcommand("solve", "projector set and dyads at one momentum");
  add_common(solve, false);

  CLI::App* states = app.add_subcommand("states", "polarization states with E/H fields");
  add_common(states, false);

  CLI::App* dump = app.add_subcommand("dump", "print one named matrix");
  add_common(dump, true);

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(opt);
    if (solve->parsed()) return cmd_solve(opt);
    if (states->parsed()) return cmd_states(opt);
    if (dump->parsed()) return cmd_dump(opt);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 2;
  } catch (const BadMomentum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadKappa& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
