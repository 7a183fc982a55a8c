#include "maxwell11/json_io.hpp"

namespace mx11 {

Json to_json(const ComplexRational& z) {
  return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

ComplexRational complex_from_json(const Json& j) {
  return parse_complex(j.at("re").get<std::string>(), j.at("im").get<std::string>());
}

Json to_json(const CheckResult& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = r.pass ? "pass" : "fail";
  j["witness"] = r.pass ? Json(nullptr) : Json(r.witness);
  j["residual"] = r.residual;
  return j;
}

Json matrix_to_json(const std::string& name, const RepMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < ComponentIndex::kDim; ++r)
    for (int c = 0; c < ComponentIndex::kDim; ++c) {
      Json e;
      e["row"] = ComponentIndex::from_code(r).label();
      e["col"] = ComponentIndex::from_code(c).label();
      e["re"] = to_string(m(r, c).re);
      e["im"] = to_string(m(r, c).im);
      entries.push_back(std::move(e));
    }
  Json j;
  j["name"] = name;
  j["dim"] = ComponentIndex::kDim;
  j["entries"] = std::move(entries);
  return j;
}

namespace {

int code_of_label(const std::string& label) {
  for (auto idx : ComponentIndex::all())
    if (idx.label() == label) return idx.code();
  throw std::invalid_argument("unknown component label: " + label);
}

}  // namespace

RepMatrix matrix_from_json(const Json& j) {
  RepMatrix m = RepMatrix::Zero();
  for (const Json& e : j.at("entries")) {
    int r = code_of_label(e.at("row").get<std::string>());
    int c = code_of_label(e.at("col").get<std::string>());
    m(r, c) = parse_complex(e.at("re").get<std::string>(), e.at("im").get<std::string>());
  }
  return m;
}

Json field_state_to_json(const Vec11& psi) {
  FieldComponents fc = unpack(psi);
  EMFields em = em_fields(psi);
  Json j;
  j["psi0"] = to_json(fc.psi0);
  Json vec = Json::array();
  for (int mu = 1; mu <= 4; ++mu) vec.push_back(to_json(fc.psi[mu - 1]));
  j["psi"] = std::move(vec);
  Json f;
  static const char* pair_names[6] = {"12", "13", "14", "23", "24", "34"};
  for (int i = 0; i < 6; ++i) f[pair_names[i]] = to_json(fc.F[i]);
  j["F"] = std::move(f);
  Json e = Json::array(), h = Json::array();
  for (int m = 0; m < 3; ++m) {
    e.push_back(to_json(em.E[m]));
    h.push_back(to_json(em.H[m]));
  }
  j["E"] = std::move(e);
  j["H"] = std::move(h);
  return j;
}

Vec11 field_state_from_json(const Json& j) {
  FieldComponents fc;
  fc.psi0 = complex_from_json(j.at("psi0"));
  for (int mu = 1; mu <= 4; ++mu) fc.psi[mu - 1] = complex_from_json(j.at("psi").at(mu - 1));
  static const char* pair_names[6] = {"12", "13", "14", "23", "24", "34"};
  for (int i = 0; i < 6; ++i) fc.F[i] = complex_from_json(j.at("F").at(pair_names[i]));
  return pack(fc);
}

Json dyad_to_json(const DyadSolution& dyad) {
  Json j;
  j["label"] = dyad.label;
  j["psi"] = field_state_to_json(dyad.psi);
  Json bar = Json::array();
  for (int i = 0; i < ComponentIndex::kDim; ++i) bar.push_back(to_json(dyad.psi_bar(i)));
  j["psi_bar"] = std::move(bar);
  j["eta_factor"] = dyad.eta_factor ? to_json(*dyad.eta_factor) : Json(nullptr);
  return j;
}

}  // namespace mx11
