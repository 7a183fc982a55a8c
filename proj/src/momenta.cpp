#include "maxwell11/momenta.hpp"

namespace mx11 {

const std::vector<LightlikeMomentum>& builtin_momenta() {
  static const std::vector<LightlikeMomentum> table = [] {
    auto q = [](const char* s) { return parse_rational(s); };
    std::vector<LightlikeMomentum> v;
    auto add = [&](const char* k1, const char* k2, const char* k3, const char* k0) {
      v.push_back(LightlikeMomentum::make(q(k1), q(k2), q(k3), q(k0)));
    };
    // (3,4,5) family
    add("3", "4", "0", "5");
    add("0", "3", "4", "5");
    add("4", "0", "3", "5");
    add("-3", "4", "0", "5");
    add("3", "-4", "0", "5");
    add("0", "-3", "-4", "5");
    add("4", "3", "0", "-5");
    add("3/5", "4/5", "0", "1");
    add("6", "8", "0", "10");
    add("0", "0", "4/5", "-4/5");
    // axis-aligned
    add("0", "0", "1", "1");
    add("0", "0", "-1", "1");
    add("1", "0", "0", "1");
    add("0", "1", "0", "1");
    add("0", "0", "1", "-1");
    // (5,12,13) family
    add("5", "12", "0", "13");
    add("0", "5", "12", "13");
    add("12", "0", "-5", "13");
    add("-5", "-12", "0", "13");
    add("5", "12", "0", "-13");
    add("5/13", "12/13", "0", "1");
    // (1,2,2,3) quadruple family
    add("1", "2", "2", "3");
    add("2", "-2", "1", "3");
    add("-2", "1", "2", "3");
    add("2/3", "2/3", "1/3", "1");
    return v;
  }();
  return table;
}

const std::vector<Rational>& builtin_kappas() {
  static const std::vector<Rational> table = {Rational(1), Rational(2), Rational(1, 3)};
  return table;
}

std::vector<MomentumCase> builtin_cases(int momentum_count) {
  const auto& momenta = builtin_momenta();
  const auto& kappas = builtin_kappas();
  int n = momentum_count < 0 ? static_cast<int>(momenta.size()) : momentum_count;
  if (n > static_cast<int>(momenta.size())) n = static_cast<int>(momenta.size());
  std::vector<MomentumCase> cases;
  cases.reserve(static_cast<std::size_t>(n) * kappas.size());
  for (int i = 0; i < n; ++i)
    for (const auto& kappa : kappas) cases.push_back({momenta[i], kappa});
  return cases;
}

}  // namespace mx11
