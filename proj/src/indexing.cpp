#include "maxwell11/indexing.hpp"

namespace mx11 {

const std::array<ComponentIndex, ComponentIndex::kDim>& ComponentIndex::all() {
  static const std::array<ComponentIndex, kDim> order = {
      scalar(),        vector(1),    vector(2),    vector(3),    vector(4),   tensor(1, 2),
      tensor(1, 3),    tensor(1, 4), tensor(2, 3), tensor(2, 4), tensor(3, 4)};
  return order;
}

std::string ComponentIndex::label() const {
  switch (kind()) {
    case Kind::Scalar:
      return "S";
    case Kind::Vector:
      return "V" + std::to_string(mu());
    case Kind::Tensor:
      return "T" + std::to_string(mu()) + std::to_string(nu());
  }
  return "?";
}

int perm_sign4(int a, int b, int c, int d) {
  int idx[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i) {
    if (idx[i] < 1 || idx[i] > 4) return 0;
    for (int j = i + 1; j < 4; ++j)
      if (idx[i] == idx[j]) return 0;
  }
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (idx[i] > idx[j]) sign = -sign;
  return sign;
}

int levi_civita3(int a, int b, int c) {
  int idx[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    if (idx[i] < 1 || idx[i] > 3) return 0;
    for (int j = i + 1; j < 3; ++j)
      if (idx[i] == idx[j]) return 0;
  }
  int sign = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (idx[i] > idx[j]) sign = -sign;
  return sign;
}

}  // namespace mx11
