#pragma once

#include <json.hpp>

#include "maxwell11/fields.hpp"
#include "maxwell11/momentum.hpp"

namespace mx11 {

// Report payloads are byte-deterministic for a fixed configuration: ordered
// keys, exact-rational strings, no timestamps.
using Json = nlohmann::ordered_json;

Json to_json(const ComplexRational& z);
ComplexRational complex_from_json(const Json& j);

Json to_json(const CheckResult& r);

/// Row-major list of all 121 entries with ComponentIndex labels.
Json matrix_to_json(const std::string& name, const RepMatrix& m);
RepMatrix matrix_from_json(const Json& j);

/// {"psi0", "psi", "F", "E", "H"} with exact-rational component strings.
Json field_state_to_json(const Vec11& psi);
Vec11 field_state_from_json(const Json& j);

Json dyad_to_json(const DyadSolution& dyad);

}  // namespace mx11
