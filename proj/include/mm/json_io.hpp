#pragma once

#include <string>

#include "json.hpp"
#include "mm/groth.hpp"
#include "mm/zeta.hpp"

namespace mm {

// Machine form of a symbolic class:
//   {"kind": "class", "terms": [{"coeff": int, "atoms": [...]}, ...]}
// Laurent powers of [A] ride along as AffPow atoms so coefficients stay
// integers; atoms are tagged objects.  Emission is canonical (terms in
// normal-form order), so equal classes produce identical bytes.
nlohmann::json groth_to_json(const GrothElem& e);
GrothElem groth_from_json(const nlohmann::json& j);

// Machine form of a zeta series:
//   {"kind": "zeta", "terms": [{"coeff": <class>, "a0": int, "b0": int,
//                               "poles": [[a, b], ...]}, ...]}
nlohmann::json zeta_to_json(const ZetaFn& z);
ZetaFn zeta_from_json(const nlohmann::json& j);

}  // namespace mm
