#pragma once

// JSON encodings of every value type. Objects use sorted keys, so dump()
// output is canonical and byte-stable.
//
//   field      {"p": 5, "k": 1}                       ("poly": [...] when k > 1)
//   matrix     {"n": 3, "field": {...}, "rows": [[...], ...]}
//   truncpoly  {"p": 3, "r": 2, "coeffs": [...]}
//   polymatrix {"n": 2, "r": 2, "field": {...}, "rows": [[truncpoly, ...], ...]}
//   tuple      {"p", "r", "n", "field", "layers": [matrix, ...]}
//   oneparam   {"p", "r", "n", "field", "phi": polymatrix}
//   datum      {"rank": d, "roots": [[...]], "coroots": [[...]]}
//   model      {"n": 4, "blocks": [2, 2], "field": {...}}
//
// Decoding failures throw UsageError.

#include "infsub/bch.hpp"
#include "infsub/dist.hpp"
#include "infsub/heisenberg.hpp"
#include "infsub/matrix.hpp"
#include "infsub/oneparam.hpp"
#include "infsub/report.hpp"
#include "infsub/rootdata.hpp"
#include "infsub/truncpoly.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace infsub::io {

using nlohmann::json;

json field_to_json(const Field &f);
Field field_from_json(const json &j);

json element_to_json(const FieldElement &a);
FieldElement element_from_json(const Field &f, const json &j);

json matrix_to_json(const Matrix &m);
/// `fallback` supplies the field when the object has none.
Matrix matrix_from_json(const json &j, const Field *fallback = nullptr);

json truncpoly_to_json(const TruncPoly &a);
TruncPoly truncpoly_from_json(const json &j, const Field *fallback = nullptr);

json polymatrix_to_json(const PolyMatrix &phi);
PolyMatrix polymatrix_from_json(const json &j, const Field *fallback = nullptr);

json dist_to_json(const DistElement &a);
DistElement dist_from_json(const json &j, const Field *fallback = nullptr);

json tuple_to_json(const CommutingTuple &t);
/// Validates commutation and nilpotency (DomainError on failure).
CommutingTuple tuple_from_json(const json &j);

json oneparam_to_json(const PolyMatrix &phi);
/// Does not check the homomorphism law.
PolyMatrix oneparam_from_json(const json &j);

json datum_to_json(const RootDatum &d);
RootDatum datum_from_json(const json &j);

json model_to_json(const UnipotentRadicalModel &m);
UnipotentRadicalModel model_from_json(const json &j);

json report_to_json(const Report &r);
json hopf_map_to_json(const HopfMapCandidate &c);
json counterexample_to_json(const CounterexampleReport &r);
json family_to_json(const FamilyReport &r);

/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string canonical(const json &j);

} // namespace infsub::io
