#pragma once

// JSON encoding of engine inputs and reports. Integers that fit in int64 are
// written as numbers, larger ones as decimal strings. Objects are emitted with
// sorted keys, so equal values serialize to identical bytes.

#include <json.hpp>

#include "flagtilt/cohomology.hpp"
#include "flagtilt/flagvar.hpp"
#include "flagtilt/kapranov.hpp"
#include "flagtilt/schur.hpp"
#include "flagtilt/toric.hpp"
#include "flagtilt/twists.hpp"
#include "flagtilt/weights.hpp"

namespace flagtilt {

using json = nlohmann::json;

json int_to_json(const Int& v);
/// Accepts an integer number or a decimal string. Throws Error otherwise.
Int int_from_json(const json& j);

json to_json(const GLWeight& w);
GLWeight weight_from_json(const json& j);

/// [{"weight": [...], "mult": m}, ...] in increasing weight order.
json to_json(const CharacterSum& c);
CharacterSum character_from_json(const json& j, std::size_t rank);

json to_json(const BBWResolution& r);

/// {"grade", "rank", "by_degree": {"t": character}, "euler": character}
json to_json(const CohomologyOutcome& o);
CohomologyOutcome outcome_from_json(const json& j);

json to_json(const CohomologyTerm& t);

/// {"n": n, "dims": [...]}
json to_json(const FlagShape& s);
FlagShape shape_from_json(const json& j);

/// {"flag": shape, "terms": [{"mult": m, "factors": [{"slot": "sub"|"quot"|
/// "block", "index": i, "weight": [...]}]}]}
json to_json(const BundleExpr& e);
BundleExpr bundle_from_json(const json& j);
/// The "terms" array alone, on a known shape.
BundleExpr bundle_terms_from_json(const json& terms, const FlagShape& shape);

/// {"flag": shape, "members": [{"terms": [...]}]}
json to_json(const Collection& c);
Collection collection_from_json(const json& j);

json to_json(const Witness& w);
json to_json(const ConditionStatus& s);
json to_json(const PairVerdict& v);
json to_json(const PairReport& r);
json to_json(const HomQuiver& q);
json to_json(const PieceCohomology& p);
json to_json(const DescentReport& r);
json to_json(const CounterexampleReport& r);

/// {"base_dim": r_0, "levels": [{"bundles": [[[twists...], ...], ...],
/// "perms": [[...], ...]}]}
json to_json(const TowerSpec& t);
TowerSpec tower_from_json(const json& j);

json to_json(const GridReport& r);
json to_json(const OrbitReport& r);

}  // namespace flagtilt
