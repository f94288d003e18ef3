#pragma once

#include "skein/analysis.hpp"
#include "skein/mutation.hpp"

#include <json.hpp>

namespace skein {

using Json = nlohmann::ordered_json;

// Polynomials serialize with sorted exponent keys and decimal-string
// coefficients; round-trips are bit exact.
Json to_json(const LaurentVZ& p);
LaurentVZ laurent_vz_from_json(const Json& j);

Json to_json(const LaurentS& p);
LaurentS laurent_s_from_json(const Json& j);

Json to_json(const NPoly& p);
NPoly npoly_from_json(const Json& j);

Json to_json(const NSeries& s);
NSeries nseries_from_json(const Json& j);

Json to_json(const LMTable& t);
LMTable lmtable_from_json(const Json& j);

Json to_json(const OrientedDiagram& d);
OrientedDiagram diagram_from_json(const Json& j);

Json to_json(const BraidWord& w);
BraidWord braid_from_json(const Json& j);

Json to_json(const Tangle& t);
Tangle tangle_from_json(const Json& j);

Json to_json(const MutationScheme& s);
MutationScheme scheme_from_json(const Json& j);

Json to_json(const ComparisonReport& r);

}  // namespace skein
