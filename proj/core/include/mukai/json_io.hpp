#pragma once

#include "mukai/reduction.hpp"
#include "mukai/walls.hpp"

#include <json.hpp>

namespace mukai {

// All JSON output goes through ordered_json so that identical inputs give
// byte-identical documents.
using Json = nlohmann::ordered_json;

Json to_json(const ClassVector& x);
ClassVector class_from_json(const Json& j);

Json to_json(const MukaiVector& v); // {"r":..,"c1":[..],"s":..}
MukaiVector mukai_from_json(const Json& j);

// {"twist":[..]} | "switch" | {"rebase":"alternate"} | {"rebase":"swap"}
// | {"rebase":{"matrix":[[..]x10]}}
Json to_json(const Move& m);
Move move_from_json(const Json& j);

Json to_json(const ReductionCertificate& c);
ReductionCertificate certificate_from_json(const Json& j);

Json to_json(const Wall& w);
Json to_json(const Polarization& p);

Json gram_to_json();

} // namespace mukai
