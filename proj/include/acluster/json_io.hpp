#pragma once

#include <json.hpp>

#include "acluster/laurent.hpp"

namespace acluster {

using Json = nlohmann::ordered_json;

// Records {x:[i,j,k], y:[..], c:int}, sorted lexicographically by (x, y).
// The round trip is bit-exact because both maps iterate in that order.
Json laurent_to_json(const ClusterLaurent& v);
ClusterLaurent laurent_from_json(const Json& j, Cluster ref);

Json trop_to_json(const TropElement& m);
TropElement trop_from_json(const Json& j);

Json ycoeff_to_json(const YCoeff& c);
YCoeff ycoeff_from_json(const Json& j);

}  // namespace acluster
