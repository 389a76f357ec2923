// JSON encodings of the public value types.  Rationals are strings
// ("num/den", plain "num" for integers); vectors are arrays of those.

#pragma once

#include "latdim/bounds.hpp"
#include "latdim/flats.hpp"
#include "latdim/pairs.hpp"
#include "latdim/patterns.hpp"

#include <json.hpp>

namespace latdim {

using Json = nlohmann::json;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

Json to_json(const EigenPattern& p);
EigenPattern pattern_from_json(const Json& j);

Json to_json(const CentralizerShape& s);
Json to_json(const GapReport& r);
Json to_json(const PairReport& r);

Json to_json(const FixedSetSpec& f);
FixedSetSpec fixed_set_from_json(const Json& j, FixMode mode);

Json to_json(const FlatSpec& f);
Json to_json(const IntersectionCertificate& c);

} // namespace latdim
