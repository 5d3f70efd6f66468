#pragma once

// Types: {"default":0,"exceptional":{"2":"inf","3":4}}
// Groups: {"kind":"rank1","type":{...},"power":1}

#include "telescoped/json_util.hpp"
#include "telescoped/torsionfree/groups.hpp"
#include "telescoped/torsionfree/prime_exponents.hpp"

namespace telescoped {

jsonio::json to_json(const PrimeExponentSeq& m);
PrimeExponentSeq type_from_json(const jsonio::json& j, const std::string& path = "");

jsonio::json to_json(const MultiplierSequence& k);
/// {"prefix":[...],"block":[...]} or {"prefix":[...],"sweep":{"factor":1,"exponent":1,"first_prime":2}}
MultiplierSequence multipliers_from_json(const jsonio::json& j, const std::string& path = "");

jsonio::json to_json(const HomogeneousGroup& g);
HomogeneousGroup homogeneous_from_json(const jsonio::json& j, const std::string& path = "");

jsonio::json to_json(const ExtDescriptor& e);

}  // namespace telescoped
