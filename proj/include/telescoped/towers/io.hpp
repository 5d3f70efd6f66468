#pragma once

// Towers:
//   {"prefix":[{"group":G_n,"map":[[...]]},...],
//    "tail":{"kind":"periodic","d":1,"matrices":[[[2]]]}}
// Other tails: {"kind":"constant","group":G,"map":M}, {"kind":"identity","group":G},
// {"kind":"sweep","d":1,"factor":1,"exponent":1,"first_prime":2}, {"kind":"none","group":G}.
// Shorthand for (Z^d, x k_n): {"multipliers":{"prefix":[6],"block":[1]},"d":1}.
//
// Cocycles: {"eventually_zero":[[1],[0,2]]} or
//           {"eventually_periodic":{"prefix":[...],"block":[...]}}.

#include "telescoped/json_util.hpp"
#include "telescoped/towers/cocycle.hpp"

namespace telescoped {

jsonio::json to_json(const AbTower& t);
AbTower tower_from_json(const jsonio::json& j, const std::string& path = "");

jsonio::json to_json(const ElementSequence& s);
ElementSequence sequence_from_json(const jsonio::json& j, const std::string& path = "");

jsonio::json to_json(const LimResult& r);
jsonio::json to_json(const MittagLefflerCertificate& c);
jsonio::json to_json(const Lim1Descriptor& d);
jsonio::json to_json(const CoboundaryVerdict& v);

}  // namespace telescoped
