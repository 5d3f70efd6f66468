#pragma once

// {"kind":"sphere","d":1,"degrees":{"prefix":[6],"tail":{"kind":"periodic","block":[2]}}}
// {"kind":"torus","d":2,"matrices":{"prefix":[M,...],"tail":{"kind":"periodic","block":[M,...]}}}
// {"kind":"simplicial","stages":[K0,K1,...],"maps":[F0,...],"tail_period":1}
// A degree tail may also be {"kind":"sweep","factor":1,"exponent":1,"first_prime":2}.
// Simplicial stages and maps may be {"file":"name.json"}, resolved
// relative to base_dir.

#include "telescoped/json_util.hpp"
#include "telescoped/telescope/reports.hpp"

namespace telescoped {

jsonio::json to_json(const TelescopeSpec& tel);
TelescopeSpec telescope_from_json(const jsonio::json& j, const std::string& path = "",
                                  const std::string& base_dir = "");
/// Loads a telescope file; file references resolve next to it.
TelescopeSpec load_telescope(const std::string& file);

jsonio::json to_json(const MilnorReport& m);
jsonio::json to_json(const HopfReport& h);
jsonio::json to_json(const ClassificationVerdict& v);
jsonio::json to_json(const BorsukEilenbergReport& r);

}  // namespace telescoped
