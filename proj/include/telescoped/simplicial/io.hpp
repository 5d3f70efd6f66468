#pragma once

// {"vertices":[0,1,2],"facets":[[0,1],[1,2]]}
// {"vertex_map":{"0":3,"1":4}}, optionally with inline "source"/"target".

#include "telescoped/json_util.hpp"
#include "telescoped/simplicial/complex.hpp"

namespace telescoped {

jsonio::json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const jsonio::json& j, const std::string& path = "");

jsonio::json to_json(const SimplicialMap& f, bool include_complexes = false);
/// Uses "source"/"target" members when present, else the given complexes.
SimplicialMap map_from_json(const jsonio::json& j, const SimplicialComplex* source = nullptr,
                            const SimplicialComplex* target = nullptr, const std::string& path = "");

}  // namespace telescoped
