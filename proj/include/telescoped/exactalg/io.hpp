#pragma once

// {"free_rank":1,"invariant_factors":[2,4]}

#include "telescoped/exactalg/abelian_group.hpp"
#include "telescoped/json_util.hpp"

namespace telescoped {

jsonio::json to_json(const FgAbGroup& g);
/// Accepts the canonical form; non-canonical factor lists are rejected.
FgAbGroup group_from_json(const jsonio::json& j, const std::string& path = "");

jsonio::json to_json(const AbHom& f);

}  // namespace telescoped
