#include "telescoped/exactalg/io.hpp"

namespace telescoped {

using jsonio::json;

json to_json(const FgAbGroup& g)
{
    json factors = json::array();
    for (const auto& d : g.invariant_factors()) factors.push_back(jsonio::from_bigint(d));
    return json{{"free_rank", g.free_rank()}, {"invariant_factors", factors}, {"text", g.to_string()}};
}

FgAbGroup group_from_json(const json& j, const std::string& path)
{
    const long long rank = jsonio::to_int(jsonio::member(j, "free_rank", path), path + "/free_rank");
    if (rank < 0) jsonio::fail(path + "/free_rank", "free rank must be nonnegative");
    std::vector<BigInt> factors;
    if (const json* f = jsonio::optional_member(j, "invariant_factors", path)) {
        jsonio::array(*f, path + "/invariant_factors");
        for (std::size_t i = 0; i < f->size(); ++i)
            factors.push_back(jsonio::to_bigint((*f)[i], path + "/invariant_factors/" + std::to_string(i)));
    }
    return FgAbGroup(static_cast<std::size_t>(rank), std::move(factors));
}

json to_json(const AbHom& f)
{
    return json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"matrix", jsonio::from_matrix(f.matrix())}};
}

}  // namespace telescoped
