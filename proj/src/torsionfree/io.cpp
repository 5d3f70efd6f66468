#include "telescoped/torsionfree/io.hpp"

#include "telescoped/towers/io.hpp"

namespace telescoped {

using jsonio::json;

json to_json(const PrimeExponentSeq& m)
{
    json ex = json::object();
    for (const auto& [p, e] : m.exceptional()) {
        if (e.is_infinite())
            ex[p.str()] = "inf";
        else
            ex[p.str()] = e.value();
    }
    return json{{"default", m.default_value()}, {"exceptional", ex}};
}

PrimeExponentSeq type_from_json(const json& j, const std::string& path)
{
    std::uint64_t def = 0;
    if (const json* d = jsonio::optional_member(j, "default", path)) {
        const long long v = jsonio::to_int(*d, path + "/default");
        if (v < 0) jsonio::fail(path + "/default", "default must be a natural number");
        def = static_cast<std::uint64_t>(v);
    }
    std::map<BigInt, Exponent> ex;
    if (const json* e = jsonio::optional_member(j, "exceptional", path)) {
        if (!e->is_object()) jsonio::fail(path + "/exceptional", "expected an object");
        for (const auto& [key, value] : e->items()) {
            const std::string kp = path + "/exceptional/" + key;
            const BigInt p = jsonio::to_bigint(json(key), kp);
            if (value.is_string()) {
                if (value.get<std::string>() != "inf") jsonio::fail(kp, "exponent must be a natural number or \"inf\"");
                ex[p] = Exponent::infinity();
            } else {
                const long long v = jsonio::to_int(value, kp);
                if (v < 0) jsonio::fail(kp, "exponent must be a natural number");
                ex[p] = Exponent(static_cast<std::uint64_t>(v));
            }
        }
    }
    try {
        return PrimeExponentSeq(std::move(ex), def);
    } catch (const PreconditionError& err) {
        jsonio::fail(path + "/exceptional", err.what());
    }
}

json to_json(const MultiplierSequence& k)
{
    json prefix = json::array();
    for (const auto& v : k.prefix) prefix.push_back(jsonio::from_bigint(v));
    json out{{"prefix", prefix}};
    if (k.sweep) {
        out["sweep"] = json{{"factor", jsonio::from_bigint(k.sweep->factor)},
                            {"exponent", k.sweep->exponent},
                            {"first_prime", jsonio::from_bigint(k.sweep->first_prime)}};
    } else {
        json block = json::array();
        for (const auto& v : k.block) block.push_back(jsonio::from_bigint(v));
        out["block"] = block;
    }
    return out;
}

MultiplierSequence multipliers_from_json(const json& j, const std::string& path)
{
    MultiplierSequence k;
    auto ints = [&](const json& a, const std::string& p) {
        std::vector<BigInt> out;
        jsonio::array(a, p);
        for (std::size_t i = 0; i < a.size(); ++i) out.push_back(jsonio::to_bigint(a[i], p + "/" + std::to_string(i)));
        return out;
    };
    if (const json* p = jsonio::optional_member(j, "prefix", path)) k.prefix = ints(*p, path + "/prefix");
    if (const json* s = jsonio::optional_member(j, "sweep", path)) {
        const std::string sp = path + "/sweep";
        SweepRule r;
        if (const json* f = jsonio::optional_member(*s, "factor", sp)) r.factor = jsonio::to_bigint(*f, sp + "/factor");
        const long long e = jsonio::to_int(jsonio::member(*s, "exponent", sp), sp + "/exponent");
        if (e < 0) jsonio::fail(sp + "/exponent", "exponent must be a natural number");
        r.exponent = static_cast<unsigned>(e);
        if (const json* f = jsonio::optional_member(*s, "first_prime", sp))
            r.first_prime = jsonio::to_bigint(*f, sp + "/first_prime");
        k.sweep = r;
    } else {
        k.block = ints(jsonio::member(j, "block", path), path + "/block");
        if (k.block.empty()) jsonio::fail(path + "/block", "periodic block must be nonempty");
    }
    return k;
}

json to_json(const HomogeneousGroup& g)
{
    return json{{"kind", "rank1"}, {"type", to_json(g.base.type)}, {"power", g.rank}, {"text", g.to_string()}};
}

HomogeneousGroup homogeneous_from_json(const json& j, const std::string& path)
{
    const json& kind = jsonio::member(j, "kind", path);
    if (!kind.is_string() || kind.get<std::string>() != "rank1")
        jsonio::fail(path + "/kind", "only \"rank1\" groups are supported");
    const PrimeExponentSeq m = type_from_json(jsonio::member(j, "type", path), path + "/type");
    std::size_t power = 1;
    if (const json* p = jsonio::optional_member(j, "power", path)) {
        const long long v = jsonio::to_int(*p, path + "/power");
        if (v < 1) jsonio::fail(path + "/power", "power must be at least 1");
        power = static_cast<std::size_t>(v);
    }
    return HomogeneousGroup(power, RankOneGroup{m});
}

json to_json(const ExtDescriptor& e)
{
    return json{{"source", to_json(e.source)},
                {"lim1", to_json(e.lim1)},
                {"is_trivial", e.is_trivial},
                {"is_smooth_classification", e.is_smooth_classification},
                {"is_essentially_hyperfinite", e.is_essentially_hyperfinite},
                {"borel_class_key", json{{"rank", e.borel_class_key.first}, {"type", to_json(e.borel_class_key.second)}}}};
}

}  // namespace telescoped
