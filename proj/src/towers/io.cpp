#include "telescoped/towers/io.hpp"

#include "telescoped/exactalg/io.hpp"
#include "telescoped/torsionfree/io.hpp"

namespace telescoped {

using jsonio::json;

json to_json(const AbTower& t)
{
    json prefix = json::array();
    for (const auto& f : t.prefix_maps())
        prefix.push_back(json{{"group", to_json(f.target())}, {"map", jsonio::from_matrix(f.matrix())}});
    const Tail& tl = t.tail();
    json tail{{"kind", to_string(tl.kind)}};
    switch (tl.kind) {
    case TailKind::Periodic: {
        if (tl.group.is_free())
            tail["d"] = tl.group.free_rank();
        else
            tail["group"] = to_json(tl.group);
        json ms = json::array();
        for (const auto& m : tl.matrices) ms.push_back(jsonio::from_matrix(m));
        tail["matrices"] = ms;
        break;
    }
    case TailKind::Constant:
        tail["group"] = to_json(tl.group);
        tail["map"] = jsonio::from_matrix(tl.matrices.front());
        break;
    case TailKind::Sweep:
        tail["d"] = tl.group.free_rank();
        tail["factor"] = jsonio::from_bigint(tl.sweep.factor);
        tail["exponent"] = tl.sweep.exponent;
        tail["first_prime"] = jsonio::from_bigint(tl.sweep.first_prime);
        break;
    default: tail["group"] = to_json(tl.group); break;
    }
    return json{{"prefix", prefix}, {"tail", tail}};
}

namespace {

std::size_t natural(const json& j, const std::string& path)
{
    const long long v = jsonio::to_int(j, path);
    if (v < 0) jsonio::fail(path, "expected a natural number");
    return static_cast<std::size_t>(v);
}

Tail tail_from_json(const json& j, const std::string& path)
{
    const json& kind_j = jsonio::member(j, "kind", path);
    if (!kind_j.is_string()) jsonio::fail(path + "/kind", "expected a string");
    const std::string kind = kind_j.get<std::string>();
    auto square = [&](const json& m, const std::string& p, Eigen::Index d) {
        IntMatrix a = jsonio::to_matrix(m, p, d);
        if (a.rows() != d || a.cols() != d)
            jsonio::fail(p, "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
        return a;
    };
    if (kind == "periodic") {
        std::optional<FgAbGroup> g;
        if (const json* gj = jsonio::optional_member(j, "group", path)) g = group_from_json(*gj, path + "/group");
        const Eigen::Index d =
            g ? g->generator_count() : static_cast<Eigen::Index>(natural(jsonio::member(j, "d", path), path + "/d"));
        const json& ms = jsonio::array(jsonio::member(j, "matrices", path), path + "/matrices");
        if (ms.empty()) jsonio::fail(path + "/matrices", "periodic tail needs at least one matrix");
        std::vector<IntMatrix> block;
        for (std::size_t i = 0; i < ms.size(); ++i)
            block.push_back(square(ms[i], path + "/matrices/" + std::to_string(i), d));
        if (g) {
            try {
                return Tail::periodic(*g, std::move(block));
            } catch (const PreconditionError& e) {
                jsonio::fail(path + "/matrices", e.what());
            }
        }
        return Tail::periodic(std::move(block));
    }
    if (kind == "sweep") {
        SweepRule r;
        const std::size_t d = natural(jsonio::member(j, "d", path), path + "/d");
        if (const json* f = jsonio::optional_member(j, "factor", path)) r.factor = jsonio::to_bigint(*f, path + "/factor");
        r.exponent = static_cast<unsigned>(natural(jsonio::member(j, "exponent", path), path + "/exponent"));
        if (const json* f = jsonio::optional_member(j, "first_prime", path))
            r.first_prime = jsonio::to_bigint(*f, path + "/first_prime");
        return Tail::sweeping(d, r);
    }
    const FgAbGroup g = group_from_json(jsonio::member(j, "group", path), path + "/group");
    if (kind == "constant")
        return Tail::constant(g, square(jsonio::member(j, "map", path), path + "/map", g.generator_count()));
    if (kind == "identity") return Tail::identity(g);
    if (kind == "none") return Tail::none(g);
    jsonio::fail(path + "/kind", "unknown tail kind \"" + kind + "\"");
}

}  // namespace

AbTower tower_from_json(const json& j, const std::string& path)
{
    if (const json* m = jsonio::optional_member(j, "multipliers", path)) {
        std::size_t d = 1;
        if (const json* dj = jsonio::optional_member(j, "d", path)) d = natural(*dj, path + "/d");
        return AbTower::scalar(d, multipliers_from_json(*m, path + "/multipliers"));
    }
    Tail tail = tail_from_json(jsonio::member(j, "tail", path), path + "/tail");
    std::vector<FgAbGroup> groups;
    std::vector<IntMatrix> maps;
    if (const json* p = jsonio::optional_member(j, "prefix", path)) {
        jsonio::array(*p, path + "/prefix");
        for (std::size_t i = 0; i < p->size(); ++i) {
            const std::string ip = path + "/prefix/" + std::to_string(i);
            groups.push_back(group_from_json(jsonio::member((*p)[i], "group", ip), ip + "/group"));
            maps.push_back(jsonio::to_matrix(jsonio::member((*p)[i], "map", ip), ip + "/map"));
        }
    }
    std::vector<AbHom> homs;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const FgAbGroup& src = i + 1 < groups.size() ? groups[i + 1] : tail.group;
        const std::string mp = path + "/prefix/" + std::to_string(i) + "/map";
        if (maps[i].rows() != groups[i].generator_count() || maps[i].cols() != src.generator_count()) {
            if (!(maps[i].rows() == 0 && groups[i].generator_count() == 0))
                jsonio::fail(mp, "map shape does not match the stage groups");
            maps[i] = IntMatrix(0, src.generator_count());
        }
        try {
            homs.emplace_back(src, groups[i], maps[i]);
        } catch (const PreconditionError& e) {
            jsonio::fail(mp, e.what());
        }
    }
    return AbTower(std::move(homs), std::move(tail));
}

json to_json(const ElementSequence& s)
{
    auto list = [](const std::vector<IntVector>& v) {
        json out = json::array();
        for (const auto& x : v) out.push_back(jsonio::from_vector(x));
        return out;
    };
    if (s.is_eventually_zero()) return json{{"eventually_zero", list(s.prefix)}};
    return json{{"eventually_periodic", json{{"prefix", list(s.prefix)}, {"block", list(s.block)}}}};
}

ElementSequence sequence_from_json(const json& j, const std::string& path)
{
    auto list = [](const json& a, const std::string& p) {
        jsonio::array(a, p);
        std::vector<IntVector> out;
        for (std::size_t i = 0; i < a.size(); ++i) out.push_back(jsonio::to_vector(a[i], p + "/" + std::to_string(i)));
        return out;
    };
    if (const json* z = jsonio::optional_member(j, "eventually_zero", path))
        return ElementSequence::eventually_zero(list(*z, path + "/eventually_zero"));
    if (const json* p = jsonio::optional_member(j, "eventually_periodic", path)) {
        const std::string pp = path + "/eventually_periodic";
        std::vector<IntVector> prefix;
        if (const json* pre = jsonio::optional_member(*p, "prefix", pp)) prefix = list(*pre, pp + "/prefix");
        auto block = list(jsonio::member(*p, "block", pp), pp + "/block");
        if (block.empty()) jsonio::fail(pp + "/block", "periodic block must be nonempty");
        return ElementSequence::eventually_periodic(std::move(prefix), std::move(block));
    }
    jsonio::fail(path, "expected \"eventually_zero\" or \"eventually_periodic\"");
}

json to_json(const LimResult& r)
{
    const TailAnalysis& a = r.certificate;
    json cert{{"tail_stage", a.stage},
              {"period", a.period},
              {"rank_stabilization", a.rank_stabilization},
              {"torsion_stabilization", a.torsion_stabilization},
              {"eventual_rank", a.eventual_rank},
              {"period_index", jsonio::from_bigint(a.period_index)}};
    json cp = json::array(), up = json::array();
    for (const auto& c : a.characteristic) cp.push_back(jsonio::from_bigint(c));
    for (const auto& c : a.unit_part) up.push_back(jsonio::from_bigint(c));
    cert["characteristic"] = cp;
    cert["unit_part"] = up;
    cert["vanishing_sweep"] = a.vanishing_sweep;
    return json{{"group", to_json(r.group)},
                {"embedding", jsonio::from_matrix(r.embedding.matrix())},
                {"stage", r.stage},
                {"stage_generators", jsonio::from_matrix(r.threads.generators())},
                {"certificate", cert}};
}

json to_json(const MittagLefflerCertificate& c)
{
    return json{{"status", to_string(c.status)},
                {"stabilization_index", c.stabilization_index},
                {"step_index", jsonio::from_bigint(c.step_index)},
                {"eventual_rank", c.eventual_rank},
                {"lim_rank", c.lim_rank},
                {"depth", c.depth},
                {"detail", c.detail}};
}

json to_json(const Lim1Descriptor& d)
{
    json out{{"status", to_json(d.status)}};
    out["rank1_type"] = d.rank1_type ? to_json(*d.rank1_type) : json(nullptr);
    out["notes"] = d.notes;
    return out;
}

json to_json(const CoboundaryVerdict& v)
{
    json out{{"verdict", to_string(v.verdict)}, {"depth", v.depth}, {"certificate", v.certificate}};
    out["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
    if (v.value) {
        out["value"] = v.value->str();
        out["coordinate"] = v.coordinate;
        out["offset"] = v.offset;
    } else {
        out["value"] = nullptr;
    }
    return out;
}

}  // namespace telescoped
