#include "telescoped/telescope/io.hpp"

#include "telescoped/exactalg/io.hpp"
#include "telescoped/simplicial/io.hpp"
#include "telescoped/torsionfree/io.hpp"
#include "telescoped/towers/io.hpp"

#include <filesystem>

namespace telescoped {

using jsonio::json;

namespace {

json degrees_json(const MultiplierSequence& k)
{
    json prefix = json::array();
    for (const auto& v : k.prefix) prefix.push_back(jsonio::from_bigint(v));
    json tail;
    if (k.sweep) {
        tail = json{{"kind", "sweep"},
                    {"factor", jsonio::from_bigint(k.sweep->factor)},
                    {"exponent", k.sweep->exponent},
                    {"first_prime", jsonio::from_bigint(k.sweep->first_prime)}};
    } else {
        json block = json::array();
        for (const auto& v : k.block) block.push_back(jsonio::from_bigint(v));
        tail = json{{"kind", "periodic"}, {"block", block}};
    }
    return json{{"prefix", prefix}, {"tail", tail}};
}

MultiplierSequence degrees_from_json(const json& j, const std::string& path)
{
    MultiplierSequence k;
    auto ints = [](const json& a, const std::string& p) {
        std::vector<BigInt> out;
        jsonio::array(a, p);
        for (std::size_t i = 0; i < a.size(); ++i) out.push_back(jsonio::to_bigint(a[i], p + "/" + std::to_string(i)));
        return out;
    };
    if (const json* p = jsonio::optional_member(j, "prefix", path)) k.prefix = ints(*p, path + "/prefix");
    const std::string tp = path + "/tail";
    const json& tail = jsonio::member(j, "tail", path);
    const json& kind = jsonio::member(tail, "kind", tp);
    if (kind == "periodic") {
        k.block = ints(jsonio::member(tail, "block", tp), tp + "/block");
        if (k.block.empty()) jsonio::fail(tp + "/block", "empty periodic block");
    } else if (kind == "sweep") {
        SweepRule r;
        r.factor = jsonio::to_bigint(jsonio::member(tail, "factor", tp), tp + "/factor");
        const long long e = jsonio::to_int(jsonio::member(tail, "exponent", tp), tp + "/exponent");
        if (e < 0) jsonio::fail(tp + "/exponent", "exponent must be a natural number");
        r.exponent = static_cast<unsigned>(e);
        if (const json* f = jsonio::optional_member(tail, "first_prime", tp))
            r.first_prime = jsonio::to_bigint(*f, tp + "/first_prime");
        k.sweep = r;
    } else {
        jsonio::fail(tp + "/kind", "degree tail kind must be \"periodic\" or \"sweep\"");
    }
    return k;
}

json matrices_json(const MatrixSequence& m)
{
    json prefix = json::array(), block = json::array();
    for (const auto& a : m.prefix) prefix.push_back(jsonio::from_matrix(a));
    for (const auto& a : m.block) block.push_back(jsonio::from_matrix(a));
    return json{{"prefix", prefix}, {"tail", json{{"kind", "periodic"}, {"block", block}}}};
}

MatrixSequence matrices_from_json(const json& j, const std::string& path)
{
    MatrixSequence m;
    auto mats = [](const json& a, const std::string& p) {
        std::vector<IntMatrix> out;
        jsonio::array(a, p);
        for (std::size_t i = 0; i < a.size(); ++i) out.push_back(jsonio::to_matrix(a[i], p + "/" + std::to_string(i)));
        return out;
    };
    if (const json* p = jsonio::optional_member(j, "prefix", path)) m.prefix = mats(*p, path + "/prefix");
    const std::string tp = path + "/tail";
    const json& tail = jsonio::member(j, "tail", path);
    if (jsonio::member(tail, "kind", tp) != "periodic") jsonio::fail(tp + "/kind", "matrix tail kind must be \"periodic\"");
    m.block = mats(jsonio::member(tail, "block", tp), tp + "/block");
    if (m.block.empty()) jsonio::fail(tp + "/block", "empty periodic block");
    return m;
}

// An inline object, or {"file": name} relative to base_dir.
json resolve(const json& j, const std::string& base_dir, const std::string& path)
{
    const json* f = j.is_object() ? jsonio::optional_member(j, "file", path) : nullptr;
    if (!f) return j;
    if (!f->is_string()) jsonio::fail(path + "/file", "expected a file name");
    std::filesystem::path p(f->get<std::string>());
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    return jsonio::load_file(p.string());
}

template <class F>
auto with_path(const std::string& path, F&& build)
{
    try {
        return build();
    } catch (const ParseError&) {
        throw;
    } catch (const PreconditionError& e) {
        jsonio::fail(path, e.what());
    }
}

}  // namespace

json to_json(const TelescopeSpec& tel)
{
    switch (tel.kind()) {
    case TelescopeKind::Sphere:
        return json{{"kind", "sphere"}, {"d", tel.dimension()}, {"degrees", degrees_json(tel.degrees())}};
    case TelescopeKind::Torus:
        return json{{"kind", "torus"}, {"d", tel.dimension()}, {"matrices", matrices_json(tel.matrices())}};
    case TelescopeKind::Simplicial: {
        json stages = json::array(), maps = json::array();
        for (std::size_t i = 0; i < tel.maps().size(); ++i) {
            stages.push_back(to_json(tel.maps()[i].source()));
            maps.push_back(to_json(tel.maps()[i]));
        }
        stages.push_back(to_json(tel.maps().back().target()));
        return json{{"kind", "simplicial"}, {"stages", stages}, {"maps", maps}, {"tail_period", tel.tail_period()}};
    }
    }
    return json();
}

TelescopeSpec telescope_from_json(const json& j, const std::string& path, const std::string& base_dir)
{
    const json& kind = jsonio::member(j, "kind", path);
    auto dim = [&] {
        const long long d = jsonio::to_int(jsonio::member(j, "d", path), path + "/d");
        if (d < 1 || d > 64) jsonio::fail(path + "/d", "dimension must lie in 1..64");
        return static_cast<int>(d);
    };
    if (kind == "sphere") {
        const int d = dim();
        MultiplierSequence k = degrees_from_json(jsonio::member(j, "degrees", path), path + "/degrees");
        return with_path(path, [&] { return TelescopeSpec::sphere(d, std::move(k)); });
    }
    if (kind == "torus") {
        const int d = dim();
        MatrixSequence m = matrices_from_json(jsonio::member(j, "matrices", path), path + "/matrices");
        return with_path(path + "/matrices", [&] { return TelescopeSpec::torus(d, std::move(m)); });
    }
    if (kind == "simplicial") {
        const json& st = jsonio::array(jsonio::member(j, "stages", path), path + "/stages");
        const json& mp = jsonio::array(jsonio::member(j, "maps", path), path + "/maps");
        if (mp.empty()) jsonio::fail(path + "/maps", "at least one map is required");
        if (st.size() != mp.size() + 1) jsonio::fail(path + "/stages", "expected one more stage than maps");
        std::vector<SimplicialComplex> stages;
        for (std::size_t i = 0; i < st.size(); ++i) {
            const std::string sp = path + "/stages/" + std::to_string(i);
            stages.push_back(complex_from_json(resolve(st[i], base_dir, sp), sp));
        }
        std::vector<SimplicialMap> maps;
        for (std::size_t i = 0; i < mp.size(); ++i) {
            const std::string fp = path + "/maps/" + std::to_string(i);
            maps.push_back(map_from_json(resolve(mp[i], base_dir, fp), &stages[i], &stages[i + 1], fp));
        }
        std::size_t period = 0;
        if (const json* t = jsonio::optional_member(j, "tail_period", path)) {
            const long long v = jsonio::to_int(*t, path + "/tail_period");
            if (v < 0) jsonio::fail(path + "/tail_period", "tail period must be a natural number");
            period = static_cast<std::size_t>(v);
        }
        return with_path(path, [&] { return TelescopeSpec::simplicial(std::move(maps), period); });
    }
    jsonio::fail(path + "/kind", "telescope kind must be \"sphere\", \"torus\" or \"simplicial\"");
}

TelescopeSpec load_telescope(const std::string& file)
{
    const json j = jsonio::load_file(file);
    return telescope_from_json(j, "", std::filesystem::path(file).parent_path().string());
}

json to_json(const MilnorReport& m)
{
    json out{{"degree", m.degree}, {"asymptotic", to_json(m.asymptotic)}};
    out["weak"] = m.weak ? to_json(*m.weak) : json(nullptr);
    out["total"] = m.total;
    out["total_group"] = m.total_group ? to_json(*m.total_group) : json(nullptr);
    if (m.closed_form) {
        const ClosedForm& c = *m.closed_form;
        out["closed_form"] = json{{"lambda", to_json(c.lambda)},
                                  {"hom_degree", c.hom_degree},
                                  {"ext_degree", c.ext_degree},
                                  {"hom", to_json(c.hom)},
                                  {"ext", to_json(c.ext)},
                                  {"agrees", c.agrees}};
    } else {
        out["closed_form"] = nullptr;
    }
    return out;
}

json to_json(const HopfReport& h)
{
    return json{{"d", h.d},
                {"bracket", to_json(h.bracket)},
                {"vanishing_checked", json{{"from", h.checked_from}, {"to", h.checked_to}}},
                {"all_phantom", h.all_phantom},
                {"description", h.description}};
}

json to_json(const ClassificationVerdict& v)
{
    json out{{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
    if (v.evidence) {
        const ClassificationEvidence& e = *v.evidence;
        out["evidence"] = json{{"type_a", to_json(e.type_a)},       {"type_b", to_json(e.type_b)},
                               {"class_a", to_json(e.class_a)},     {"class_b", to_json(e.class_b)},
                               {"hom_a", to_json(e.hom_a)},         {"hom_b", to_json(e.hom_b)},
                               {"ext_trivial_a", e.ext_trivial_a}, {"ext_trivial_b", e.ext_trivial_b}};
    } else {
        out["evidence"] = nullptr;
    }
    return out;
}

json to_json(const BorsukEilenbergReport& r)
{
    return json{{"p", jsonio::from_bigint(r.p)},
                {"model", to_json(r.model)},
                {"milnor_q1", to_json(r.milnor_q1)},
                {"milnor_q2", to_json(r.milnor_q2)},
                {"ext", to_json(r.ext)},
                {"all_ones_cocycle", to_json(r.all_ones)},
                {"phantom_only", r.phantom_only},
                {"not_smooth", !r.ext.is_smooth_classification},
                {"essentially_hyperfinite", r.ext.is_essentially_hyperfinite}};
}

}  // namespace telescoped
