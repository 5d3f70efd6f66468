#include "telescoped/simplicial/io.hpp"

namespace telescoped {

using jsonio::json;

json to_json(const SimplicialComplex& k)
{
    json facets = json::array();
    for (const auto& f : k.facets()) facets.push_back(f);
    return json{{"vertices", k.vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j, const std::string& path)
{
    const json& vs = jsonio::array(jsonio::member(j, "vertices", path), path + "/vertices");
    const json& fs = jsonio::array(jsonio::member(j, "facets", path), path + "/facets");
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        vertices.push_back(jsonio::to_int(vs[i], path + "/vertices/" + std::to_string(i)));
    std::vector<Face> faces;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::string fp = path + "/facets/" + std::to_string(i);
        const json& f = jsonio::array(fs[i], fp);
        if (f.empty()) jsonio::fail(fp, "empty facet");
        Face face;
        for (std::size_t k = 0; k < f.size(); ++k) face.push_back(jsonio::to_int(f[k], fp + "/" + std::to_string(k)));
        faces.push_back(std::move(face));
    }
    return SimplicialComplex(std::move(vertices), std::move(faces));
}

json to_json(const SimplicialMap& f, bool include_complexes)
{
    json m = json::object();
    for (const auto& [v, w] : f.vertex_map()) m[std::to_string(v)] = w;
    json out = json::object();
    if (include_complexes) {
        out["source"] = to_json(f.source());
        out["target"] = to_json(f.target());
    }
    out["vertex_map"] = m;
    return out;
}

SimplicialMap map_from_json(const json& j, const SimplicialComplex* source, const SimplicialComplex* target,
                            const std::string& path)
{
    SimplicialComplex s, t;
    if (const json* sj = jsonio::optional_member(j, "source", path))
        s = complex_from_json(*sj, path + "/source");
    else if (source)
        s = *source;
    else
        jsonio::fail(path, "map has no source complex");
    if (const json* tj = jsonio::optional_member(j, "target", path))
        t = complex_from_json(*tj, path + "/target");
    else if (target)
        t = *target;
    else
        jsonio::fail(path, "map has no target complex");
    const json& mj = jsonio::member(j, "vertex_map", path);
    if (!mj.is_object()) jsonio::fail(path + "/vertex_map", "expected an object");
    std::map<Vertex, Vertex> m;
    for (const auto& [key, value] : mj.items()) {
        const std::string kp = path + "/vertex_map/" + key;
        Vertex v = 0;
        try {
            std::size_t used = 0;
            v = std::stoll(key, &used);
            if (used != key.size()) jsonio::fail(kp, "vertex key is not an integer");
        } catch (const std::logic_error&) {
            jsonio::fail(kp, "vertex key is not an integer");
        }
        m[v] = jsonio::to_int(value, kp);
    }
    return SimplicialMap(std::move(s), std::move(t), std::move(m));
}

}  // namespace telescoped
