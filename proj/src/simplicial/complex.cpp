#include "telescoped/simplicial/complex.hpp"

#include "telescoped/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace telescoped {

namespace {

Face normalized(Face f)
{
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

bool is_subset(const Face& a, const Face& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Keep only inclusion-maximal faces, sorted lexicographically.
std::vector<Face> maximal_faces(std::vector<Face> faces)
{
    for (auto& f : faces) f = normalized(std::move(f));
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    // Larger faces first so that containment checks only look backwards.
    std::vector<std::size_t> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return faces[a].size() > faces[b].size(); });
    std::vector<Face> kept;
    for (std::size_t i : order) {
        const Face& f = faces[i];
        if (f.empty()) continue;
        bool covered = false;
        for (const auto& g : kept)
            if (g.size() > f.size() && is_subset(f, g)) {
                covered = true;
                break;
            }
        if (!covered) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void subsets_of_size(const Face& f, std::size_t k, std::set<Face>& out)
{
    if (k > f.size()) return;
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        Face s;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (pick[i]) s.push_back(f[i]);
        out.insert(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<Cache>()) {}

SimplicialComplex::SimplicialComplex(std::vector<Vertex> vertices, std::vector<Face> faces)
    : cache_(std::make_shared<Cache>())
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (const auto& f : faces)
        for (Vertex v : f)
            if (!std::binary_search(vertices.begin(), vertices.end(), v))
                throw PreconditionError("facet vertices are listed vertices",
                                        "vertex " + std::to_string(v) + " of face " + to_string(normalized(f)) +
                                            " is not in the vertex list");
    std::set<Vertex> used;
    for (const auto& f : faces) used.insert(f.begin(), f.end());
    for (Vertex v : vertices)
        if (!used.count(v)) faces.push_back({v});
    vertices_ = std::move(vertices);
    facets_ = maximal_faces(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces)
{
    std::vector<Vertex> vs;
    for (const auto& f : faces) vs.insert(vs.end(), f.begin(), f.end());
    return SimplicialComplex(std::move(vs), std::move(faces));
}

int SimplicialComplex::dimension() const
{
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

const std::vector<Face>& SimplicialComplex::faces(int n) const
{
    static const std::vector<Face> none;
    if (n < 0 || n > dimension()) return none;
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& by_dim = cache_->by_dim;
    if (by_dim.size() <= static_cast<std::size_t>(n)) {
        by_dim.resize(static_cast<std::size_t>(n) + 1);
        cache_->index.resize(static_cast<std::size_t>(n) + 1);
    }
    auto& slot = by_dim[static_cast<std::size_t>(n)];
    if (!slot) {
        std::set<Face> all;
        for (const auto& f : facets_) subsets_of_size(f, static_cast<std::size_t>(n) + 1, all);
        auto list = std::make_unique<std::vector<Face>>(all.begin(), all.end());
        auto idx = std::make_unique<std::map<Face, std::size_t>>();
        for (std::size_t i = 0; i < list->size(); ++i) idx->emplace((*list)[i], i);
        cache_->index[static_cast<std::size_t>(n)] = std::move(idx);
        slot = std::move(list);
    }
    return *slot;
}

std::optional<std::size_t> SimplicialComplex::face_index(const Face& face) const
{
    const int n = static_cast<int>(face.size()) - 1;
    if (n < 0 || n > dimension()) return std::nullopt;
    faces(n);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    const auto& idx = *cache_->index[static_cast<std::size_t>(n)];
    auto it = idx.find(face);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

bool SimplicialComplex::contains_face(const Face& face) const
{
    if (face.empty()) return true;
    Face f = normalized(face);
    for (const auto& g : facets_)
        if (g.size() >= f.size() && is_subset(f, g)) return true;
    return false;
}

bool SimplicialComplex::contains_vertex(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const
{
    for (const auto& f : facets_)
        if (!other.contains_face(f)) return false;
    return true;
}

std::vector<Face> SimplicialComplex::all_faces() const
{
    std::vector<Face> out;
    for (int n = 0; n <= dimension(); ++n) {
        const auto& fs = faces(n);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

long long SimplicialComplex::euler_characteristic() const
{
    long long chi = 0;
    for (int n = 0; n <= dimension(); ++n) chi += (n % 2 ? -1 : 1) * static_cast<long long>(face_count(n));
    return chi;
}

SimplicialPair::SimplicialPair(SimplicialComplex k, SimplicialComplex l) : complex(std::move(k)), sub(std::move(l))
{
    for (const auto& f : sub.facets())
        if (!complex.contains_face(f))
            throw PreconditionError("subcomplex", "face " + to_string(f) + " of the subcomplex is not a face of the complex");
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::map<Vertex, Vertex> vertex_map)
    : source_(std::move(source)), target_(std::move(target))
{
    for (Vertex v : source_.vertices()) {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end())
            throw PreconditionError("vertex map is total", "source vertex " + std::to_string(v) + " is not mapped");
        if (!target_.contains_vertex(it->second))
            throw PreconditionError("vertex map lands in the target",
                                    "image " + std::to_string(it->second) + " is not a target vertex");
        map_.emplace(v, it->second);
    }
    for (const auto& f : source_.facets())
        if (!target_.contains_face(image(f)))
            throw PreconditionError("simplicial map sends faces to faces",
                                    "face " + to_string(f) + " maps to non-face " + to_string(image(f)));
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k)
{
    std::map<Vertex, Vertex> m;
    for (Vertex v : k.vertices()) m[v] = v;
    return SimplicialMap(k, k, std::move(m));
}

SimplicialMap SimplicialMap::constant(const SimplicialComplex& source, const SimplicialComplex& target, Vertex v)
{
    std::map<Vertex, Vertex> m;
    for (Vertex s : source.vertices()) m[s] = v;
    return SimplicialMap(source, target, std::move(m));
}

Face SimplicialMap::image(const Face& face) const
{
    Face out;
    out.reserve(face.size());
    for (Vertex v : face) out.push_back(map_.at(v));
    return normalized(std::move(out));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (f.target() != g.source()) throw DimensionError("composition of simplicial maps with mismatched complexes");
    std::map<Vertex, Vertex> m;
    for (const auto& [v, w] : f.vertex_map()) m[v] = g(w);
    return SimplicialMap(f.source(), g.target(), std::move(m));
}

bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g)
{
    if (f.source() != g.source() || f.target() != g.target())
        throw DimensionError("contiguity of maps with different source or target");
    for (const auto& s : f.source().facets()) {
        Face u = f.image(s);
        Face w = g.image(s);
        u.insert(u.end(), w.begin(), w.end());
        if (!f.target().contains_face(normalized(u))) return false;
    }
    return true;
}

SimplicialMap relabel(const SimplicialComplex& k, const std::map<Vertex, Vertex>& bijection)
{
    std::set<Vertex> images;
    std::map<Vertex, Vertex> m;
    for (Vertex v : k.vertices()) {
        auto it = bijection.find(v);
        if (it == bijection.end())
            throw PreconditionError("relabelling is total", "vertex " + std::to_string(v) + " is not relabelled");
        if (!images.insert(it->second).second)
            throw PreconditionError("relabelling is injective", "label " + std::to_string(it->second) + " repeats");
        m[v] = it->second;
    }
    std::vector<Vertex> vs(images.begin(), images.end());
    std::vector<Face> fs;
    for (const auto& f : k.facets()) {
        Face g;
        for (Vertex v : f) g.push_back(m.at(v));
        fs.push_back(std::move(g));
    }
    return SimplicialMap(k, SimplicialComplex(std::move(vs), std::move(fs)), std::move(m));
}

Subdivision barycentric_subdivision(const SimplicialComplex& k)
{
    std::vector<Face> all = k.all_faces();
    std::map<Face, Vertex> label;
    for (std::size_t i = 0; i < all.size(); ++i) label[all[i]] = static_cast<Vertex>(i);
    std::vector<Face> facets;
    for (const auto& f : k.facets()) {
        Face perm = f;  // sorted, so permutations enumerate every flag once
        do {
            Face chain;
            Face prefix;
            for (Vertex v : perm) {
                prefix.push_back(v);
                Face sorted = normalized(prefix);
                chain.push_back(label.at(sorted));
            }
            facets.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<Vertex> vs(all.size());
    std::iota(vs.begin(), vs.end(), Vertex(0));
    SimplicialComplex sd(vs, std::move(facets));
    std::map<Vertex, Vertex> sel;
    for (std::size_t i = 0; i < all.size(); ++i) sel[static_cast<Vertex>(i)] = all[i].front();
    return Subdivision{sd, SimplicialMap(sd, k, std::move(sel)), std::move(all)};
}

CoverData star_cover(const SimplicialComplex& k)
{
    CoverData c{k, {}};
    for (Vertex v : k.vertices()) c.pieces.push_back({v, {v}});
    return c;
}

SimplicialComplex nerve(const CoverData& cover)
{
    if (cover.pieces.empty()) throw PreconditionError("nonempty cover", "the cover has no pieces");
    std::set<Vertex> labels, covered;
    for (const auto& p : cover.pieces) {
        if (!labels.insert(p.label).second)
            throw PreconditionError("cover labels are distinct", "label " + std::to_string(p.label) + " repeats");
        for (Vertex v : p.vertices) {
            if (!cover.base.contains_vertex(v))
                throw PreconditionError("cover pieces lie in the base",
                                        "vertex " + std::to_string(v) + " is not a base vertex");
            covered.insert(v);
        }
    }
    for (Vertex v : cover.base.vertices())
        if (!covered.count(v))
            throw PreconditionError("cover pieces cover the base", "vertex " + std::to_string(v) + " is uncovered");
    // Pieces are unions of open stars; they meet at a point of the open
    // simplex of F iff each of them contains a vertex of F.
    std::vector<Face> faces;
    for (const auto& f : cover.base.facets()) {
        Face j;
        for (const auto& p : cover.pieces)
            for (Vertex v : p.vertices)
                if (std::binary_search(f.begin(), f.end(), v)) {
                    j.push_back(p.label);
                    break;
                }
        faces.push_back(std::move(j));
    }
    return SimplicialComplex(std::vector<Vertex>(labels.begin(), labels.end()), std::move(faces));
}

namespace {

// Staircase simplices of one cylinder, appended to `out`.
void cylinder_faces(const SimplicialMap& f, Vertex top_offset, Vertex bottom_offset, std::vector<Face>& out)
{
    const auto& sv = f.source().vertices();
    const auto& tv = f.target().vertices();
    auto top = [&](Vertex v) {
        return top_offset + static_cast<Vertex>(std::lower_bound(sv.begin(), sv.end(), v) - sv.begin());
    };
    auto bottom = [&](Vertex v) {
        return bottom_offset + static_cast<Vertex>(std::lower_bound(tv.begin(), tv.end(), v) - tv.begin());
    };
    for (const auto& s : f.source().facets()) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            Face face;
            for (std::size_t j = 0; j <= i; ++j) face.push_back(top(s[j]));
            for (std::size_t j = i; j < s.size(); ++j) face.push_back(bottom(f(s[j])));
            out.push_back(std::move(face));
        }
    }
    for (const auto& t : f.target().facets()) {
        Face face;
        for (Vertex v : t) face.push_back(bottom(v));
        out.push_back(std::move(face));
    }
}

SimplicialMap stage_inclusion(const SimplicialComplex& stage, const SimplicialComplex& total, Vertex offset)
{
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < stage.vertices().size(); ++i)
        m[stage.vertices()[i]] = offset + static_cast<Vertex>(i);
    return SimplicialMap(stage, total, std::move(m));
}

}  // namespace

TelescopeComplex mapping_telescope(const std::vector<SimplicialMap>& maps)
{
    if (maps.empty()) throw PreconditionError("telescope has at least one stage map", "no maps given");
    for (std::size_t n = 0; n + 1 < maps.size(); ++n)
        if (maps[n].target() != maps[n + 1].source())
            throw PreconditionError("telescope maps chain", "target of map " + std::to_string(n) +
                                                                 " differs from the source of map " +
                                                                 std::to_string(n + 1));
    std::vector<SimplicialComplex> stages;
    for (const auto& f : maps) stages.push_back(f.source());
    stages.push_back(maps.back().target());
    std::vector<Vertex> offsets{0};
    for (const auto& s : stages) offsets.push_back(offsets.back() + static_cast<Vertex>(s.vertices().size()));
    std::vector<Face> faces;
    for (std::size_t n = 0; n < maps.size(); ++n) cylinder_faces(maps[n], offsets[n], offsets[n + 1], faces);
    std::vector<Vertex> vs(static_cast<std::size_t>(offsets.back()));
    std::iota(vs.begin(), vs.end(), Vertex(0));
    TelescopeComplex out{SimplicialComplex(std::move(vs), std::move(faces)), {}};
    for (std::size_t n = 0; n < stages.size(); ++n)
        out.stage_inclusions.push_back(stage_inclusion(stages[n], out.complex, offsets[n]));
    return out;
}

Cylinder mapping_cylinder(const SimplicialMap& f)
{
    auto tel = mapping_telescope({f});
    return Cylinder{tel.complex, tel.stage_inclusions[0], tel.stage_inclusions[1]};
}

SimplicialComplex suspension(const SimplicialComplex& k)
{
    const Vertex top = k.empty() ? 0 : k.vertices().back() + 1;
    std::vector<Vertex> vs = k.vertices();
    vs.push_back(top);
    vs.push_back(top + 1);
    std::vector<Face> fs;
    for (const auto& f : k.facets())
        for (Vertex cone : {top, top + 1}) {
            Face g = f;
            g.push_back(cone);
            fs.push_back(std::move(g));
        }
    if (k.empty()) fs = {{top}, {top + 1}};
    return SimplicialComplex(std::move(vs), std::move(fs));
}

SimplicialMap suspension(const SimplicialMap& f)
{
    SimplicialComplex s = suspension(f.source());
    SimplicialComplex t = suspension(f.target());
    std::map<Vertex, Vertex> m = f.vertex_map();
    const Vertex sv = s.vertices()[s.vertices().size() - 2];
    const Vertex tv = t.vertices()[t.vertices().size() - 2];
    m[sv] = tv;
    m[sv + 1] = tv + 1;
    return SimplicialMap(std::move(s), std::move(t), std::move(m));
}

namespace complexes {

SimplicialComplex simplex(int n)
{
    if (n < 0) throw PreconditionError("simplex dimension is nonnegative", std::to_string(n));
    Face f(static_cast<std::size_t>(n) + 1);
    std::iota(f.begin(), f.end(), Vertex(0));
    return SimplicialComplex::from_facets({f});
}

SimplicialComplex simplex_boundary(int n)
{
    if (n < 1) throw PreconditionError("boundary of a simplex of dimension >= 1", std::to_string(n));
    std::vector<Face> fs;
    for (int skip = 0; skip <= n; ++skip) {
        Face f;
        for (int v = 0; v <= n; ++v)
            if (v != skip) f.push_back(v);
        fs.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex polygon(int k)
{
    if (k < 3) throw PreconditionError("polygon has at least 3 vertices", std::to_string(k));
    std::vector<Face> fs;
    for (int i = 0; i < k; ++i) fs.push_back({i, (i + 1) % k});
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex torus7()
{
    std::vector<Face> fs;
    for (int i = 0; i < 7; ++i) {
        fs.push_back({i, (i + 1) % 7, (i + 3) % 7});
        fs.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex point()
{
    return SimplicialComplex({0}, {{0}});
}

SimplicialMap polygon_wrap(int m, int k)
{
    if (k < 1) throw PreconditionError("wrap degree is positive", std::to_string(k));
    std::map<Vertex, Vertex> vm;
    for (int i = 0; i < k * m; ++i) vm[i] = i % m;
    return SimplicialMap(polygon(k * m), polygon(m), std::move(vm));
}

}  // namespace complexes

std::string to_string(const Face& f)
{
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "}";
}

}  // namespace telescoped
