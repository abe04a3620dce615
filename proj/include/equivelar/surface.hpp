#ifndef EQUIVELAR_SURFACE_HPP
#define EQUIVELAR_SURFACE_HPP

// Simplicial machinery: barycentric subdivision, the bar complex of a cycle
// collection, vertex links, manifold and orientability tests, and the
// classification of closed surfaces by Euler characteristic.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equivelar/complex.hpp"
#include "equivelar/error.hpp"
#include "equivelar/graph.hpp"

namespace equivelar {

/// Where a simplicial vertex comes from in the originating complex.
enum class SimplexTag : std::uint8_t { vertex, edge, face };

inline const char* to_string(SimplexTag tag)
{
    switch (tag) {
    case SimplexTag::vertex: return "vertex";
    case SimplexTag::edge: return "edge";
    case SimplexTag::face: return "face";
    }
    return "?";
}

/// `ref` is a vertex id, an index into the complex's edge list, or a face id.
struct SimplexVertex {
    SimplexTag tag = SimplexTag::vertex;
    std::uint32_t ref = 0;

    friend auto operator<=>(const SimplexVertex&, const SimplexVertex&) = default;
};

using Triangle = std::array<std::uint32_t, 3>;

/// Pure 2-dimensional simplicial complex given by its triangles.
class SimplicialComplex2 {
public:
    SimplicialComplex2() = default;

    SimplicialComplex2(std::vector<SimplexVertex> vertices, std::vector<Triangle> triangles)
        : vertices_(std::move(vertices)), triangles_(std::move(triangles))
    {
        for (auto& t : triangles_) {
            std::sort(t.begin(), t.end());
            if (t[0] == t[1] || t[1] == t[2]) throw RepeatedVertexInCycle("degenerate triangle");
            if (t[2] >= vertices_.size()) throw UnknownVertex("triangle refers to unknown vertex " + std::to_string(t[2]));
        }
        std::sort(triangles_.begin(), triangles_.end());
        if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end()) {
            throw DuplicateFace("duplicate triangle");
        }
        at_vertex_.assign(vertices_.size(), {});
        for (std::uint32_t t = 0; t < triangles_.size(); ++t) {
            for (auto v : triangles_[t]) at_vertex_[v].push_back(t);
        }
        for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
            if (at_vertex_[v].empty()) throw InvalidParameters("vertex " + std::to_string(v) + " lies in no triangle");
        }
    }

    const std::vector<SimplexVertex>& vertices() const { return vertices_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t triangle_count() const { return triangles_.size(); }

    const std::vector<std::uint32_t>& triangles_at(std::uint32_t v) const
    {
        if (v >= at_vertex_.size()) throw UnknownVertex("unknown simplicial vertex " + std::to_string(v));
        return at_vertex_[v];
    }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(triangles_.size() * 3);
        for (const auto& t : triangles_) {
            out.emplace_back(t[0], t[1]);
            out.emplace_back(t[0], t[2]);
            out.emplace_back(t[1], t[2]);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::optional<std::uint32_t> find_vertex(SimplexVertex sv) const
    {
        auto it = std::find(vertices_.begin(), vertices_.end(), sv);
        if (it == vertices_.end()) return std::nullopt;
        return static_cast<std::uint32_t>(it - vertices_.begin());
    }

private:
    std::vector<SimplexVertex> vertices_;
    std::vector<Triangle> triangles_;
    std::vector<std::vector<std::uint32_t>> at_vertex_;
};

inline FVector f_vector(const SimplicialComplex2& x) { return {x.vertex_count(), x.edges().size(), x.triangle_count()}; }

inline std::int64_t euler_characteristic(const SimplicialComplex2& x)
{
    const auto f = f_vector(x);
    return static_cast<std::int64_t>(f.f0) - static_cast<std::int64_t>(f.f1) + static_cast<std::int64_t>(f.f2);
}

/// One triangle {u, e, F} per flag (u, e, F). Vertex ids are laid out as
/// original vertices, then edges, then faces.
inline SimplicialComplex2 barycentric_subdivision(const CycleCollection& c)
{
    const auto f0 = static_cast<std::uint32_t>(c.vertex_count());
    const auto f1 = static_cast<std::uint32_t>(c.edge_count());
    std::vector<SimplexVertex> vertices;
    vertices.reserve(f0 + f1 + c.face_count());
    for (std::uint32_t v = 0; v < f0; ++v) vertices.push_back({SimplexTag::vertex, v});
    for (std::uint32_t e = 0; e < f1; ++e) vertices.push_back({SimplexTag::edge, e});
    for (std::uint32_t f = 0; f < c.face_count(); ++f) vertices.push_back({SimplexTag::face, f});

    std::vector<Triangle> triangles;
    for (FaceId f = 0; f < c.face_count(); ++f) {
        const auto& face = c.face(f);
        for (std::size_t i = 0; i < face.size(); ++i) {
            const auto a = face[i];
            const auto b = face[(i + 1) % face.size()];
            const auto e = static_cast<std::uint32_t>(*c.edge_index(a, b));
            triangles.push_back({a, f0 + e, f0 + f1 + f});
            triangles.push_back({b, f0 + e, f0 + f1 + f});
        }
    }
    return SimplicialComplex2(std::move(vertices), std::move(triangles));
}

/// Triangles {x, y, F} for every edge xy of every cycle F. Vertex ids are the
/// collection's vertices followed by one node per cycle.
inline SimplicialComplex2 bar_complex(const CycleCollection& c)
{
    const auto f0 = static_cast<std::uint32_t>(c.vertex_count());
    std::vector<SimplexVertex> vertices;
    vertices.reserve(f0 + c.face_count());
    for (std::uint32_t v = 0; v < f0; ++v) vertices.push_back({SimplexTag::vertex, v});
    for (std::uint32_t f = 0; f < c.face_count(); ++f) vertices.push_back({SimplexTag::face, f});

    std::vector<Triangle> triangles;
    for (FaceId f = 0; f < c.face_count(); ++f) {
        const auto& face = c.face(f);
        for (std::size_t i = 0; i < face.size(); ++i) {
            triangles.push_back({face[i], face[(i + 1) % face.size()], f0 + f});
        }
    }
    return SimplicialComplex2(std::move(vertices), std::move(triangles));
}

/// Vertices {u : uv in X} joined by {xy : xyv in X}.
inline Graph link_of_vertex(const SimplicialComplex2& x, std::uint32_t v)
{
    std::vector<Graph::Node> nodes;
    std::vector<Graph::Edge> edges;
    for (auto t : x.triangles_at(v)) {
        std::array<std::uint32_t, 2> rest{};
        std::size_t k = 0;
        for (auto w : x.triangles()[t]) {
            if (w != v) rest[k++] = w;
        }
        nodes.push_back(rest[0]);
        nodes.push_back(rest[1]);
        edges.emplace_back(rest[0], rest[1]);
    }
    return Graph(std::move(nodes), std::move(edges));
}

/// Vertices whose link is not a single cycle.
inline std::vector<std::uint32_t> non_manifold_vertices(const SimplicialComplex2& x)
{
    std::vector<std::uint32_t> bad;
    for (std::uint32_t v = 0; v < x.vertex_count(); ++v) {
        // a repeated link edge would be collapsed by Graph, so compare counts too
        const auto link = link_of_vertex(x, v);
        if (link.edge_count() != x.triangles_at(v).size() || !is_single_cycle(link)) bad.push_back(v);
    }
    return bad;
}

inline bool is_combinatorial_2_manifold(const SimplicialComplex2& x)
{
    return x.vertex_count() > 0 && non_manifold_vertices(x).empty();
}

namespace detail {

// Direct each cycle so that every edge is traversed once in each direction.
// Requires every edge to lie on exactly two cycles. Components are handled
// independently.
inline bool orientable_by_propagation(const std::vector<std::vector<std::uint32_t>>& cycles)
{
    struct Use {
        std::uint32_t cycle;
        int direction; // +1 if traversed low->high in stored order
    };
    std::map<Edge, std::vector<Use>> uses;
    for (std::uint32_t c = 0; c < cycles.size(); ++c) {
        const auto& cyc = cycles[c];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const auto a = cyc[i];
            const auto b = cyc[(i + 1) % cyc.size()];
            uses[make_edge(a, b)].push_back({c, a < b ? 1 : -1});
        }
    }
    std::vector<std::vector<std::pair<std::uint32_t, int>>> adjacent(cycles.size());
    for (const auto& [e, us] : uses) {
        if (us.size() != 2) throw NotAManifold("edge does not lie on exactly two faces");
        // orientation[b] must equal -orientation[a] * da * db
        const int relation = -us[0].direction * us[1].direction;
        adjacent[us[0].cycle].emplace_back(us[1].cycle, relation);
        adjacent[us[1].cycle].emplace_back(us[0].cycle, relation);
    }

    std::vector<int> orientation(cycles.size(), 0);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t root = 0; root < cycles.size(); ++root) {
        if (orientation[root] != 0) continue;
        orientation[root] = 1;
        queue.push_back(root);
        while (!queue.empty()) {
            const auto cur = queue.front();
            queue.pop_front();
            for (const auto& [nb, relation] : adjacent[cur]) {
                const int wanted = orientation[cur] * relation;
                if (orientation[nb] == 0) {
                    orientation[nb] = wanted;
                    queue.push_back(nb);
                } else if (orientation[nb] != wanted) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace detail

/// Orientability of a polyhedral map by propagating face directions.
inline bool is_orientable(const PolygonalComplex& k)
{
    if (!is_polyhedral_map(k)) throw NotAManifold("orientability needs a polyhedral map");
    std::vector<std::vector<std::uint32_t>> cycles;
    cycles.reserve(k.face_count());
    for (const auto& f : k.faces()) cycles.push_back(f.vertices());
    return detail::orientable_by_propagation(cycles);
}

/// Orientability of a combinatorial 2-manifold by propagating triangle directions.
inline bool is_orientable_simplicial(const SimplicialComplex2& x)
{
    if (!is_combinatorial_2_manifold(x)) throw NotAManifold("orientability needs a combinatorial 2-manifold");
    std::vector<std::vector<std::uint32_t>> cycles;
    cycles.reserve(x.triangle_count());
    for (const auto& t : x.triangles()) cycles.push_back({t[0], t[1], t[2]});
    return detail::orientable_by_propagation(cycles);
}

/// The triangles of X as a cycle collection over integer labels.
inline CycleCollection as_cycle_collection(const SimplicialComplex2& x, std::string name = {})
{
    std::vector<std::vector<VertexId>> faces;
    faces.reserve(x.triangle_count());
    for (const auto& t : x.triangles()) faces.push_back({t[0], t[1], t[2]});
    return CycleCollection::from_indexed(faces, std::move(name));
}

/// Closed surface determined by Euler characteristic and orientability.
struct SurfaceClass {
    std::int64_t euler = 2;
    bool orientable = true;
    std::int64_t genus = 0; ///< handles if orientable, crosscaps otherwise
    std::string name = "sphere";

    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

inline SurfaceClass classify_surface(std::int64_t euler, bool orientable)
{
    if (euler > 2) throw InvalidCombination("no closed surface has Euler characteristic " + std::to_string(euler));
    if (orientable) {
        if (euler % 2 != 0) {
            throw InvalidCombination("orientable surface with odd Euler characteristic " + std::to_string(euler));
        }
        const auto g = (2 - euler) / 2;
        std::string name = g == 0 ? "sphere" : g == 1 ? "torus" : "orientable genus " + std::to_string(g);
        return {euler, true, g, std::move(name)};
    }
    if (euler == 2) throw InvalidCombination("non-orientable surface with Euler characteristic 2");
    const auto k = 2 - euler;
    return {euler, false, k, "non-orientable genus " + std::to_string(k)};
}

} // namespace equivelar

#endif // EQUIVELAR_SURFACE_HPP
