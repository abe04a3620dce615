#ifndef EQUIVELAR_SYMMETRY_HPP
#define EQUIVELAR_SYMMETRY_HPP

// Flags, the flag graph of a polyhedral map, and everything built on flag
// propagation: automorphism groups, regularity, transitivity, isomorphism
// and self-duality.
//
// An automorphism of a connected polyhedral map is fixed by the image of a
// single flag, so the group acts freely on flags. Propagating a candidate
// image of a base flag along the three flag involutions either produces an
// automorphism or fails in one pass over the flags.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "equivelar/complex.hpp"
#include "equivelar/error.hpp"

namespace equivelar {

/// Incident (vertex, edge, face) triple.
struct Flag {
    VertexId vertex = 0;
    Edge edge{0, 0};
    FaceId face = 0;

    friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// All flags of a polyhedral map with the involutions s0 (other vertex of the
/// edge), s1 (other edge of the face at the vertex) and s2 (other face at the
/// edge).
///
/// Flag ids are laid out face by face: face f owns ids offset(f) ..
/// offset(f) + 2*len(f) - 1, where id offset(f) + 2j + s is the flag on the
/// edge between positions j and j+1 whose vertex is at position j + s.
class FlagGraph {
public:
    static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

    explicit FlagGraph(const PolygonalComplex& k) : complex_(k)
    {
        if (!is_polyhedral_map(k)) throw NotAPolyhedralMap("flag graph needs a polyhedral map");
        const auto& c = k.collection();
        offsets_.reserve(c.face_count() + 1);
        std::uint32_t total = 0;
        for (const auto& f : c.faces()) {
            offsets_.push_back(total);
            total += static_cast<std::uint32_t>(2 * f.size());
        }
        offsets_.push_back(total);

        vertex_.resize(total);
        face_.resize(total);
        for (auto& s : involution_) s.resize(total);

        for (FaceId f = 0; f < c.face_count(); ++f) {
            const auto& face = c.face(f);
            const auto len = static_cast<std::uint32_t>(face.size());
            for (std::uint32_t j = 0; j < len; ++j) {
                for (std::uint32_t s = 0; s < 2; ++s) {
                    const auto id = offsets_[f] + 2 * j + s;
                    vertex_[id] = face[(j + s) % len];
                    face_[id] = f;
                    involution_[0][id] = id ^ 1u;
                    involution_[1][id] = s == 0 ? offsets_[f] + 2 * ((j + len - 1) % len) + 1
                                                : offsets_[f] + 2 * ((j + 1) % len);
                }
            }
        }
        for (std::uint32_t id = 0; id < total; ++id) {
            const auto f = face_[id];
            const auto e = edge_of(id);
            const auto& on_edge = c.edge_faces(*c.edge_index(e.first, e.second));
            const auto g = on_edge[0] == f ? on_edge[1] : on_edge[0];
            involution_[2][id] = locate(g, vertex_[id], e.first == vertex_[id] ? e.second : e.first);
        }

        base_ = 0;
        for (std::uint32_t id = 1; id < total; ++id) {
            if (flag(id) < flag(base_)) base_ = id;
        }
    }

    const PolygonalComplex& complex() const { return complex_; }
    std::size_t size() const { return vertex_.size(); }

    VertexId vertex_of(std::uint32_t id) const { return vertex_[id]; }
    FaceId face_of(std::uint32_t id) const { return face_[id]; }

    Edge edge_of(std::uint32_t id) const { return make_edge(vertex_[id], vertex_[id ^ 1u]); }

    Flag flag(std::uint32_t id) const { return {vertex_[id], edge_of(id), face_[id]}; }

    /// s_k(id) for k in {0, 1, 2}.
    std::uint32_t involution(int k, std::uint32_t id) const { return involution_[static_cast<std::size_t>(k)][id]; }
    std::uint32_t s0(std::uint32_t id) const { return involution_[0][id]; }
    std::uint32_t s1(std::uint32_t id) const { return involution_[1][id]; }
    std::uint32_t s2(std::uint32_t id) const { return involution_[2][id]; }

    /// Lexicographically least flag.
    std::uint32_t base_flag() const { return base_; }

    std::optional<std::uint32_t> find(const Flag& fl) const
    {
        if (fl.face >= complex_.face_count()) return std::nullopt;
        const auto other = fl.edge.first == fl.vertex ? fl.edge.second : fl.edge.first;
        if (fl.edge.first != fl.vertex && fl.edge.second != fl.vertex) return std::nullopt;
        const auto id = locate(fl.face, fl.vertex, other);
        if (id == none) return std::nullopt;
        return id;
    }

private:
    // Flag of face f at vertex v on the edge towards w, or `none`.
    std::uint32_t locate(FaceId f, VertexId v, VertexId w) const
    {
        const auto& face = complex_.collection().face(f);
        const auto len = static_cast<std::uint32_t>(face.size());
        const auto pos = static_cast<std::uint32_t>(face.position(v));
        if (pos == len) return none;
        if (face[(pos + 1) % len] == w) return offsets_[f] + 2 * pos;
        if (face[(pos + len - 1) % len] == w) return offsets_[f] + 2 * ((pos + len - 1) % len) + 1;
        return none;
    }

    PolygonalComplex complex_;
    std::vector<std::uint32_t> offsets_;
    std::vector<VertexId> vertex_;
    std::vector<FaceId> face_;
    std::array<std::vector<std::uint32_t>, 3> involution_;
    std::uint32_t base_ = 0;
};

inline FlagGraph flag_graph(const PolygonalComplex& k) { return FlagGraph(k); }

/// Extend f -> g to a flag map commuting with s0, s1, s2. Returns the induced
/// vertex bijection when the extension exists and carries faces onto faces.
inline std::optional<std::vector<VertexId>> propagate(const FlagGraph& from, const FlagGraph& to, std::uint32_t f,
                                                      std::uint32_t g)
{
    constexpr auto unset = FlagGraph::none;
    const auto& kc = from.complex().collection();
    const auto& lc = to.complex().collection();
    if (from.size() != to.size() || kc.vertex_count() != lc.vertex_count() || kc.face_count() != lc.face_count()) {
        return std::nullopt;
    }

    std::vector<std::uint32_t> image(from.size(), unset);
    std::vector<char> used(to.size(), 0);
    std::vector<VertexId> vmap(kc.vertex_count(), unset);
    std::vector<VertexId> vinv(lc.vertex_count(), unset);
    std::vector<FaceId> fmap(kc.face_count(), unset);
    std::vector<FaceId> finv(lc.face_count(), unset);

    auto assign = [&](std::uint32_t x, std::uint32_t y) {
        if (used[y]) return false;
        const auto v = from.vertex_of(x);
        const auto w = to.vertex_of(y);
        if (vmap[v] == unset && vinv[w] == unset) {
            vmap[v] = w;
            vinv[w] = v;
        } else if (vmap[v] != w || vinv[w] != v) {
            return false;
        }
        const auto a = from.face_of(x);
        const auto b = to.face_of(y);
        if (fmap[a] == unset && finv[b] == unset) {
            fmap[a] = b;
            finv[b] = a;
        } else if (fmap[a] != b || finv[b] != a) {
            return false;
        }
        image[x] = y;
        used[y] = 1;
        return true;
    };

    if (!assign(f, g)) return std::nullopt;
    std::vector<std::uint32_t> stack{f};
    std::size_t mapped = 1;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        const auto y = image[x];
        for (int k = 0; k < 3; ++k) {
            const auto xn = from.involution(k, x);
            const auto yn = to.involution(k, y);
            if (image[xn] == unset) {
                if (!assign(xn, yn)) return std::nullopt;
                ++mapped;
                stack.push_back(xn);
            } else if (image[xn] != yn) {
                return std::nullopt;
            }
        }
    }
    if (mapped != from.size()) return std::nullopt;

    for (const auto& face : kc.faces()) {
        std::vector<VertexId> img;
        img.reserve(face.size());
        for (auto v : face.vertices()) img.push_back(vmap[v]);
        if (!lc.find_face(img)) return std::nullopt;
    }
    return vmap;
}

inline std::optional<std::vector<VertexId>> propagate(const PolygonalComplex& k, const PolygonalComplex& l,
                                                      const Flag& f, const Flag& g)
{
    const FlagGraph gk(k);
    const FlagGraph gl(l);
    const auto a = gk.find(f);
    const auto b = gl.find(g);
    if (!a || !b) throw Error("flag is not a flag of the given map");
    return propagate(gk, gl, *a, *b);
}

/// True iff `map` is a vertex bijection carrying the faces of k exactly onto the faces of l.
inline bool is_isomorphism(const CycleCollection& k, const CycleCollection& l, const std::vector<VertexId>& map)
{
    if (map.size() != k.vertex_count() || k.vertex_count() != l.vertex_count() || k.face_count() != l.face_count()) {
        return false;
    }
    std::vector<char> hit(l.vertex_count(), 0);
    for (auto w : map) {
        if (w >= l.vertex_count() || hit[w]) return false;
        hit[w] = 1;
    }
    for (const auto& face : k.faces()) {
        std::vector<VertexId> img;
        img.reserve(face.size());
        for (auto v : face.vertices()) img.push_back(map[v]);
        if (!l.find_face(img)) return false;
    }
    return true;
}

struct AutomorphismGroup {
    std::size_t order = 0;
    std::size_t flags = 0;
    /// Vertex permutations (image of each vertex id) generating the group.
    std::vector<std::vector<VertexId>> generators;
    /// Every automorphism, ordered by the flag id its base-flag image has.
    std::vector<std::vector<VertexId>> elements;
    std::vector<std::vector<VertexId>> vertex_orbits;
    std::vector<std::vector<FaceId>> face_orbits;
};

namespace detail {

inline std::vector<VertexId> compose(const std::vector<VertexId>& a, const std::vector<VertexId>& b)
{
    // (a after b)
    std::vector<VertexId> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

inline void close_group(std::set<std::vector<VertexId>>& group, const std::vector<std::vector<VertexId>>& gens)
{
    std::vector<std::vector<VertexId>> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
        std::vector<std::vector<VertexId>> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                auto y = compose(g, x);
                if (group.insert(y).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
}

template <class Id>
std::vector<std::vector<Id>> orbits_from_union(std::vector<Id> parent)
{
    auto find = [&](Id x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<Id>> by_root(parent.size());
    for (Id x = 0; x < parent.size(); ++x) by_root[find(x)].push_back(x);
    std::vector<std::vector<Id>> out;
    for (auto& o : by_root) {
        if (!o.empty()) out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

inline AutomorphismGroup automorphism_group(const FlagGraph& g)
{
    const auto& c = g.complex().collection();
    const auto base = g.base_flag();
    const auto base_degree = c.faces_at(g.vertex_of(base)).size();
    const auto base_len = c.face(g.face_of(base)).size();

    AutomorphismGroup out;
    out.flags = g.size();
    for (std::uint32_t t = 0; t < g.size(); ++t) {
        if (c.faces_at(g.vertex_of(t)).size() != base_degree || c.face(g.face_of(t)).size() != base_len) continue;
        if (auto m = propagate(g, g, base, t)) out.elements.push_back(std::move(*m));
    }
    out.order = out.elements.size();

    std::vector<VertexId> vparent(c.vertex_count());
    std::iota(vparent.begin(), vparent.end(), VertexId{0});
    std::vector<FaceId> fparent(c.face_count());
    std::iota(fparent.begin(), fparent.end(), FaceId{0});
    auto unite = [](auto& parent, auto a, auto b) {
        while (parent[a] != a) a = parent[a];
        while (parent[b] != b) b = parent[b];
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    for (const auto& m : out.elements) {
        for (VertexId v = 0; v < m.size(); ++v) unite(vparent, v, m[v]);
        for (FaceId f = 0; f < c.face_count(); ++f) {
            std::vector<VertexId> img;
            for (auto v : c.face(f).vertices()) img.push_back(m[v]);
            unite(fparent, f, *c.find_face(img));
        }
    }
    out.vertex_orbits = detail::orbits_from_union(std::move(vparent));
    out.face_orbits = detail::orbits_from_union(std::move(fparent));

    std::vector<VertexId> identity(c.vertex_count());
    std::iota(identity.begin(), identity.end(), VertexId{0});
    std::set<std::vector<VertexId>> group{identity};
    for (const auto& m : out.elements) {
        if (group.size() == out.order) break;
        if (group.count(m)) continue;
        out.generators.push_back(m);
        detail::close_group(group, out.generators);
    }
    return out;
}

inline AutomorphismGroup automorphism_group(const PolygonalComplex& k) { return automorphism_group(FlagGraph(k)); }

/// The automorphism group acts transitively on flags.
inline bool is_combinatorially_regular(const AutomorphismGroup& group) { return group.order == group.flags; }

inline bool is_combinatorially_regular(const PolygonalComplex& k)
{
    return is_combinatorially_regular(automorphism_group(k));
}

struct Transitivity {
    bool vertex_transitive = false;
    bool face_transitive = false;

    friend bool operator==(const Transitivity&, const Transitivity&) = default;
};

inline Transitivity transitivity(const AutomorphismGroup& group)
{
    return {group.vertex_orbits.size() == 1, group.face_orbits.size() == 1};
}

inline Transitivity transitivity(const PolygonalComplex& k) { return transitivity(automorphism_group(k)); }

/// Faces of k become vertices; each vertex v of k becomes the face listing
/// v's incident faces in rotation order. Dual vertex i is face i of k and
/// dual face i belongs to vertex i of k.
inline PolygonalComplex dual(const PolygonalComplex& k)
{
    if (!is_polyhedral_map(k)) throw NotAPolyhedralMap("dual needs a polyhedral map");
    std::vector<std::vector<VertexId>> faces;
    faces.reserve(k.vertex_count());
    for (VertexId v = 0; v < k.vertex_count(); ++v) {
        faces.push_back(*vertex_rotation(k, v, RotationThreshold::map));
    }
    const auto name = k.name().empty() ? std::string("dual") : "dual(" + k.name() + ")";
    return validate_polyhedral(CycleCollection::from_indexed(faces, name));
}

namespace detail {

inline std::vector<std::size_t> degree_multiset(const CycleCollection& c)
{
    std::vector<std::size_t> d;
    for (VertexId v = 0; v < c.vertex_count(); ++v) d.push_back(c.faces_at(v).size());
    std::sort(d.begin(), d.end());
    return d;
}

inline std::vector<std::size_t> face_size_multiset(const CycleCollection& c)
{
    std::vector<std::size_t> d;
    for (const auto& f : c.faces()) d.push_back(f.size());
    std::sort(d.begin(), d.end());
    return d;
}

// Vertex-by-vertex backtracking for complexes that are not polyhedral maps.
// Prunes on incident-face counts and edge-graph adjacency.
inline std::optional<std::vector<VertexId>> backtracking_isomorphism(const CycleCollection& k, const CycleCollection& l)
{
    const auto n = k.vertex_count();
    const auto gk = edge_graph(k);
    const auto gl = edge_graph(l);
    std::vector<VertexId> map(n, 0);
    std::vector<char> used(n, 0);

    auto extend = [&](auto&& self, VertexId v) -> bool {
        if (v == n) return is_isomorphism(k, l, map);
        for (VertexId w = 0; w < n; ++w) {
            if (used[w] || k.faces_at(v).size() != l.faces_at(w).size()) continue;
            bool ok = true;
            for (VertexId u = 0; u < v && ok; ++u) ok = gk.has_edge(u, v) == gl.has_edge(map[u], w);
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    if (extend(extend, 0)) return map;
    return std::nullopt;
}

} // namespace detail

/// A vertex bijection carrying faces onto faces, if one exists.
inline std::optional<std::vector<VertexId>> are_isomorphic(const PolygonalComplex& k, const PolygonalComplex& l)
{
    const auto& kc = k.collection();
    const auto& lc = l.collection();
    if (f_vector(kc) != f_vector(lc)) return std::nullopt;
    if (detail::degree_multiset(kc) != detail::degree_multiset(lc)) return std::nullopt;
    if (detail::face_size_multiset(kc) != detail::face_size_multiset(lc)) return std::nullopt;

    const bool k_map = is_polyhedral_map(k);
    const bool l_map = is_polyhedral_map(l);
    if (k_map != l_map) return std::nullopt;
    if (!k_map) return detail::backtracking_isomorphism(kc, lc);

    const FlagGraph gk(k);
    const FlagGraph gl(l);
    const auto base = gk.base_flag();
    const auto degree = kc.faces_at(gk.vertex_of(base)).size();
    const auto len = kc.face(gk.face_of(base)).size();
    for (std::uint32_t t = 0; t < gl.size(); ++t) {
        if (lc.faces_at(gl.vertex_of(t)).size() != degree || lc.face(gl.face_of(t)).size() != len) continue;
        if (auto m = propagate(gk, gl, base, t)) return m;
    }
    return std::nullopt;
}

inline bool is_self_dual(const PolygonalComplex& k) { return are_isomorphic(k, dual(k)).has_value(); }

} // namespace equivelar

#endif // EQUIVELAR_SYMMETRY_HPP
