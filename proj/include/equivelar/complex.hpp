#ifndef EQUIVELAR_COMPLEX_HPP
#define EQUIVELAR_COMPLEX_HPP

// Face cycles, cycle collections and polygonal complexes.
//
// A CycleCollection is a finite set of cycles over vertex ids 0..f0-1 with a
// label table mapping each id back to the caller's label. A PolygonalComplex
// is a collection that has passed the pairwise intersection test: any two
// faces meet in nothing, a single vertex, or a single common edge.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "equivelar/error.hpp"
#include "equivelar/graph.hpp"

namespace equivelar {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;

/// Vertex label as given by the caller. Integers order before strings.
using Label = std::variant<std::int64_t, std::string>;

inline std::string to_string(const Label& label)
{
    if (const auto* i = std::get_if<std::int64_t>(&label)) return std::to_string(*i);
    return std::get<std::string>(label);
}

/// Unordered vertex pair, always stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A cycle of at least three distinct vertices, stored in canonical form.
///
/// Two cycles are the same face when one is a rotation, or a reflected
/// rotation, of the other. The canonical form is the lexicographically least
/// sequence over all rotations in both directions.
class FaceCycle {
public:
    explicit FaceCycle(std::vector<VertexId> vertices)
    {
        if (vertices.size() < 3) {
            throw CycleTooShort("face cycle needs at least 3 vertices, got " +
                                std::to_string(vertices.size()));
        }
        auto sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw RepeatedVertexInCycle("vertex " +
                                        std::to_string(*std::adjacent_find(sorted.begin(), sorted.end())) +
                                        " repeated in a face cycle");
        }
        vertices_ = canonical_form(vertices);
    }

    static std::vector<VertexId> canonical_form(std::span<const VertexId> cycle)
    {
        const auto n = cycle.size();
        std::vector<VertexId> best;
        std::vector<VertexId> candidate(n);
        const auto start = static_cast<std::size_t>(
            std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
        // Vertices are distinct, so the least rotation starts at the minimum.
        for (int dir : {1, -1}) {
            for (std::size_t k = 0; k < n; ++k) {
                candidate[k] = cycle[dir == 1 ? (start + k) % n : (start + n - k) % n];
            }
            if (best.empty() || candidate < best) best = candidate;
        }
        return best;
    }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    /// Position of v in vertices(), or size() when absent.
    std::size_t position(VertexId v) const
    {
        return static_cast<std::size_t>(std::find(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
    }

    bool contains(VertexId v) const { return position(v) != size(); }

    /// The two cycle-neighbours of v (predecessor, successor in stored order).
    std::pair<VertexId, VertexId> neighbours(VertexId v) const
    {
        const auto i = position(v);
        if (i == size()) throw UnknownVertex("vertex " + std::to_string(v) + " is not on this face");
        const auto n = size();
        return {vertices_[(i + n - 1) % n], vertices_[(i + 1) % n]};
    }

    bool has_edge(VertexId a, VertexId b) const
    {
        const auto i = position(a);
        if (i == size()) return false;
        const auto n = size();
        return vertices_[(i + 1) % n] == b || vertices_[(i + n - 1) % n] == b;
    }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.push_back(make_edge(vertices_[i], vertices_[(i + 1) % size()]));
        return out;
    }

    friend bool operator==(const FaceCycle&, const FaceCycle&) = default;
    friend auto operator<=>(const FaceCycle&, const FaceCycle&) = default;

private:
    std::vector<VertexId> vertices_;
};

/// A set of distinct face cycles together with its vertex label table.
class CycleCollection {
public:
    CycleCollection() = default;

    /// Every vertex id must index into `labels`, and every label must be used.
    CycleCollection(std::vector<FaceCycle> faces, std::vector<Label> labels, std::string name = {})
        : faces_(std::move(faces)), labels_(std::move(labels)), name_(std::move(name))
    {
        vertex_faces_.assign(labels_.size(), {});
        for (FaceId f = 0; f < faces_.size(); ++f) {
            auto [it, inserted] = lookup_.emplace(faces_[f].vertices(), f);
            if (!inserted) {
                throw DuplicateFace("faces " + std::to_string(it->second) + " and " + std::to_string(f) +
                                    " are the same cycle");
            }
            for (auto v : faces_[f].vertices()) {
                if (v >= labels_.size()) {
                    throw UnknownVertex("vertex id " + std::to_string(v) + " has no label");
                }
                vertex_faces_[v].push_back(f);
            }
        }
        for (VertexId v = 0; v < vertex_faces_.size(); ++v) {
            if (vertex_faces_[v].empty()) {
                throw InvalidParameters("vertex label '" + to_string(labels_[v]) + "' lies on no face");
            }
        }

        std::map<Edge, std::vector<FaceId>> edge_map;
        for (FaceId f = 0; f < faces_.size(); ++f) {
            for (const auto& e : faces_[f].edges()) edge_map[e].push_back(f);
        }
        edges_.reserve(edge_map.size());
        edge_faces_.reserve(edge_map.size());
        for (auto& [e, fs] : edge_map) {
            edges_.push_back(e);
            edge_faces_.push_back(std::move(fs));
        }
    }

    /// Collection over integer labels 0..N-1 where N is one past the largest id used.
    static CycleCollection from_indexed(const std::vector<std::vector<VertexId>>& faces, std::string name = {})
    {
        VertexId count = 0;
        std::vector<FaceCycle> cycles;
        cycles.reserve(faces.size());
        for (const auto& f : faces) {
            cycles.emplace_back(f);
            for (auto v : f) count = std::max(count, v + 1);
        }
        std::vector<Label> labels;
        labels.reserve(count);
        for (VertexId v = 0; v < count; ++v) labels.emplace_back(static_cast<std::int64_t>(v));
        return CycleCollection(std::move(cycles), std::move(labels), std::move(name));
    }

    const std::vector<FaceCycle>& faces() const { return faces_; }
    const FaceCycle& face(FaceId f) const { return faces_.at(f); }
    const std::vector<Label>& labels() const { return labels_; }
    const std::string& name() const { return name_; }

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t face_count() const { return faces_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Distinct edges of all cycles, sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Faces through the i-th edge of edges().
    const std::vector<FaceId>& edge_faces(std::size_t edge_index) const { return edge_faces_.at(edge_index); }

    std::optional<std::size_t> edge_index(VertexId a, VertexId b) const
    {
        const auto e = make_edge(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    /// Incident faces of v in increasing index order.
    const std::vector<FaceId>& faces_at(VertexId v) const
    {
        if (v >= vertex_faces_.size()) throw UnknownVertex("unknown vertex " + std::to_string(v));
        return vertex_faces_[v];
    }

    std::optional<FaceId> find_face(const FaceCycle& cycle) const
    {
        auto it = lookup_.find(cycle.vertices());
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<FaceId> find_face(const std::vector<VertexId>& cycle) const
    {
        return find_face(FaceCycle(cycle));
    }

    CycleCollection renamed(std::string name) const
    {
        auto copy = *this;
        copy.name_ = std::move(name);
        return copy;
    }

private:
    std::vector<FaceCycle> faces_;
    std::vector<Label> labels_;
    std::string name_;
    std::vector<std::vector<FaceId>> vertex_faces_;
    std::vector<Edge> edges_;
    std::vector<std::vector<FaceId>> edge_faces_;
    std::map<std::vector<VertexId>, FaceId> lookup_;
};

/// Build a collection from cycles of arbitrary labels.
///
/// Labels are sorted (integers numerically, before strings) and renumbered
/// 0..f0-1 in that order. Face order is preserved.
inline CycleCollection build_collection(const std::vector<std::vector<Label>>& raw_faces, std::string name = {})
{
    std::vector<Label> labels;
    for (const auto& f : raw_faces) {
        if (f.size() < 3) {
            throw CycleTooShort("face cycle needs at least 3 vertices, got " + std::to_string(f.size()));
        }
        labels.insert(labels.end(), f.begin(), f.end());
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::vector<FaceCycle> cycles;
    cycles.reserve(raw_faces.size());
    for (const auto& f : raw_faces) {
        std::vector<VertexId> ids;
        ids.reserve(f.size());
        for (const auto& l : f) {
            ids.push_back(static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
        }
        cycles.emplace_back(std::move(ids));
    }
    return CycleCollection(std::move(cycles), std::move(labels), std::move(name));
}

template <class T>
    requires(std::is_integral_v<T> || std::is_convertible_v<T, std::string>)
CycleCollection build_collection(const std::vector<std::vector<T>>& raw_faces, std::string name = {})
{
    std::vector<std::vector<Label>> converted;
    converted.reserve(raw_faces.size());
    for (const auto& f : raw_faces) {
        auto& out = converted.emplace_back();
        for (const auto& l : f) {
            if constexpr (std::is_integral_v<T>) {
                out.emplace_back(static_cast<std::int64_t>(l));
            } else {
                out.emplace_back(std::string(l));
            }
        }
    }
    return build_collection(converted, std::move(name));
}

/// A collection that satisfies the polyhedral intersection condition.
class PolygonalComplex {
public:
    const CycleCollection& collection() const { return collection_; }
    operator const CycleCollection&() const { return collection_; }

    const std::vector<FaceCycle>& faces() const { return collection_.faces(); }
    std::size_t vertex_count() const { return collection_.vertex_count(); }
    std::size_t edge_count() const { return collection_.edge_count(); }
    std::size_t face_count() const { return collection_.face_count(); }
    const std::string& name() const { return collection_.name(); }

private:
    explicit PolygonalComplex(CycleCollection c) : collection_(std::move(c)) {}
    friend PolygonalComplex validate_polyhedral(CycleCollection c);

    CycleCollection collection_;
};

/// Check that every pair of faces meets in nothing, one vertex, or one edge
/// of both faces. Throws IntersectionViolation naming the first bad pair.
inline PolygonalComplex validate_polyhedral(CycleCollection c)
{
    std::vector<FaceId> partners;
    std::vector<VertexId> shared;
    for (FaceId a = 0; a < c.face_count(); ++a) {
        partners.clear();
        for (auto v : c.face(a).vertices()) {
            for (auto b : c.faces_at(v)) {
                if (b > a) partners.push_back(b);
            }
        }
        std::sort(partners.begin(), partners.end());
        partners.erase(std::unique(partners.begin(), partners.end()), partners.end());

        auto va = c.face(a).vertices();
        std::sort(va.begin(), va.end());
        for (auto b : partners) {
            auto vb = c.face(b).vertices();
            std::sort(vb.begin(), vb.end());
            shared.clear();
            std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
            bool ok = shared.size() <= 1;
            if (shared.size() == 2) {
                ok = c.face(a).has_edge(shared[0], shared[1]) && c.face(b).has_edge(shared[0], shared[1]);
            }
            if (!ok) {
                std::string list;
                for (auto v : shared) list += (list.empty() ? "" : ",") + to_string(c.labels()[v]);
                throw IntersectionViolation(a, b, shared,
                                            "faces " + std::to_string(a) + " and " + std::to_string(b) +
                                                " intersect in {" + list + "}");
            }
        }
    }
    return PolygonalComplex(std::move(c));
}

/// Non-throwing variant of validate_polyhedral.
inline std::optional<PolygonalComplex> try_validate_polyhedral(CycleCollection c)
{
    try {
        return validate_polyhedral(std::move(c));
    } catch (const IntersectionViolation&) {
        return std::nullopt;
    }
}

struct FVector {
    std::size_t f0 = 0;
    std::size_t f1 = 0;
    std::size_t f2 = 0;

    friend bool operator==(const FVector&, const FVector&) = default;
};

inline FVector f_vector(const CycleCollection& c) { return {c.vertex_count(), c.edge_count(), c.face_count()}; }

inline std::int64_t euler_characteristic(const CycleCollection& c)
{
    const auto f = f_vector(c);
    return static_cast<std::int64_t>(f.f0) - static_cast<std::int64_t>(f.f1) + static_cast<std::int64_t>(f.f2);
}

/// The 1-skeleton: union of the edges of all cycles.
inline Graph edge_graph(const CycleCollection& c)
{
    std::vector<Graph::Node> nodes(c.vertex_count());
    for (VertexId v = 0; v < nodes.size(); ++v) nodes[v] = v;
    return Graph(std::move(nodes), c.edges());
}

inline bool is_connected(const CycleCollection& c) { return is_connected(edge_graph(c)); }

/// Minimum number of faces around a vertex. Patterns allow two faces that
/// share both edges at the vertex; polyhedral 2-manifolds require three.
enum class RotationThreshold : std::size_t { pattern = 2, map = 3 };

/// Cyclic order of the faces around v, if they form a single umbrella.
///
/// Each incident face contributes one link edge joining the two cycle
/// neighbours of v. The faces form a rotation iff this link multigraph is a
/// single cycle. The result starts at the least incident face and proceeds
/// toward the smaller of its two neighbours in the rotation.
inline std::optional<std::vector<FaceId>> vertex_rotation(const CycleCollection& c, VertexId v,
                                                          RotationThreshold threshold = RotationThreshold::pattern)
{
    const auto& incident = c.faces_at(v);
    if (incident.size() < static_cast<std::size_t>(threshold)) return std::nullopt;

    // link node -> incident faces (as positions into `incident`)
    std::map<VertexId, std::vector<std::size_t>> at_node;
    std::vector<std::pair<VertexId, VertexId>> ends(incident.size());
    for (std::size_t k = 0; k < incident.size(); ++k) {
        ends[k] = c.face(incident[k]).neighbours(v);
        at_node[ends[k].first].push_back(k);
        at_node[ends[k].second].push_back(k);
    }
    for (const auto& [node, ks] : at_node) {
        if (ks.size() != 2) return std::nullopt;
    }

    auto other_face = [&](std::size_t k, VertexId node) {
        const auto& ks = at_node[node];
        return ks[0] == k ? ks[1] : ks[0];
    };

    // start at incident[0] (the least face id); leave through the node whose
    // other face is smaller
    const std::size_t start = 0;
    VertexId exit = ends[start].second;
    if (incident[other_face(start, ends[start].first)] < incident[other_face(start, ends[start].second)]) {
        exit = ends[start].first;
    }

    std::vector<FaceId> order{incident[start]};
    std::size_t cur = start;
    for (;;) {
        const auto next = other_face(cur, exit);
        if (next == start) break;
        order.push_back(incident[next]);
        exit = ends[next].first == exit ? ends[next].second : ends[next].first;
        cur = next;
        if (order.size() > incident.size()) return std::nullopt;
    }
    if (order.size() != incident.size()) return std::nullopt;
    return order;
}

/// Vertices at which vertex_rotation fails for the given threshold.
inline std::vector<VertexId> non_rotational_vertices(const CycleCollection& c,
                                                     RotationThreshold threshold = RotationThreshold::pattern)
{
    std::vector<VertexId> bad;
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
        if (!vertex_rotation(c, v, threshold)) bad.push_back(v);
    }
    return bad;
}

/// Finite, connected, and every vertex has an umbrella of at least 3 faces.
inline bool is_polyhedral_map(const PolygonalComplex& k)
{
    if (k.vertex_count() == 0 || !is_connected(k.collection())) return false;
    return non_rotational_vertices(k, RotationThreshold::map).empty();
}

/// Same as above for a collection that has not been validated yet.
inline bool is_polyhedral_map(const CycleCollection& c)
{
    auto k = try_validate_polyhedral(c);
    return k && is_polyhedral_map(*k);
}

struct EquivelarType {
    std::size_t p = 0; ///< face length
    std::size_t q = 0; ///< faces per vertex

    friend bool operator==(const EquivelarType&, const EquivelarType&) = default;
};

inline std::optional<EquivelarType> equivelar_type(const CycleCollection& c)
{
    if (c.face_count() == 0) return std::nullopt;
    const auto p = c.face(0).size();
    const auto q = c.faces_at(0).size();
    for (const auto& f : c.faces()) {
        if (f.size() != p) return std::nullopt;
    }
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
        if (c.faces_at(v).size() != q) return std::nullopt;
    }
    if (p < 3 || q < 3) return std::nullopt;
    return EquivelarType{p, q};
}

namespace detail {

// Symmetric f0 x f0 table of vertex pairs lying on a common face.
inline std::vector<char> cofacial_pairs(const CycleCollection& c)
{
    const auto n = c.vertex_count();
    std::vector<char> together(n * n, 0);
    for (const auto& f : c.faces()) {
        for (auto a : f.vertices()) {
            for (auto b : f.vertices()) together[a * n + b] = 1;
        }
    }
    return together;
}

} // namespace detail

/// Distinct vertex pairs that lie on a common face without being an edge of it.
inline std::size_t diagonal_count(const CycleCollection& c)
{
    std::set<Edge> pairs;
    for (const auto& f : c.faces()) {
        const auto& vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (!f.has_edge(vs[i], vs[j])) pairs.insert(make_edge(vs[i], vs[j]));
            }
        }
    }
    return pairs.size();
}

/// Every pair of vertices lies on a common face.
inline bool is_weakly_neighbourly(const CycleCollection& c)
{
    if (c.vertex_count() == 0) return false;
    const auto together = detail::cofacial_pairs(c);
    return std::all_of(together.begin(), together.end(), [](char x) { return x != 0; });
}

} // namespace equivelar

#endif // EQUIVELAR_COMPLEX_HPP
