#ifndef EQUIVELAR_TESTS_FIXTURES_HPP
#define EQUIVELAR_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "equivelar/equivelar.hpp"

namespace fixtures {

using equivelar::CycleCollection;
using equivelar::VertexId;

inline CycleCollection two_tetrahedra()
{
    return CycleCollection::from_indexed({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                          {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}},
                                         "two tetrahedra");
}

inline CycleCollection triangular_prism()
{
    return CycleCollection::from_indexed({{0, 1, 2}, {3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5}}, "prism");
}

inline CycleCollection cube()
{
    return CycleCollection::from_indexed(
        {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}}, "cube");
}

inline CycleCollection octahedron()
{
    return CycleCollection::from_indexed(
        {{0, 2, 4}, {0, 4, 3}, {0, 3, 5}, {0, 5, 2}, {1, 2, 4}, {1, 4, 3}, {1, 3, 5}, {1, 5, 2}}, "octahedron");
}

inline CycleCollection square_pyramid()
{
    return CycleCollection::from_indexed({{0, 1, 2, 3}, {4, 0, 1}, {4, 1, 2}, {4, 2, 3}, {4, 3, 0}}, "pyramid");
}

inline CycleCollection single_square() { return CycleCollection::from_indexed({{0, 1, 2, 3}}, "square"); }

inline CycleCollection single_triangle() { return CycleCollection::from_indexed({{0, 1, 2}}, "triangle"); }

/// Two triangles sharing only vertex 0.
inline CycleCollection pinched_triangles()
{
    return CycleCollection::from_indexed({{0, 1, 2}, {0, 3, 4}}, "pinched");
}

/// 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline CycleCollection torus7()
{
    std::vector<std::vector<VertexId>> faces;
    for (VertexId i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return CycleCollection::from_indexed(faces, "torus7");
}

/// 6-vertex real projective plane (hemi-icosahedron).
inline CycleCollection rp2_6()
{
    return CycleCollection::from_indexed({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}},
                                         "rp2_6");
}

/// Two squares sharing both edges at vertex 0: a 2-face umbrella.
inline CycleCollection double_square()
{
    return CycleCollection::from_indexed({{0, 1, 2, 3}, {0, 3, 4, 1}}, "double square");
}

/// Polyhedral maps small enough for brute-force bijection search.
inline std::vector<CycleCollection> small_maps()
{
    return {equivelar::tetrahedron(), triangular_prism(), cube(), octahedron(), square_pyramid(), torus7(), rp2_6()};
}

/// Collection with vertex labels permuted at random.
inline CycleCollection relabel(const CycleCollection& c, std::mt19937& rng)
{
    std::vector<VertexId> perm(c.vertex_count());
    for (VertexId v = 0; v < perm.size(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<VertexId>> faces;
    for (const auto& f : c.faces()) {
        auto& out = faces.emplace_back();
        for (auto v : f.vertices()) out.push_back(perm[v]);
    }
    std::shuffle(faces.begin(), faces.end(), rng);
    return CycleCollection::from_indexed(faces, c.name() + " relabelled");
}

/// Raw faces of a collection as index lists.
inline std::vector<std::vector<VertexId>> raw_faces(const CycleCollection& c)
{
    std::vector<std::vector<VertexId>> out;
    for (const auto& f : c.faces()) out.push_back(f.vertices());
    return out;
}

/// One random local edit of a collection, retried until the result is a
/// valid collection (distinct faces, no repeated vertices in a face).
inline CycleCollection perturb(const CycleCollection& c, std::mt19937& rng)
{
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto faces = raw_faces(c);
        const auto n = static_cast<VertexId>(c.vertex_count());
        std::uniform_int_distribution<std::size_t> pick_face(0, faces.size() - 1);
        std::uniform_int_distribution<int> pick_kind(0, 3);
        auto& f = faces[pick_face(rng)];
        switch (pick_kind(rng)) {
        case 0:
            if (faces.size() < 2) continue;
            faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(pick_face(rng)));
            break;
        case 1: {
            if (f.size() < 4) continue;
            std::uniform_int_distribution<std::size_t> pos(0, f.size() - 1);
            const auto i = pos(rng);
            std::swap(f[i], f[(i + 1) % f.size()]);
            break;
        }
        case 2: {
            std::uniform_int_distribution<std::size_t> pos(0, f.size() - 1);
            std::uniform_int_distribution<VertexId> vert(0, n);
            f[pos(rng)] = vert(rng);
            break;
        }
        default: {
            std::vector<VertexId> all(n);
            for (VertexId v = 0; v < n; ++v) all[v] = v;
            std::shuffle(all.begin(), all.end(), rng);
            std::uniform_int_distribution<std::size_t> len(3, std::min<std::size_t>(5, n));
            all.resize(len(rng));
            faces.push_back(all);
            break;
        }
        }
        try {
            // from_indexed needs every id used; renumber through build_collection
            return equivelar::build_collection(faces, c.name() + " perturbed");
        } catch (const equivelar::Error&) {
        }
    }
    return c;
}

/// Named fixtures plus seeded perturbations of them, for property checks.
inline std::vector<CycleCollection> property_corpus(unsigned seed, std::size_t perturbed = 40)
{
    std::vector<CycleCollection> out = small_maps();
    for (int m = 3; m <= 4; ++m) {
        for (int n = 0; n <= 2; ++n) {
            out.push_back(equivelar::construct_odd(m, n));
            out.push_back(equivelar::construct_even(m, n));
        }
    }
    out.push_back(equivelar::torus_pattern());
    for (int p : {5, 7, 11}) out.push_back(equivelar::pattern_cycles(equivelar::pattern_permutation(p), p));
    out.push_back(two_tetrahedra());
    out.push_back(pinched_triangles());
    out.push_back(double_square());
    out.push_back(single_square());

    std::mt19937 rng(seed);
    const std::vector<CycleCollection> seeds{equivelar::tetrahedron(), triangular_prism(), cube(), octahedron(),
                                             torus7(), rp2_6(), equivelar::construct_odd(3, 0)};
    for (std::size_t i = 0; i < perturbed; ++i) {
        auto c = seeds[i % seeds.size()];
        const int edits = 1 + static_cast<int>(i % 3);
        for (int e = 0; e < edits; ++e) c = perturb(c, rng);
        out.push_back(c);
    }
    return out;
}

} // namespace fixtures

#endif // EQUIVELAR_TESTS_FIXTURES_HPP
