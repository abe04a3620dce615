#ifndef EQUIVELAR_REPORT_HPP
#define EQUIVELAR_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>

#include "equivelar/complex.hpp"
#include "equivelar/io.hpp"
#include "equivelar/surface.hpp"
#include "equivelar/symmetry.hpp"

namespace equivelar {

/// Everything the analyzer can say about a cycle collection.
///
/// Map-level fields (orientability, surface, symmetry) are left empty when
/// the input is not a polyhedral map. Pattern-level fields describe the bar
/// complex and are filled for any input.
struct AnalysisReport {
    std::string name;
    FVector f_vector;
    std::int64_t euler = 0;
    std::optional<EquivelarType> equivelar_type;
    bool polyhedral_complex = false;
    bool connected = false;
    bool polyhedral_map = false;
    bool weakly_neighbourly = false;
    std::size_t diagonal_count = 0;

    bool pattern_manifold = false;
    std::int64_t pattern_euler = 0;
    std::optional<SurfaceClass> pattern_surface;

    std::optional<bool> orientable;
    std::optional<SurfaceClass> surface;

    std::optional<AutomorphismGroup> automorphisms;
    std::optional<bool> combinatorially_regular;
    std::optional<bool> self_dual;
};

/// `full` adds the automorphism group and the self-duality test.
inline AnalysisReport analyze(const CycleCollection& c, bool full = false)
{
    AnalysisReport r;
    r.name = c.name();
    r.f_vector = f_vector(c);
    r.euler = euler_characteristic(c);
    r.equivelar_type = equivelar_type(c);
    r.connected = is_connected(c);
    r.weakly_neighbourly = is_weakly_neighbourly(c);
    r.diagonal_count = diagonal_count(c);

    const auto bar = bar_complex(c);
    r.pattern_euler = euler_characteristic(bar);
    r.pattern_manifold = is_combinatorial_2_manifold(bar);
    if (r.pattern_manifold && r.connected) {
        r.pattern_surface = classify_surface(r.pattern_euler, is_orientable_simplicial(bar));
    }

    auto k = try_validate_polyhedral(c);
    r.polyhedral_complex = k.has_value();
    r.polyhedral_map = k && is_polyhedral_map(*k);
    if (!r.polyhedral_map) return r;

    r.orientable = is_orientable(*k);
    r.surface = classify_surface(r.euler, *r.orientable);
    if (full) {
        r.automorphisms = automorphism_group(*k);
        r.combinatorially_regular = is_combinatorially_regular(*r.automorphisms);
        r.self_dual = is_self_dual(*k);
    }
    return r;
}

inline Json surface_to_json(const SurfaceClass& s)
{
    Json out = Json::object();
    out["name"] = s.name;
    out["euler"] = s.euler;
    out["orientable"] = s.orientable;
    out["genus"] = s.genus;
    return out;
}

inline Json to_json(const AnalysisReport& r)
{
    Json out = Json::object();
    out["name"] = r.name;
    out["f_vector"] = {r.f_vector.f0, r.f_vector.f1, r.f_vector.f2};
    out["euler"] = r.euler;
    if (r.equivelar_type) out["equivelar_type"] = {{"p", r.equivelar_type->p}, {"q", r.equivelar_type->q}};
    out["polyhedral_complex"] = r.polyhedral_complex;
    out["connected"] = r.connected;
    out["polyhedral_map"] = r.polyhedral_map;
    out["weakly_neighbourly"] = r.weakly_neighbourly;
    out["diagonal_count"] = r.diagonal_count;
    out["pattern_manifold"] = r.pattern_manifold;
    out["pattern_euler"] = r.pattern_euler;
    if (r.pattern_surface) out["pattern_surface"] = surface_to_json(*r.pattern_surface);
    if (r.orientable) out["orientable"] = *r.orientable;
    if (r.surface) out["surface"] = surface_to_json(*r.surface);
    if (r.automorphisms) {
        out["automorphism_order"] = r.automorphisms->order;
        out["automorphisms"] = automorphism_report(*r.automorphisms);
    }
    if (r.combinatorially_regular) out["combinatorially_regular"] = *r.combinatorially_regular;
    if (r.self_dual) out["self_dual"] = *r.self_dual;
    return out;
}

/// Aligned "key  value" listing for terminals.
inline std::string to_text(const AnalysisReport& r)
{
    std::ostringstream os;
    auto line = [&](const std::string& key, const std::string& value) {
        os << key << std::string(key.size() < 26 ? 26 - key.size() : 1, ' ') << value << "\n";
    };
    auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
    line("name", r.name.empty() ? "-" : r.name);
    line("f-vector", "(" + std::to_string(r.f_vector.f0) + ", " + std::to_string(r.f_vector.f1) + ", " +
                         std::to_string(r.f_vector.f2) + ")");
    line("euler characteristic", std::to_string(r.euler));
    line("equivelar type", r.equivelar_type ? "{" + std::to_string(r.equivelar_type->p) + "," +
                                                   std::to_string(r.equivelar_type->q) + "}"
                                             : "-");
    line("polyhedral complex", yes_no(r.polyhedral_complex));
    line("connected", yes_no(r.connected));
    line("polyhedral map", yes_no(r.polyhedral_map));
    line("weakly neighbourly", yes_no(r.weakly_neighbourly));
    line("diagonals", std::to_string(r.diagonal_count));
    line("bar complex manifold", yes_no(r.pattern_manifold));
    line("bar complex euler", std::to_string(r.pattern_euler));
    if (r.pattern_surface) line("bar complex surface", r.pattern_surface->name);
    if (r.orientable) line("orientable", yes_no(*r.orientable));
    if (r.surface) line("surface", r.surface->name);
    if (r.automorphisms) {
        line("automorphism order", std::to_string(r.automorphisms->order));
        line("flags", std::to_string(r.automorphisms->flags));
        const auto t = transitivity(*r.automorphisms);
        line("vertex transitive", yes_no(t.vertex_transitive));
        line("face transitive", yes_no(t.face_transitive));
    }
    if (r.combinatorially_regular) line("combinatorially regular", yes_no(*r.combinatorially_regular));
    if (r.self_dual) line("self dual", yes_no(*r.self_dual));
    return os.str();
}

} // namespace equivelar

#endif // EQUIVELAR_REPORT_HPP
