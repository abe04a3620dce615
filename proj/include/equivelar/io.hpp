#ifndef EQUIVELAR_IO_HPP
#define EQUIVELAR_IO_HPP

// JSON and DOT serialization.
//
// Collections:  {"name": ..., "vertex_labels": [...], "faces": [[i, ...], ...]}
// Simplicial:   {"vertices": [{"tag": ..., "ref": ...}, ...], "triangles": [[i, j, k], ...]}
//
// Output is canonical: faces are written in canonical cyclic form and sorted,
// labels in their canonical order, so equal inputs give identical bytes.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "equivelar/complex.hpp"
#include "equivelar/error.hpp"
#include "equivelar/surface.hpp"
#include "equivelar/symmetry.hpp"

namespace equivelar {

using Json = nlohmann::ordered_json;

inline Json label_to_json(const Label& label)
{
    if (const auto* i = std::get_if<std::int64_t>(&label)) return *i;
    return std::get<std::string>(label);
}

inline Json to_json(const CycleCollection& c)
{
    Json out = Json::object();
    if (!c.name().empty()) out["name"] = c.name();
    Json labels = Json::array();
    for (const auto& l : c.labels()) labels.push_back(label_to_json(l));
    out["vertex_labels"] = std::move(labels);

    std::vector<std::vector<VertexId>> faces;
    faces.reserve(c.face_count());
    for (const auto& f : c.faces()) faces.push_back(f.vertices());
    std::sort(faces.begin(), faces.end());
    out["faces"] = faces;
    return out;
}

inline CycleCollection collection_from_json(const Json& doc)
{
    if (!doc.is_object()) throw ParseError("complex document must be a JSON object");
    if (!doc.contains("vertex_labels") || !doc["vertex_labels"].is_array()) {
        throw ParseError("missing array 'vertex_labels'");
    }
    if (!doc.contains("faces") || !doc["faces"].is_array()) throw ParseError("missing array 'faces'");

    std::vector<Label> labels;
    for (const auto& l : doc["vertex_labels"]) {
        if (l.is_number_integer()) {
            labels.emplace_back(l.get<std::int64_t>());
        } else if (l.is_string()) {
            labels.emplace_back(l.get<std::string>());
        } else {
            throw ParseError("vertex labels must be integers or strings");
        }
    }
    std::vector<std::vector<Label>> faces;
    for (const auto& f : doc["faces"]) {
        if (!f.is_array()) throw ParseError("each face must be an array of indices");
        auto& out = faces.emplace_back();
        for (const auto& idx : f) {
            if (!idx.is_number_unsigned() || idx.get<std::uint64_t>() >= labels.size()) {
                throw ParseError("face entry is not an index into vertex_labels");
            }
            out.push_back(labels[idx.get<std::size_t>()]);
        }
    }
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
        name = doc["name"].get<std::string>();
    }
    return build_collection(faces, std::move(name));
}

inline CycleCollection collection_from_string(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    return collection_from_json(doc);
}

inline Json to_json(const SimplicialComplex2& x)
{
    Json vertices = Json::array();
    for (const auto& v : x.vertices()) {
        Json entry = Json::object();
        entry["tag"] = to_string(v.tag);
        entry["ref"] = v.ref;
        vertices.push_back(std::move(entry));
    }
    Json out = Json::object();
    out["vertices"] = std::move(vertices);
    out["triangles"] = x.triangles();
    return out;
}

inline SimplicialComplex2 simplicial_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("triangles") || !doc["vertices"].is_array() ||
        !doc["triangles"].is_array()) {
        throw ParseError("simplicial complex needs arrays 'vertices' and 'triangles'");
    }
    std::vector<SimplexVertex> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("tag") || !v.contains("ref") || !v["tag"].is_string() ||
            !v["ref"].is_number_unsigned()) {
            throw ParseError("simplicial vertex needs a string 'tag' and an index 'ref'");
        }
        const auto tag = v["tag"].get<std::string>();
        SimplexVertex sv;
        if (tag == "vertex") {
            sv.tag = SimplexTag::vertex;
        } else if (tag == "edge") {
            sv.tag = SimplexTag::edge;
        } else if (tag == "face") {
            sv.tag = SimplexTag::face;
        } else {
            throw ParseError("unknown simplicial vertex tag '" + tag + "'");
        }
        sv.ref = v["ref"].get<std::uint32_t>();
        vertices.push_back(sv);
    }
    std::vector<Triangle> triangles;
    for (const auto& t : doc["triangles"]) {
        if (!t.is_array() || t.size() != 3) throw ParseError("triangle must have three indices");
        Triangle tri{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!t[i].is_number_unsigned()) throw ParseError("triangle entries must be indices");
            tri[i] = t[i].get<std::uint32_t>();
        }
        triangles.push_back(tri);
    }
    return SimplicialComplex2(std::move(vertices), std::move(triangles));
}

inline Json automorphism_report(const AutomorphismGroup& group)
{
    const auto t = transitivity(group);
    Json out = Json::object();
    out["order"] = group.order;
    out["flags"] = group.flags;
    out["regular"] = is_combinatorially_regular(group);
    out["vertex_transitive"] = t.vertex_transitive;
    out["face_transitive"] = t.face_transitive;
    out["generators"] = group.generators;
    return out;
}

/// Edge graph in DOT syntax, nodes named by their labels.
inline std::string to_dot(const CycleCollection& c)
{
    auto quoted = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "graph " << quoted(c.name().empty() ? "complex" : c.name()) << " {\n";
    for (const auto& l : c.labels()) os << "  " << quoted(to_string(l)) << ";\n";
    for (const auto& [a, b] : c.edges()) {
        os << "  " << quoted(to_string(c.labels()[a])) << " -- " << quoted(to_string(c.labels()[b])) << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace equivelar

#endif // EQUIVELAR_IO_HPP
