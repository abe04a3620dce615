#ifndef EQUIVELAR_TOOLS_CLI_HPP
#define EQUIVELAR_TOOLS_CLI_HPP

// Command-line front end. Exit codes: 0 success or verified, 1 a
// verification came out negative, 2 usage, parse or precondition error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "equivelar/equivelar.hpp"

namespace equivelar::cli {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

/// Reported to the user, mapped to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

inline std::string read_input(const std::string& path, Streams& io)
{
    if (path == "-") return std::string(std::istreambuf_iterator<char>(io.in), {});
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

inline void write_output(const std::string& path, const std::string& text, Streams& io)
{
    if (path == "-") {
        io.out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
}

inline CycleCollection load(const std::string& path, Streams& io)
{
    return collection_from_string(read_input(path, io));
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline const char* mark(bool ok) { return ok ? "✓" : "✗"; }

struct ConstructOptions {
    std::string family;
    int m = 3;
    int n = 0;
    int p = 7;
    std::string output = "-";
};

inline int cmd_construct(const ConstructOptions& o, Streams& io)
{
    CycleCollection c;
    if (o.family == "odd") {
        c = construct_odd(o.m, o.n);
    } else if (o.family == "even") {
        c = construct_even(o.m, o.n);
    } else if (o.family == "pattern") {
        c = pattern_cycles(pattern_permutation(o.p), o.p);
    } else if (o.family == "tetrahedron") {
        c = tetrahedron();
    } else if (o.family == "torus") {
        c = torus_pattern();
    } else {
        throw UsageError("unknown family '" + o.family + "'");
    }
    write_output(o.output, dump(to_json(c)), io);
    return exit_ok;
}

inline int cmd_verify(const std::string& path, const std::string& level, Streams& io)
{
    const auto c = load(path, io);
    std::string witness;
    std::optional<PolygonalComplex> k;
    try {
        k = validate_polyhedral(c);
    } catch (const IntersectionViolation& e) {
        witness = e.what();
    }
    const bool polyhedral = k.has_value();
    const bool connected = is_connected(c);
    const auto bar = bar_complex(c);
    const bool pattern = is_combinatorial_2_manifold(bar);
    const bool map = polyhedral && is_polyhedral_map(*k);

    auto row = [&](const std::string& what, bool ok, const std::string& note = {}) {
        io.out << std::left << std::setw(34) << what << (ok ? "pass" : "fail");
        if (!note.empty()) io.out << "  (" << note << ")";
        io.out << "\n";
    };
    row("connected", connected);
    row("pattern manifold (bar complex)", pattern);
    row("polyhedral complex", polyhedral, witness);
    if (polyhedral) {
        std::string bad;
        for (auto v : non_rotational_vertices(*k, RotationThreshold::map)) {
            bad += (bad.empty() ? "no rotation at " : ", ") + to_string(c.labels()[v]);
        }
        row("polyhedral map", map, bad);
    } else {
        row("polyhedral map", false, "not a polyhedral complex");
    }

    bool ok = false;
    if (level == "pattern") {
        ok = pattern && connected;
    } else if (level == "polyhedral") {
        ok = polyhedral;
    } else if (level == "map") {
        ok = map;
    } else {
        ok = pattern && connected && polyhedral && map;
    }
    return ok ? exit_ok : exit_negative;
}

inline int cmd_analyze(const std::string& path, bool full, bool json, Streams& io)
{
    const auto c = load(path, io);
    if (full) io.err << "note: --full computes the automorphism group and self-duality; cost grows with flags squared\n";
    const auto report = analyze(c, full);
    io.out << (json ? dump(to_json(report)) : to_text(report));
    return exit_ok;
}

inline PolygonalComplex load_map(const std::string& path, Streams& io)
{
    auto c = load(path, io);
    auto k = try_validate_polyhedral(std::move(c));
    if (!k || !is_polyhedral_map(*k)) throw UsageError("'" + path + "' is not a polyhedral map");
    return std::move(*k);
}

inline int cmd_dual(const std::string& path, const std::string& output, Streams& io)
{
    const auto k = load_map(path, io);
    write_output(output, dump(to_json(dual(k).collection())), io);
    return exit_ok;
}

inline int cmd_iso(const std::string& a, const std::string& b, bool json, Streams& io)
{
    if (a == "-" && b == "-") throw UsageError("only one input can be read from stdin");
    auto load_complex = [&](const std::string& path) {
        auto k = try_validate_polyhedral(load(path, io));
        if (!k) throw UsageError("'" + path + "' is not a polyhedral complex");
        return std::move(*k);
    };
    const auto k = load_complex(a);
    const auto l = load_complex(b);
    const auto witness = are_isomorphic(k, l);
    if (json) {
        Json out = Json::object();
        out["isomorphic"] = witness.has_value();
        if (witness) {
            Json pairs = Json::array();
            for (VertexId v = 0; v < witness->size(); ++v) {
                pairs.push_back({label_to_json(k.collection().labels()[v]),
                                 label_to_json(l.collection().labels()[(*witness)[v]])});
            }
            out["witness"] = std::move(pairs);
        }
        io.out << dump(out);
    } else if (witness) {
        io.out << "isomorphic\n";
        for (VertexId v = 0; v < witness->size(); ++v) {
            io.out << "  " << to_string(k.collection().labels()[v]) << " -> "
                   << to_string(l.collection().labels()[(*witness)[v]]) << "\n";
        }
    } else {
        io.out << "not isomorphic\n";
    }
    return witness ? exit_ok : exit_negative;
}

struct TableOptions {
    std::optional<int> max_m;
    std::optional<int> max_n;
    std::vector<int> primes;
    bool json = false;
};

struct MapRow {
    std::string name;
    int m = 0;
    int n = 0;
    std::size_t vertices = 0;
    std::size_t k = 0;
    std::int64_t euler = 0;
    std::int64_t expected_euler = 0;
    bool is_map = false;      // polyhedral map of type {k,k}
    bool self_dual = false;
    bool non_regular = false;
    bool transitive = false;

    bool verified() const { return is_map && euler == expected_euler && self_dual && non_regular && transitive; }
};

inline MapRow verify_family_member(bool odd, int m, int n)
{
    MapRow row;
    row.m = m;
    row.n = n;
    auto c = odd ? construct_odd(m, n) : construct_even(m, n);
    row.name = c.name();
    row.vertices = c.vertex_count();
    row.k = odd ? static_cast<std::size_t>(2 * m - 1) : static_cast<std::size_t>(2 * m);
    row.euler = euler_characteristic(c);
    row.expected_euler = odd ? (power_of_three(m - 1) + 2 * n - 1) * (5 - 2 * m)
                             : (power_of_three(m) + 2 * n - 1) * (2 - m);
    auto k = try_validate_polyhedral(std::move(c));
    row.is_map = k && is_polyhedral_map(*k) && equivelar_type(*k) == EquivelarType{row.k, row.k};
    if (!row.is_map) return row;
    row.self_dual = is_self_dual(*k);
    const auto group = automorphism_group(*k);
    row.non_regular = !is_combinatorially_regular(group);
    const auto t = transitivity(group);
    row.transitive = t.vertex_transitive && t.face_transitive;
    return row;
}

struct PatternRow {
    int p = 0;
    std::string permutation;
    std::size_t vertices = 0;
    std::size_t simplicial_vertices = 0;
    std::int64_t euler = 0;
    std::int64_t expected_euler = 0;
    bool pp = false;
    bool manifold = false;        // connected combinatorial 2-manifold
    bool orientation_ok = false;  // non-orientable for p > 3, sphere for p = 3

    bool verified() const { return pp && manifold && orientation_ok && euler == expected_euler; }
};

inline PatternRow verify_pattern(int p)
{
    PatternRow row;
    row.p = p;
    row.permutation = p == 3 ? "identity" : p % 4 == 3 ? "sigma" : "rho";
    const auto perm = pattern_permutation(p);
    row.pp = verify_pp(perm, p).all();
    if (!row.pp) return row;
    const auto c = pattern_cycles(perm, p);
    row.vertices = c.vertex_count();
    const auto bar = bar_complex(c);
    row.simplicial_vertices = bar.vertex_count();
    row.euler = euler_characteristic(bar);
    row.expected_euler = static_cast<std::int64_t>(p + 1) * (4 - p) / 2;
    row.manifold = is_combinatorial_2_manifold(bar) && is_connected(c);
    if (row.manifold) row.orientation_ok = is_orientable_simplicial(bar) == (p == 3);
    return row;
}

inline int cmd_table(TableOptions o, Streams& io)
{
    if (!o.max_m && !o.max_n && o.primes.empty()) {
        o.max_m = 4;
        o.max_n = 1;
        o.primes = {5, 7, 11, 13};
    }
    if (o.max_n && !o.max_m) o.max_m = 3;
    const int max_n = o.max_n.value_or(0);
    if (o.max_m) {
        if (*o.max_m < 3) throw UsageError("--max-m must be at least 3");
        if (*o.max_m > ConstructionLimits{}.max_m) throw UsageError("--max-m exceeds the cap");
    }
    if (max_n < 0) throw UsageError("--max-n must be non-negative");
    for (int p : o.primes) {
        if (p < 3 || !is_prime(p)) throw UsageError(std::to_string(p) + " is not an odd prime");
        if (p > ConstructionLimits{}.max_p) throw UsageError("prime " + std::to_string(p) + " exceeds the cap");
    }

    std::vector<MapRow> maps;
    if (o.max_m) {
        for (int m = 3; m <= *o.max_m; ++m) {
            for (int n = 0; n <= max_n; ++n) {
                maps.push_back(verify_family_member(true, m, n));
                maps.push_back(verify_family_member(false, m, n));
            }
        }
    }
    std::vector<PatternRow> patterns;
    for (int p : o.primes) patterns.push_back(verify_pattern(p));

    bool all_ok = true;
    for (const auto& r : maps) all_ok = all_ok && r.verified();
    for (const auto& r : patterns) all_ok = all_ok && r.verified();

    if (o.json) {
        Json out = Json::object();
        Json jm = Json::array();
        for (const auto& r : maps) {
            jm.push_back({{"name", r.name}, {"m", r.m}, {"n", r.n}, {"vertices", r.vertices},
                          {"type", {r.k, r.k}}, {"euler", r.euler}, {"expected_euler", r.expected_euler},
                          {"polyhedral_map", r.is_map}, {"self_dual", r.self_dual},
                          {"non_regular", r.non_regular}, {"transitive", r.transitive},
                          {"verified", r.verified()}});
        }
        Json jp = Json::array();
        for (const auto& r : patterns) {
            jp.push_back({{"p", r.p}, {"permutation", r.permutation}, {"vertices", r.vertices},
                          {"simplicial_vertices", r.simplicial_vertices}, {"type", {r.p, r.p}},
                          {"euler", r.euler}, {"expected_euler", r.expected_euler}, {"pp", r.pp},
                          {"manifold", r.manifold}, {"orientation", r.orientation_ok},
                          {"verified", r.verified()}});
        }
        out["maps"] = std::move(jm);
        out["patterns"] = std::move(jp);
        io.out << dump(out);
        return all_ok ? exit_ok : exit_negative;
    }

    auto cell = [&](const std::string& s, int width) { io.out << std::left << std::setw(width) << s; };
    if (!maps.empty()) {
        cell("map", 14), cell("m", 4), cell("n", 4), cell("f0", 6), cell("type", 9), cell("chi", 8),
            cell("expected", 10), cell("map", 5), cell("self-dual", 11), cell("non-regular", 13);
        io.out << "transitive\n";
        for (const auto& r : maps) {
            const auto type = "{" + std::to_string(r.k) + "," + std::to_string(r.k) + "}";
            cell(r.name, 14), cell(std::to_string(r.m), 4), cell(std::to_string(r.n), 4),
                cell(std::to_string(r.vertices), 6), cell(type, 9), cell(std::to_string(r.euler), 8),
                cell(std::to_string(r.expected_euler), 10);
            io.out << mark(r.is_map) << "    " << mark(r.self_dual) << "          " << mark(r.non_regular)
                   << "            " << mark(r.transitive) << "\n";
        }
    }
    if (!patterns.empty()) {
        if (!maps.empty()) io.out << "\n";
        cell("pattern", 14), cell("perm", 10), cell("f0", 6), cell("type", 9), cell("chi", 8),
            cell("expected", 10), cell("pp", 4), cell("manifold", 10);
        io.out << "non-orientable\n";
        for (const auto& r : patterns) {
            const auto type = "{" + std::to_string(r.p) + "," + std::to_string(r.p) + "}";
            cell("C(pi_" + std::to_string(r.p) + ")", 14), cell(r.permutation, 10),
                cell(std::to_string(r.vertices), 6), cell(type, 9), cell(std::to_string(r.euler), 8),
                cell(std::to_string(r.expected_euler), 10);
            io.out << mark(r.pp) << "   " << mark(r.manifold) << "         " << mark(r.orientation_ok) << "\n";
        }
    }
    return all_ok ? exit_ok : exit_negative;
}

inline int cmd_export(const std::string& path, const std::string& format, const std::string& output, Streams& io)
{
    const auto c = load(path, io);
    if (format == "json") {
        write_output(output, dump(to_json(c)), io);
    } else if (format == "dot") {
        write_output(output, to_dot(c), io);
    } else if (format == "bar") {
        write_output(output, dump(to_json(bar_complex(c))), io);
    } else if (format == "barycentric") {
        write_output(output, dump(to_json(barycentric_subdivision(c))), io);
    } else {
        throw UsageError("unknown format '" + format + "'");
    }
    return exit_ok;
}

/// Parse and dispatch. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, Streams io)
{
    CLI::App app{"Construct and verify equivelar polyhedral maps and {p,p}-patterns", "equivelar"};
    app.require_subcommand(1);

    ConstructOptions construct;
    auto* sc = app.add_subcommand("construct", "Write a complex as canonical JSON");
    sc->add_option("family", construct.family, "odd | even | pattern | tetrahedron | torus")->required();
    sc->add_option("--m", construct.m, "family parameter m (>= 3)");
    sc->add_option("--n", construct.n, "family parameter n (>= 0)");
    sc->add_option("--p", construct.p, "odd prime for pattern");
    sc->add_option("-o,--output", construct.output, "output file, - for stdout");

    std::string verify_file;
    std::string verify_level = "all";
    auto* sv = app.add_subcommand("verify", "Check polyhedral, pattern and map-level conditions");
    sv->add_option("file", verify_file, "complex JSON, - for stdin")->required();
    sv->add_option("--level", verify_level, "pattern | polyhedral | map | all")
        ->check(CLI::IsMember({"pattern", "polyhedral", "map", "all"}));

    std::string analyze_file;
    bool analyze_full = false;
    bool analyze_json = false;
    auto* sa = app.add_subcommand("analyze", "Report invariants of a complex");
    sa->add_option("file", analyze_file, "complex JSON, - for stdin")->required();
    sa->add_flag("--full", analyze_full, "also compute automorphisms and self-duality");
    sa->add_flag("--json", analyze_json, "machine-readable output");

    std::string dual_file;
    std::string dual_output = "-";
    auto* sd = app.add_subcommand("dual", "Write the dual of a polyhedral map");
    sd->add_option("file", dual_file, "complex JSON, - for stdin")->required();
    sd->add_option("-o,--output", dual_output, "output file, - for stdout");

    std::string iso_a;
    std::string iso_b;
    bool iso_json = false;
    auto* si = app.add_subcommand("iso", "Test two complexes for isomorphism");
    si->add_option("first", iso_a, "complex JSON, - for stdin")->required();
    si->add_option("second", iso_b, "complex JSON, - for stdin")->required();
    si->add_flag("--json", iso_json, "machine-readable output");

    TableOptions table;
    std::string primes;
    auto* st = app.add_subcommand("table", "Construct and verify a range of family members and patterns");
    st->add_option("--max-m", table.max_m, "largest m for the map families");
    st->add_option("--max-n", table.max_n, "largest n for the map families");
    st->add_option("--primes", primes, "comma-separated odd primes for patterns");
    st->add_flag("--json", table.json, "machine-readable output");

    std::string export_file;
    std::string export_format = "json";
    std::string export_output = "-";
    auto* se = app.add_subcommand("export", "Write a complex as JSON, edge-graph DOT, or a simplicial complex");
    se->add_option("file", export_file, "complex JSON, - for stdin")->required();
    se->add_option("--format", export_format, "json | dot | bar | barycentric");
    se->add_option("-o,--output", export_output, "output file, - for stdout");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("equivelar");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, io.out, io.err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*sc) return cmd_construct(construct, io);
        if (*sv) return cmd_verify(verify_file, verify_level, io);
        if (*sa) return cmd_analyze(analyze_file, analyze_full, analyze_json, io);
        if (*sd) return cmd_dual(dual_file, dual_output, io);
        if (*si) return cmd_iso(iso_a, iso_b, iso_json, io);
        if (*st) {
            std::stringstream ss(primes);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) continue;
                try {
                    std::size_t used = 0;
                    table.primes.push_back(std::stoi(item, &used));
                    if (used != item.size()) throw std::invalid_argument(item);
                } catch (const std::logic_error&) {
                    throw UsageError("bad prime '" + item + "'");
                }
            }
            return cmd_table(table, io);
        }
        if (*se) return cmd_export(export_file, export_format, export_output, io);
    } catch (const Error& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace equivelar::cli

#endif // EQUIVELAR_TOOLS_CLI_HPP
