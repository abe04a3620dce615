// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance <path-to-cli> <work-dir>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "equivelar/equivelar.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace equivelar;
namespace fs = std::filesystem;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string mn(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

std::int64_t odd_euler(int m, int n) { return (power_of_three(m - 1) + 2 * n - 1) * (5 - 2 * m); }
std::int64_t even_euler(int m, int n) { return (power_of_three(m) + 2 * n - 1) * (2 - m); }

Check family_verification()
{
    Check c;
    const auto t0 = Clock::now();
    for (int m = 3; m <= 5; ++m) {
        for (int n = 0; n <= 2; ++n) {
            for (bool odd : {true, false}) {
                const auto col = odd ? construct_odd(m, n) : construct_even(m, n);
                const std::size_t k = odd ? static_cast<std::size_t>(2 * m - 1) : static_cast<std::size_t>(2 * m);
                const auto poly = try_validate_polyhedral(col);
                c.expect(poly.has_value(), col.name() + " is not a polyhedral complex");
                if (!poly) continue;
                c.expect(is_polyhedral_map(*poly), col.name() + " is not a polyhedral map");
                c.expect(equivelar_type(*poly) == EquivelarType{k, k}, col.name() + " has the wrong type");
            }
        }
    }
    const auto t = seconds_since(t0);
    c.expect(t < 10.0, "took " + std::to_string(t) + " s");
    return c;
}

Check euler_characteristics()
{
    Check c;
    for (int m = 3; m <= 5; ++m) {
        for (int n = 0; n <= 2; ++n) {
            c.expect(euler_characteristic(construct_odd(m, n)) == odd_euler(m, n), "odd " + mn(m, n));
            c.expect(euler_characteristic(construct_even(m, n)) == even_euler(m, n), "even " + mn(m, n));
        }
    }
    c.expect(euler_characteristic(construct_odd(3, 0)) == -8, "chi(M_{5,16})");
    c.expect(euler_characteristic(construct_even(3, 0)) == -26, "chi(M_{6,26})");
    c.expect(euler_characteristic(construct_odd(4, 0)) == -78, "chi(M_{7,52})");
    c.expect(euler_characteristic(construct_even(4, 0)) == -160, "chi(M_{8,80})");
    return c;
}

Check self_duality()
{
    Check c;
    const auto t0 = Clock::now();
    for (int m = 3; m <= 4; ++m) {
        for (int n = 0; n <= 2; ++n) {
            for (bool odd : {true, false}) {
                const auto col = odd ? construct_odd(m, n) : construct_even(m, n);
                c.expect(is_self_dual(validate_polyhedral(col)), col.name() + " not self dual");
            }
        }
    }
    for (bool odd : {true, false}) {
        const auto col = odd ? construct_odd(3, 0) : construct_even(3, 0);
        const auto d = dual(validate_polyhedral(col));
        const auto n = static_cast<VertexId>(col.vertex_count());
        std::vector<VertexId> witness(n);
        for (VertexId i = 0; i < n; ++i) witness[i] = (n - i) % n;
        c.expect(is_isomorphism(col, d.collection(), witness), "i -> F_{-i} fails for " + col.name());
    }
    const auto t = seconds_since(t0);
    c.expect(t < 60.0, "took " + std::to_string(t) + " s");
    return c;
}

Check non_regularity()
{
    Check c;
    for (int m = 3; m <= 4; ++m) {
        for (int n = 0; n <= 1; ++n) {
            for (bool odd : {true, false}) {
                const auto col = odd ? construct_odd(m, n) : construct_even(m, n);
                const auto g = automorphism_group(validate_polyhedral(col));
                c.expect(!is_combinatorially_regular(g), col.name() + " is regular");
                const auto t = transitivity(g);
                c.expect(t.vertex_transitive && t.face_transitive, col.name() + " not transitive");
            }
        }
    }
    return c;
}

Check patterns()
{
    Check c;
    const auto t0 = Clock::now();
    for (int p : {5, 7, 11, 13, 17, 19}) {
        const auto perm = p % 4 == 3 ? sigma_permutation(p) : rho_permutation(p);
        c.expect(verify_pp(perm, p).all(), "pp fails for p=" + std::to_string(p));
        const auto col = pattern_cycles(perm, p);
        const auto x = bar_complex(col);
        const auto tag = "p=" + std::to_string(p);
        c.expect(is_connected(col), tag + " not connected");
        c.expect(is_combinatorial_2_manifold(x), tag + " not a manifold");
        c.expect(x.vertex_count() == static_cast<std::size_t>(2 * (p + 1)), tag + " vertex count");
        c.expect(euler_characteristic(x) == static_cast<std::int64_t>(p + 1) * (4 - p) / 2, tag + " euler");
        if (is_combinatorial_2_manifold(x)) c.expect(!is_orientable_simplicial(x), tag + " orientable");
    }
    const auto t = seconds_since(t0);
    c.expect(t < 5.0, "took " + std::to_string(t) + " s");
    return c;
}

Check torus_example()
{
    Check c;
    const auto col = torus_pattern();
    const auto x = bar_complex(col);
    c.expect(euler_characteristic(x) == 0, "euler");
    const bool manifold = is_combinatorial_2_manifold(x);
    c.expect(manifold, "not a manifold");
    if (manifold) {
        const bool orientable = is_orientable_simplicial(x);
        c.expect(orientable, "not orientable");
        if (orientable) c.expect(classify_surface(0, true).name == "torus", "classification");
    }
    try {
        validate_polyhedral(col);
        c.expect(false, "validated as polyhedral");
    } catch (const IntersectionViolation& e) {
        c.expect(e.shared_vertices.size() == 3, "witness size " + std::to_string(e.shared_vertices.size()));
    }
    return c;
}

Check rotation_equivalence()
{
    Check c;
    const auto corpus = fixtures::property_corpus(20240601);
    c.expect(corpus.size() >= 50, "corpus has " + std::to_string(corpus.size()) + " fixtures");
    for (const auto& col : corpus) {
        const bool rotation = non_rotational_vertices(col, RotationThreshold::pattern).empty();
        c.expect(rotation == is_combinatorial_2_manifold(bar_complex(col)), "equivalence fails on " + col.name());
        if (try_validate_polyhedral(col)) {
            const auto b = barycentric_subdivision(col);
            c.expect(euler_characteristic(b) == euler_characteristic(col), "chi(B) differs on " + col.name());
        }
    }
    return c;
}

Check bounds()
{
    Check c;
    for (const auto& col : fixtures::property_corpus(20240601)) {
        const auto t = equivelar_type(col);
        if (!t || t->p != t->q || !is_polyhedral_map(col)) continue;
        c.expect(col.vertex_count() >= (t->p - 1) * (t->p - 1), "f0 bound fails on " + col.name());
    }
    auto total = [](const CycleCollection& col) { return diagonal_count(col) + col.edge_count(); };
    const auto tet = tetrahedron();
    const auto m5 = construct_odd(3, 0);
    const auto m6 = construct_even(3, 0);
    c.expect(total(tet) == oracles::choose2(4), "tetrahedron equality");
    c.expect(total(m5) == oracles::choose2(16), "M_{5,16} equality");
    c.expect(total(m6) < oracles::choose2(26), "M_{6,26} strict");
    c.expect(is_weakly_neighbourly(m5), "M_{5,16} not wnp");
    c.expect(!is_weakly_neighbourly(m6), "M_{6,26} wnp");
    return c;
}

Check oracle_equivalence()
{
    Check c;
    for (const auto& col : {tetrahedron(), fixtures::cube(), fixtures::triangular_prism()}) {
        c.expect(automorphism_group(validate_polyhedral(col)).order == oracles::brute_force_automorphism_count(col),
                 "order differs on " + col.name());
    }
    for (const auto& col : fixtures::property_corpus(20240601)) {
        const auto k = try_validate_polyhedral(col);
        if (!k || !is_polyhedral_map(*k)) continue;
        c.expect(are_isomorphic(dual(dual(*k)), *k).has_value(), "dual(dual) fails on " + col.name());
    }
    return c;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Check determinism(const std::string& cli, const fs::path& work)
{
    Check c;
    fs::remove_all(work);
    fs::create_directories(work);
    const auto m5 = (work / "m5_16.json").string();
    const auto m6 = (work / "m6_26.json").string();
    const auto c4 = (work / "c4.json").string();
    const std::vector<std::string> setup{
        "construct odd --m 3 --n 0 -o " + quote(m5),
        "construct even --m 3 --n 0 -o " + quote(m6),
        "construct torus -o " + quote(c4),
    };
    for (const auto& args : setup) {
        c.expect(std::system((quote(cli) + " " + args + " >/dev/null 2>&1").c_str()) == 0, "setup: " + args);
    }
    const std::vector<std::string> commands{
        "construct odd --m 4 --n 1",
        "construct even --m 3 --n 2",
        "construct pattern --p 13",
        "construct tetrahedron",
        "construct torus",
        "verify " + quote(m6),
        "verify " + quote(c4),
        "analyze " + quote(m5) + " --full --json",
        "analyze " + quote(c4) + " --json",
        "dual " + quote(m5),
        "iso " + quote(m5) + " " + quote(m5) + " --json",
        "iso " + quote(m5) + " " + quote(m6) + " --json",
        "table --max-m 4 --max-n 1 --primes 5,7,11,13 --json",
        "export " + quote(m5) + " --format json",
        "export " + quote(m5) + " --format dot",
        "export " + quote(c4) + " --format bar",
        "export " + quote(m6) + " --format barycentric",
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const auto out = work / ("out_" + std::to_string(i) + "_" + std::to_string(run));
            const int code = std::system((quote(cli) + " " + commands[i] + " >" + quote(out.string()) + " 2>/dev/null").c_str());
            c.expect(code != -1, "could not run: " + commands[i]);
            outputs[run] = slurp(out);
        }
        c.expect(!outputs[0].empty(), "no output: " + commands[i]);
        c.expect(outputs[0] == outputs[1], "differs: " + commands[i]);
    }
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli> <work-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path work = argv[2];

    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"family verification", family_verification},
        {"euler characteristics", euler_characteristics},
        {"self-duality", self_duality},
        {"non-regularity and transitivity", non_regularity},
        {"pattern surfaces", patterns},
        {"torus example", torus_example},
        {"rotation and bar-complex equivalence", rotation_equivalence},
        {"vertex and diagonal bounds", bounds},
        {"oracle equivalence", oracle_equivalence},
        {"deterministic CLI output", [&] { return determinism(cli, work); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Check result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.expect(false, std::string("exception: ") + e.what());
        }
        std::ostringstream line;
        line << (result.ok ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << ": " << criteria[i].first << " ("
             << std::fixed << std::setprecision(2) << seconds_since(t0) << " s)";
        std::cout << line.str() << "\n";
        for (const auto& note : result.notes) std::cout << "    " << note << "\n";
        if (!result.ok) ++failures;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
