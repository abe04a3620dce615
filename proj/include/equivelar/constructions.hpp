#ifndef EQUIVELAR_CONSTRUCTIONS_HPP
#define EQUIVELAR_CONSTRUCTIONS_HPP

// Generators for the cyclic {k,k}-equivelar map families, the permutations
// used to build (p+1)-vertex {p,p}-patterns, and a few fixed small complexes.
//
// Residues are written 0..N-1 and faces are indexed from 0: face i of a
// family is the translate of face 0 by i.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equivelar/complex.hpp"
#include "equivelar/error.hpp"

namespace equivelar {

/// Caps on family parameters. They bound memory, not validity.
struct ConstructionLimits {
    int max_m = 8;
    int max_p = 101;
};

inline std::int64_t power_of_three(int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

/// b_1..b_k with b_{2l-1} = 3^{l-1} - 1 and b_{2l} = 2*3^{l-1} - 1.
inline std::vector<std::int64_t> b_sequence(int k)
{
    if (k < 1) throw InvalidParameters("b-sequence length must be at least 1");
    std::vector<std::int64_t> b;
    b.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        const int l = (i + 1) / 2;
        b.push_back(i % 2 == 1 ? power_of_three(l - 1) - 1 : 2 * power_of_three(l - 1) - 1);
    }
    return b;
}

namespace detail {

inline void check_family_params(int m, int n, const ConstructionLimits& limits)
{
    if (m < 3) throw InvalidParameters("m must be at least 3, got " + std::to_string(m));
    if (m > limits.max_m) {
        throw InvalidParameters("m = " + std::to_string(m) + " exceeds the cap " + std::to_string(limits.max_m));
    }
    if (n < 0) throw InvalidParameters("n must be non-negative, got " + std::to_string(n));
}

inline CycleCollection translates(const std::vector<std::int64_t>& offsets, std::int64_t modulus, std::string name)
{
    std::vector<std::vector<VertexId>> faces;
    faces.reserve(static_cast<std::size_t>(modulus));
    for (std::int64_t i = 0; i < modulus; ++i) {
        auto& face = faces.emplace_back();
        for (auto o : offsets) face.push_back(static_cast<VertexId>((i + o) % modulus));
    }
    return CycleCollection::from_indexed(faces, std::move(name));
}

} // namespace detail

/// Offsets of face 0 of the odd family M_{2m-1, 2(3^{m-1}+2n-1)}.
inline std::vector<std::int64_t> odd_family_offsets(int m, int n)
{
    auto b = b_sequence(2 * m - 1);
    b[2 * m - 3] += n;     // b_{2m-2} + n
    b[2 * m - 2] += 2 * n; // b_{2m-1} + 2n
    return b;
}

/// Offsets of face 0 of the even family M_{2m, 3^m+2n-1}.
inline std::vector<std::int64_t> even_family_offsets(int m, int n)
{
    auto b = b_sequence(2 * m);
    b[2 * m - 1] += n; // b_{2m} + n
    return b;
}

inline std::int64_t odd_family_order(int m, int n) { return 2 * (power_of_three(m - 1) + 2 * n - 1); }
inline std::int64_t even_family_order(int m, int n) { return power_of_three(m) + 2 * n - 1; }

/// The {2m-1,2m-1}-equivelar map on 2(3^{m-1}+2n-1) vertices.
inline CycleCollection construct_odd(int m, int n, const ConstructionLimits& limits = {})
{
    detail::check_family_params(m, n, limits);
    const auto order = odd_family_order(m, n);
    return detail::translates(odd_family_offsets(m, n), order,
                              "M_{" + std::to_string(2 * m - 1) + "," + std::to_string(order) + "}");
}

/// The {2m,2m}-equivelar map on 3^m+2n-1 vertices.
inline CycleCollection construct_even(int m, int n, const ConstructionLimits& limits = {})
{
    detail::check_family_params(m, n, limits);
    const auto order = even_family_order(m, n);
    return detail::translates(even_family_offsets(m, n), order,
                              "M_{" + std::to_string(2 * m) + "," + std::to_string(order) + "}");
}

inline bool is_prime(int p)
{
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

/// Bijection of {1, ..., size}.
class Permutation {
public:
    /// images[i-1] is the image of i.
    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        std::vector<char> hit(images_.size() + 1, 0);
        for (auto x : images_) {
            if (x < 1 || x > static_cast<int>(images_.size()) || hit[static_cast<std::size_t>(x)]) {
                throw InvalidParameters("not a permutation of 1.." + std::to_string(images_.size()));
            }
            hit[static_cast<std::size_t>(x)] = 1;
        }
    }

    static Permutation identity(int size)
    {
        std::vector<int> images(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) images[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(images));
    }

    /// Identity composed with the given disjoint transpositions.
    static Permutation from_transpositions(int size, const std::vector<std::pair<int, int>>& swaps)
    {
        auto images = identity(size).images_;
        for (auto [a, b] : swaps) std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
        return Permutation(std::move(images));
    }

    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    int size() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

namespace detail {

inline void check_pattern_prime(int p, const ConstructionLimits& limits)
{
    if (p < 3 || !is_prime(p)) throw InvalidParameters(std::to_string(p) + " is not an odd prime");
    if (p > limits.max_p) {
        throw InvalidParameters("p = " + std::to_string(p) + " exceeds the cap " + std::to_string(limits.max_p));
    }
}

} // namespace detail

/// sigma_p = (2, 4k+1)(4, 4k-1)...(2k, 2k+3) for p = 4k+3 > 3.
inline Permutation sigma_permutation(int p, const ConstructionLimits& limits = {})
{
    detail::check_pattern_prime(p, limits);
    if (p % 4 != 3) throw BadResidueClass("sigma needs p = 3 mod 4, got " + std::to_string(p));
    if (p == 3) throw InvalidParameters("sigma is defined for p > 3");
    const int k = (p - 3) / 4;
    std::vector<std::pair<int, int>> swaps;
    for (int j = 1; j <= k; ++j) swaps.emplace_back(2 * j, p - 2 * j);
    return Permutation::from_transpositions(p - 1, swaps);
}

/// rho_p = (1, 4l)(3, 4l-2)...(2l-1, 2l+2) for p = 4l+1.
inline Permutation rho_permutation(int p, const ConstructionLimits& limits = {})
{
    detail::check_pattern_prime(p, limits);
    if (p % 4 != 1) throw BadResidueClass("rho needs p = 1 mod 4, got " + std::to_string(p));
    const int l = (p - 1) / 4;
    std::vector<std::pair<int, int>> swaps;
    for (int j = 1; j <= l; ++j) swaps.emplace_back(2 * j - 1, p - (2 * j - 1));
    return Permutation::from_transpositions(p - 1, swaps);
}

/// sigma_p, rho_p, or the identity for p = 3.
inline Permutation pattern_permutation(int p, const ConstructionLimits& limits = {})
{
    detail::check_pattern_prime(p, limits);
    if (p == 3) return Permutation::identity(2);
    return p % 4 == 3 ? sigma_permutation(p, limits) : rho_permutation(p, limits);
}

/// Outcome of checking the three pattern conditions on a permutation.
struct PPReport {
    bool pp1 = false; ///< pi(i) + pi(p-i) = p for all i
    bool pp2 = false; ///< pi((p-1)/2) = (p-1)/2
    bool pp3 = false; ///< the leading differences hit each class {j, -j} once

    std::optional<int> pp1_witness;       ///< an i with pi(i) + pi(p-i) != p
    std::optional<int> pp2_witness;       ///< the actual value of pi((p-1)/2)
    std::optional<int> pp3_witness_class; ///< least j in 1..(p-1)/2 whose class is not hit exactly once

    /// pi(i+1) - pi(i) for i = 1..(p-1)/2, as signed integers.
    std::vector<int> differences;

    bool all() const { return pp1 && pp2 && pp3; }
};

inline PPReport verify_pp(const Permutation& perm, int p)
{
    if (p < 3 || p % 2 == 0 || perm.size() != p - 1) {
        throw InvalidParameters("permutation of size " + std::to_string(perm.size()) + " does not fit p = " +
                                std::to_string(p));
    }
    PPReport r;
    r.pp1 = true;
    for (int i = 1; i <= p - 1; ++i) {
        if (perm(i) + perm(p - i) != p) {
            r.pp1 = false;
            r.pp1_witness = i;
            break;
        }
    }

    const int half = (p - 1) / 2;
    r.pp2 = perm(half) == half;
    if (!r.pp2) r.pp2_witness = perm(half);

    std::vector<int> hits(static_cast<std::size_t>(half + 1), 0);
    for (int i = 1; i <= half; ++i) {
        const int d = perm(i + 1) - perm(i);
        r.differences.push_back(d);
        const int residue = ((d % p) + p) % p;
        const int cls = std::min(residue, p - residue);
        if (cls > 0) ++hits[static_cast<std::size_t>(cls)];
    }
    r.pp3 = true;
    for (int j = 1; j <= half; ++j) {
        if (hits[static_cast<std::size_t>(j)] != 1) {
            r.pp3 = false;
            r.pp3_witness_class = j;
            break;
        }
    }
    return r;
}

/// Boundary of the 3-simplex.
inline CycleCollection tetrahedron()
{
    return CycleCollection::from_indexed({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, "tetrahedron");
}

/// The 4-cycles (0,1,2,3) and (u,i,i+1,i+3), i in Z_4, of K_5.
inline CycleCollection torus_pattern()
{
    std::vector<std::vector<Label>> faces{{std::int64_t{0}, std::int64_t{1}, std::int64_t{2}, std::int64_t{3}}};
    for (std::int64_t i = 0; i < 4; ++i) faces.push_back({std::string("u"), i, (i + 1) % 4, (i + 3) % 4});
    return build_collection(faces, "C_4");
}

/// The rim (0,...,p-1) and (u, i+pi(1), ..., i+pi(p-1)) for i in Z_p.
///
/// For p = 3 the permutation is the identity and the result is the
/// tetrahedron (vertex u becomes vertex 3).
inline CycleCollection pattern_cycles(const Permutation& perm, int p, const ConstructionLimits& limits = {})
{
    detail::check_pattern_prime(p, limits);
    const auto report = verify_pp(perm, p);
    if (!report.all()) {
        std::string which;
        if (!report.pp1) which += " pp1";
        if (!report.pp2) which += " pp2";
        if (!report.pp3) which += " pp3";
        throw PPViolation("permutation violates" + which);
    }
    if (p == 3) return tetrahedron().renamed("C(pi_3)");

    std::vector<std::vector<Label>> faces;
    auto& rim = faces.emplace_back();
    for (std::int64_t i = 0; i < p; ++i) rim.emplace_back(i);
    for (std::int64_t i = 0; i < p; ++i) {
        auto& f = faces.emplace_back();
        f.emplace_back(std::string("u"));
        for (int k = 1; k <= p - 1; ++k) f.emplace_back((i + perm(k)) % p);
    }
    return build_collection(faces, "C(pi_" + std::to_string(p) + ")");
}

} // namespace equivelar

#endif // EQUIVELAR_CONSTRUCTIONS_HPP
