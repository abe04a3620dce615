// Build a {5,5} map and a {7,7} pattern, then print a few invariants.

#include <iostream>

#include "equivelar/equivelar.hpp"

int main()
{
    using namespace equivelar;

    const auto m = validate_polyhedral(construct_odd(3, 0));
    const auto f = f_vector(m);
    std::cout << m.name() << ": f = (" << f.f0 << ", " << f.f1 << ", " << f.f2 << "), chi = "
              << euler_characteristic(m) << "\n";
    std::cout << "  polyhedral map: " << std::boolalpha << is_polyhedral_map(m) << "\n";
    std::cout << "  surface: " << classify_surface(euler_characteristic(m), is_orientable(m)).name << "\n";

    const auto group = automorphism_group(m);
    std::cout << "  automorphisms: " << group.order << " of " << group.flags << " flags\n";
    std::cout << "  self dual: " << is_self_dual(m) << "\n";

    const auto pattern = pattern_cycles(sigma_permutation(7), 7);
    const auto bar = bar_complex(pattern);
    std::cout << pattern.name() << " (p = 7): bar complex chi = " << euler_characteristic(bar)
              << ", manifold = " << is_combinatorial_2_manifold(bar)
              << ", orientable = " << is_orientable_simplicial(bar) << "\n";

    std::cout << to_json(pattern).dump() << "\n";
}
