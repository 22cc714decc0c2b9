#include "harmonics/permutators.hpp"

namespace harmonics {

int displacement(int i, int n) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("displacement: order must be even and at least 2");
    if (i < 1 || i > n)
        throw DomainError("displacement: position out of range");
    if (i == 1)
        return 1;
    if (i == n)
        return -1;
    return (i % 2 == 0) ? 2 : -2;
}

Permutation harmonic_permutator(int n) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("harmonic_permutator: order must be even and at least 2");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        images[static_cast<std::size_t>(i - 1)] = i + displacement(i, n);
    return Permutation::from_one_based(images);
}

Permutation alternate_permutator_6() {
    return Permutation::from_one_based({5, 3, 1, 6, 4, 2});
}

Permutation reduce_to_odd(const Permutation& p) {
    const int n = p.size();
    if (n < 2 || n % 2 != 0)
        throw DomainError("reduce_to_odd: order must be even and at least 2");

    // Removing position/symbol n leaves at most one hole on each side: the
    // position that mapped to n, and the symbol n mapped to.  Rejoin them.
    const int hole_position = p.image(n) == n ? 0 : inverse(p).image(n);
    const int hole_symbol = p.image(n);

    std::vector<int> images(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n - 1; ++i)
        images[static_cast<std::size_t>(i - 1)] = (i == hole_position) ? hole_symbol : p.image(i);

    try {
        return Permutation::from_one_based(images);
    } catch (const DomainError& e) {
        throw ConstructionError(std::string("reduce_to_odd: result is not a permutation: ") +
                                e.what());
    }
}

} // namespace harmonics
