#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "harmonics/errors.hpp"

namespace harmonics {

// A permutation of {1..n}. Stored as the image table; the public interface is
// 1-based throughout, matching the usual combinatorial notation.
//
// Convention (used consistently across the library): permutations act on
// row vectors from the right, i.e. acting with p sends the entry at
// position i to position p(i).  Composition follows the same order:
// compose(p, q) means "apply p, then q".
class Permutation {
public:
    // Identity on {1..n}.
    static Permutation identity(int n);

    // Reversal i -> n+1-i.  Its matrix has ones on the anti-diagonal.
    static Permutation reversal(int n);

    // Build from a 1-based image table; rejects anything that is not a
    // bijection on {1..n}.
    static Permutation from_one_based(const std::vector<int>& images);

    int size() const { return static_cast<int>(map_.size()); }

    // Image of i under the permutation; both sides 1-based.
    int image(int i) const {
        if (i < 1 || i > size())
            throw DomainError("permutation: index out of range");
        return map_[static_cast<std::size_t>(i - 1)] + 1;
    }

    std::vector<int> to_one_based() const;

    // 0/1 permutation matrix M with M(i-1, p(i)-1) = 1.
    Eigen::MatrixXi to_matrix() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.map_ == b.map_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }

    // Internal 0-based table, exposed for the tight loops in this library.
    const std::vector<int>& raw() const { return map_; }

private:
    explicit Permutation(std::vector<int> zero_based) : map_(std::move(zero_based)) {}

    std::vector<int> map_; // map_[i] = image of position i, both 0-based
};

// Apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// p^k for k >= 0 by binary exponentiation; p^0 is the identity.
Permutation power(const Permutation& p, std::uint64_t k);

// Smallest k >= 1 with p^k = identity, via the lcm of cycle lengths.
std::uint64_t order_of(const Permutation& p);

// Cycle lengths in order of each cycle's smallest element.
std::vector<int> cycle_lengths(const Permutation& p);

bool is_single_cycle(const Permutation& p);

// Right action on a row vector: out(p(i)) = v(i).  Equivalent to the
// vector-matrix product v * p.to_matrix().
Eigen::RowVectorXi act_on_vector(const Eigen::RowVectorXi& v, const Permutation& p);

} // namespace harmonics
