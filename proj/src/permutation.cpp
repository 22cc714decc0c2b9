#include "harmonics/permutation.hpp"

#include <numeric>

namespace harmonics {

Permutation Permutation::identity(int n) {
    if (n < 1)
        throw DomainError("permutation: order must be at least 1");
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::reversal(int n) {
    if (n < 1)
        throw DomainError("permutation: order must be at least 1");
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)] = n - 1 - i;
    return Permutation(std::move(m));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    if (n < 1)
        throw DomainError("permutation: order must be at least 1");
    std::vector<int> m(images.size());
    std::vector<char> seen(images.size(), 0);
    for (int i = 0; i < n; ++i) {
        const int v = images[static_cast<std::size_t>(i)];
        if (v < 1 || v > n)
            throw DomainError("permutation: image " + std::to_string(v) +
                              " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)])
            throw DomainError("permutation: image " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v - 1)] = 1;
        m[static_cast<std::size_t>(i)] = v - 1;
    }
    return Permutation(std::move(m));
}

std::vector<int> Permutation::to_one_based() const {
    std::vector<int> out(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        out[i] = map_[i] + 1;
    return out;
}

Eigen::MatrixXi Permutation::to_matrix() const {
    const int n = size();
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i)
        m(i, map_[static_cast<std::size_t>(i)]) = 1;
    return m;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw DomainError("compose: size mismatch");
    const int n = p.size();
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        images[static_cast<std::size_t>(i - 1)] = q.image(p.image(i));
    return Permutation::from_one_based(images);
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        images[static_cast<std::size_t>(p.image(i) - 1)] = i;
    return Permutation::from_one_based(images);
}

Permutation power(const Permutation& p, std::uint64_t k) {
    Permutation result = Permutation::identity(p.size());
    Permutation base = p;
    while (k > 0) {
        if (k & 1)
            result = compose(result, base);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

std::vector<int> cycle_lengths(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> lengths;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)])
            continue;
        int len = 0;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur - 1)] = 1;
            cur = p.image(cur);
            ++len;
        } while (cur != start);
        lengths.push_back(len);
    }
    return lengths;
}

std::uint64_t order_of(const Permutation& p) {
    std::uint64_t result = 1;
    for (int len : cycle_lengths(p)) {
        const std::uint64_t l = static_cast<std::uint64_t>(len);
        const std::uint64_t g = std::gcd(result, l);
        const std::uint64_t factor = l / g;
        if (result > UINT64_MAX / factor)
            throw Error("order_of: overflow computing lcm of cycle lengths");
        result *= factor;
    }
    return result;
}

bool is_single_cycle(const Permutation& p) {
    return cycle_lengths(p).size() == 1;
}

Eigen::RowVectorXi act_on_vector(const Eigen::RowVectorXi& v, const Permutation& p) {
    if (static_cast<int>(v.size()) != p.size())
        throw DomainError("act_on_vector: vector length does not match permutation order");
    const int n = p.size();
    Eigen::RowVectorXi out(n);
    const std::vector<int>& m = p.raw();
    for (int i = 0; i < n; ++i)
        out(m[static_cast<std::size_t>(i)]) = v(i);
    return out;
}

} // namespace harmonics
