#pragma once

// Reference implementations for tests. They go through the adjacency matrix
// and plain vectors, never through the library's bit-mask or lattice code.

#include "boxrange/boxrange.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using boxrange::Edge;
using boxrange::Integer;
using boxrange::KripkeFrame;
using boxrange::Rational;
using boxrange::World;
using Bits = std::vector<int>;

// box a (w) = prod_{w'} a(w')^E(w,w')
inline Bits box(const KripkeFrame &f, const Bits &a) {
    const std::size_t k = f.world_count();
    Bits out(k, 1);
    for (World w = 1; w <= k; ++w) {
        int prod = 1;
        for (World x = 1; x <= k; ++x)
            if (f.adjacency(w, x) == 1)
                prod *= a[x - 1];
        out[w - 1] = prod;
    }
    return out;
}

inline std::vector<Bits> all_bits(std::size_t k) {
    std::vector<Bits> out{Bits{}};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Bits> next;
        for (const auto &prefix : out)
            for (int b : {0, 1}) {
                auto v = prefix;
                v.push_back(b);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out; // lexicographic
}

inline std::set<Bits> range(const KripkeFrame &f) {
    std::set<Bits> out;
    for (const auto &a : all_bits(f.world_count()))
        out.insert(box(f, a));
    return out;
}

inline std::set<Bits> to_bits(const boxrange::RangeSet &r) {
    std::set<Bits> out;
    for (const auto &v : r)
        out.insert(v.to_vector());
    return out;
}

inline bool is_permutation_matrix(const KripkeFrame &f) {
    const std::size_t k = f.world_count();
    for (World i = 1; i <= k; ++i) {
        int row = 0, col = 0;
        for (World j = 1; j <= k; ++j) {
            row += f.adjacency(i, j);
            col += f.adjacency(j, i);
        }
        if (row != 1 || col != 1)
            return false;
    }
    return true;
}

/// Rational nullspace of M (Gauss-Jordan), denominators cleared.
inline std::vector<boxrange::IntegerVector> rational_kernel(const boxrange::IntegerMatrix &m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = Rational(m(r, c));
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[row]);
        const Rational inv = 1 / a[row][c];
        for (auto &x : a[row])
            x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][c] == 0)
                continue;
            const Rational factor = a[r][c];
            for (std::size_t cc = 0; cc < cols; ++cc)
                a[r][cc] -= factor * a[row][cc];
        }
        pivot_of_col[c] = static_cast<int>(row);
        ++row;
    }
    std::vector<boxrange::IntegerVector> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0)
            continue;
        std::vector<Rational> v(cols, 0);
        v[free] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][free];
        Integer lcm = 1;
        for (const auto &x : v)
            lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
        boxrange::IntegerVector iv(cols);
        for (std::size_t c = 0; c < cols; ++c)
            iv[c] = boost::multiprecision::numerator(Rational(v[c] * lcm));
        out.push_back(std::move(iv));
    }
    return out;
}

/// E^t alpha with E the frame's adjacency matrix, computed entrywise.
inline std::vector<Integer> et_times(const KripkeFrame &f, const boxrange::IntegerVector &alpha) {
    const std::size_t k = f.world_count();
    std::vector<Integer> out(k);
    for (World col = 1; col <= k; ++col)
        for (World w = 1; w <= k; ++w)
            out[col - 1] += f.adjacency(w, col) * alpha[w - 1];
    return out;
}

inline bool in_frame_kernel(const KripkeFrame &f, const boxrange::IntegerVector &alpha) {
    for (const auto &x : et_times(f, alpha))
        if (x != 0)
            return false;
    return true;
}

/// Every integer kernel vector with entries in [-bound, bound].
inline std::vector<boxrange::IntegerVector> bounded_kernel_vectors(const KripkeFrame &f, int bound) {
    const std::size_t k = f.world_count();
    std::vector<boxrange::IntegerVector> out;
    boxrange::IntegerVector v(k, -bound);
    while (true) {
        if (in_frame_kernel(f, v))
            out.push_back(v);
        std::size_t i = 0;
        while (i < k && v[i] == bound) {
            v[i] = -bound;
            ++i;
        }
        if (i == k)
            break;
        v[i] += 1;
    }
    return out;
}

// supp(E^t u) from the matrix product.
inline Bits support_key(const KripkeFrame &f, const Bits &u) {
    const std::size_t k = f.world_count();
    Bits key(k, 0);
    for (World col = 1; col <= k; ++col) {
        int s = 0;
        for (World w = 1; w <= k; ++w)
            s += f.adjacency(w, col) * u[w - 1];
        key[col - 1] = s > 0;
    }
    return key;
}

inline boxrange::Valuation to_valuation(const Bits &b) {
    std::string s;
    for (int x : b)
        s.push_back(x ? '1' : '0');
    return boxrange::Valuation::parse(s);
}

/// Frame whose edge set is the bit pattern `code` over the K x K grid.
inline KripkeFrame frame_from_code(std::size_t k, std::uint64_t code) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k * k; ++i)
        if ((code >> i) & 1U)
            edges.emplace_back(i / k + 1, i % k + 1);
    return KripkeFrame(k, edges);
}

inline KripkeFrame random_frame(std::mt19937_64 &rng, std::size_t k, double density) {
    std::bernoulli_distribution edge(density);
    std::vector<Edge> edges;
    for (World i = 1; i <= k; ++i)
        for (World j = 1; j <= k; ++j)
            if (edge(rng))
                edges.emplace_back(i, j);
    return KripkeFrame(k, edges);
}

inline KripkeFrame random_frame(std::mt19937_64 &rng, std::size_t k) {
    std::uniform_real_distribution<double> density(0.05, 0.7);
    return random_frame(rng, k, density(rng));
}

/// Random permutation frame w -> sigma(w).
inline KripkeFrame random_permutation_frame(std::mt19937_64 &rng, std::size_t k) {
    std::vector<World> sigma(k);
    for (std::size_t i = 0; i < k; ++i)
        sigma[i] = i + 1;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Edge> edges;
    for (World w = 1; w <= k; ++w)
        edges.emplace_back(w, sigma[w - 1]);
    return KripkeFrame(k, edges);
}

/// Partition a random subset of worlds into blocks, then give every world
/// either one block as its neighborhood or nothing.
inline KripkeFrame random_partitioning_frame(std::mt19937_64 &rng, std::size_t k) {
    std::uniform_int_distribution<std::size_t> block_count_dist(1, k);
    const std::size_t blocks = block_count_dist(rng);
    std::uniform_int_distribution<std::size_t> block_of(0, blocks); // blocks == unused
    std::vector<std::vector<World>> members(blocks);
    for (World x = 1; x <= k; ++x) {
        const std::size_t b = block_of(rng);
        if (b < blocks)
            members[b].push_back(x);
    }
    std::vector<std::size_t> nonempty;
    for (std::size_t b = 0; b < blocks; ++b)
        if (!members[b].empty())
            nonempty.push_back(b);
    std::vector<Edge> edges;
    std::bernoulli_distribution isolated(0.15);
    for (World w = 1; w <= k; ++w) {
        if (nonempty.empty() || isolated(rng))
            continue;
        std::uniform_int_distribution<std::size_t> pick(0, nonempty.size() - 1);
        for (World x : members[nonempty[pick(rng)]])
            edges.emplace_back(w, x);
    }
    return KripkeFrame(k, edges);
}

inline KripkeFrame relabel(const KripkeFrame &f, const std::vector<World> &sigma) {
    std::vector<Edge> edges;
    for (const auto &[a, b] : f.edges())
        edges.emplace_back(sigma[a - 1], sigma[b - 1]);
    return KripkeFrame(f.world_count(), edges);
}

inline boxrange::Valuation random_valuation(std::mt19937_64 &rng, std::size_t k) {
    return boxrange::Valuation::from_mask(k, rng());
}

} // namespace oracle
