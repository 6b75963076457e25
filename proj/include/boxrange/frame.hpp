#pragma once

// Finite Kripke frames and their graph-theoretic classifications.

#include "boxrange/error.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace boxrange {

using World = std::size_t; // 1-based
using Edge = std::pair<World, World>;

struct Neighborhood {
    World world;
    std::vector<World> successors; // ascending

    friend bool operator==(const Neighborhood &, const Neighborhood &) = default;
};

/// Vertices x_0..x_n of an induced directed cycle, smallest vertex first.
struct CycleSubframe {
    std::vector<World> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    friend auto operator<=>(const CycleSubframe &, const CycleSubframe &) = default;
};

/// Immutable finite frame on worlds 1..K. Successor lists are the primary
/// representation; the adjacency matrix and bit masks are derived from them.
class KripkeFrame {
  public:
    KripkeFrame(std::size_t world_count, std::span<const Edge> edges) : world_count_(world_count) {
        if (world_count == 0)
            throw FrameError("a frame needs at least one world");
        successors_.resize(world_count);
        for (const auto &[from, to] : edges) {
            if (from < 1 || from > world_count || to < 1 || to > world_count)
                throw FrameError("edge (" + std::to_string(from) + "," + std::to_string(to) +
                                 ") has an endpoint outside 1.." + std::to_string(world_count));
            successors_[from - 1].push_back(to);
        }
        for (auto &row : successors_) {
            std::ranges::sort(row);
            auto dup = std::ranges::unique(row);
            row.erase(dup.begin(), dup.end());
        }
        adjacency_.assign(world_count * world_count, 0);
        for (World w = 1; w <= world_count; ++w)
            for (World s : successors_[w - 1])
                adjacency_[(w - 1) * world_count + (s - 1)] = 1;
        if (world_count <= Caps::max_mask_bits) {
            masks_.assign(world_count, 0);
            for (World w = 1; w <= world_count; ++w)
                for (World s : successors_[w - 1])
                    masks_[w - 1] |= std::uint64_t{1} << (s - 1);
        }
    }

    KripkeFrame(std::size_t world_count, std::initializer_list<Edge> edges)
        : KripkeFrame(world_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t world_count() const noexcept { return world_count_; }

    std::size_t edge_count() const noexcept {
        std::size_t n = 0;
        for (const auto &row : successors_)
            n += row.size();
        return n;
    }

    /// Edges in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (World w = 1; w <= world_count_; ++w)
            for (World s : successors_[w - 1])
                out.emplace_back(w, s);
        return out;
    }

    const std::vector<World> &successors(World w) const {
        check_world(w);
        return successors_[w - 1];
    }

    bool has_edge(World from, World to) const {
        check_world(from);
        check_world(to);
        return adjacency_[(from - 1) * world_count_ + (to - 1)] != 0;
    }

    /// E(w, w') as 0/1.
    int adjacency(World from, World to) const { return has_edge(from, to) ? 1 : 0; }

    /// N(w) as a bit mask (bit i-1 is world i). Requires K <= 64.
    std::uint64_t neighbor_mask(World w) const {
        check_world(w);
        require_masks();
        return masks_[w - 1];
    }

    std::span<const std::uint64_t> neighbor_masks() const {
        require_masks();
        return masks_;
    }

    void check_world(World w) const {
        if (w < 1 || w > world_count_)
            throw FrameError("world " + std::to_string(w) + " outside 1.." +
                             std::to_string(world_count_));
    }

    friend bool operator==(const KripkeFrame &a, const KripkeFrame &b) {
        return a.world_count_ == b.world_count_ && a.successors_ == b.successors_;
    }

  private:
    void require_masks() const {
        if (masks_.empty())
            throw CapExceeded("bitmask valuation", Caps::max_mask_bits, world_count_);
    }

    std::size_t world_count_;
    std::vector<std::vector<World>> successors_;
    std::vector<std::uint8_t> adjacency_;
    std::vector<std::uint64_t> masks_;
};

inline KripkeFrame build_frame(std::size_t world_count, std::span<const Edge> edges) {
    return KripkeFrame(world_count, edges);
}

inline KripkeFrame build_frame(std::size_t world_count, std::initializer_list<Edge> edges) {
    return KripkeFrame(world_count, edges);
}

inline Neighborhood neighbors(const KripkeFrame &frame, World w) {
    return Neighborhood{w, frame.successors(w)};
}

/// Transpose of the accessibility relation.
inline KripkeFrame reverse(const KripkeFrame &frame) {
    std::vector<Edge> flipped;
    for (const auto &[from, to] : frame.edges())
        flipped.emplace_back(to, from);
    return KripkeFrame(frame.world_count(), flipped);
}

/// Subframe on `subset`, relabeled 1..|subset| in increasing order.
inline KripkeFrame induced_subframe(const KripkeFrame &frame, std::span<const World> subset) {
    if (subset.empty())
        throw FrameError("induced subframe of an empty world set");
    std::vector<World> sorted(subset.begin(), subset.end());
    std::ranges::sort(sorted);
    auto dup = std::ranges::unique(sorted);
    sorted.erase(dup.begin(), dup.end());
    std::vector<World> relabel(frame.world_count() + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        frame.check_world(sorted[i]);
        relabel[sorted[i]] = i + 1;
    }
    std::vector<Edge> edges;
    for (const auto &[from, to] : frame.edges())
        if (relabel[from] != 0 && relabel[to] != 0)
            edges.emplace_back(relabel[from], relabel[to]);
    return KripkeFrame(sorted.size(), edges);
}

inline KripkeFrame induced_subframe(const KripkeFrame &frame, std::initializer_list<World> subset) {
    return induced_subframe(frame, std::span<const World>(subset.begin(), subset.size()));
}

namespace detail {

// The induced subframe on `vertices` is a single directed cycle covering all
// of them. Returns the canonical rotation, or an empty vector.
inline std::vector<World> induced_cycle(const KripkeFrame &frame, std::span<const World> vertices) {
    const std::size_t n = vertices.size();
    std::vector<World> next(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!frame.has_edge(vertices[i], vertices[j]))
                continue;
            if (next[i] != n)
                return {}; // out-degree 2 inside the subset
            next[i] = j;
        }
        if (next[i] == n)
            return {};
    }
    // Out-degree 1 everywhere; a single orbit through all n vertices makes
    // the map a cyclic permutation, which forces in-degree 1 as well.
    std::vector<World> cycle;
    cycle.reserve(n);
    std::size_t at = 0;
    for (std::size_t step = 0; step < n; ++step) {
        cycle.push_back(vertices[at]);
        at = next[at];
        if (at == 0 && step + 1 < n)
            return {};
    }
    if (at != 0)
        return {};
    // vertices are ascending, so vertices[0] is already first.
    return cycle;
}

} // namespace detail

/// All induced cycle subframes with at most `max_size` vertices, ordered by
/// size and then vertex list. Loops are cycles of size 1.
inline std::vector<CycleSubframe> find_cycles(const KripkeFrame &frame, std::size_t max_size,
                                              const Caps &caps = {}) {
    const std::size_t k = frame.world_count();
    if (max_size > k)
        throw FrameError("max_size " + std::to_string(max_size) + " exceeds world count " +
                         std::to_string(k));
    detail::require_cap("find_cycles", max_size, caps.cycles);
    std::vector<CycleSubframe> found;
    std::vector<World> subset;
    // Combinations of size r in lexicographic order.
    for (std::size_t r = 1; r <= max_size; ++r) {
        std::vector<std::size_t> idx(r);
        for (std::size_t i = 0; i < r; ++i)
            idx[i] = i;
        while (true) {
            subset.clear();
            for (std::size_t i : idx)
                subset.push_back(i + 1);
            if (auto cycle = detail::induced_cycle(frame, subset); !cycle.empty())
                found.push_back(CycleSubframe{std::move(cycle)});
            std::size_t pos = r;
            while (pos > 0 && idx[pos - 1] == k - r + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < r; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }
    return found;
}

/// The adjacency matrix is a permutation matrix. For finite frames this is
/// the same as the frame being partitioned (worlds and edges) by its cycles.
inline bool is_disjoint_union_of_cycles(const KripkeFrame &frame) {
    const std::size_t k = frame.world_count();
    std::vector<std::size_t> in_degree(k + 1, 0);
    for (World w = 1; w <= k; ++w) {
        const auto &succ = frame.successors(w);
        if (succ.size() != 1)
            return false;
        if (++in_degree[succ.front()] > 1)
            return false;
    }
    return true;
}

/// Every two neighborhoods are either equal or disjoint.
inline bool is_partitioning(const KripkeFrame &frame) {
    const std::size_t k = frame.world_count();
    // owner[x] = some world whose neighborhood contains x
    std::vector<World> owner(k + 1, 0);
    for (World w = 1; w <= k; ++w) {
        const auto &succ = frame.successors(w);
        for (World x : succ) {
            if (owner[x] == 0) {
                owner[x] = w;
            } else if (frame.successors(owner[x]) != succ) {
                return false;
            }
        }
    }
    return true;
}

} // namespace boxrange
