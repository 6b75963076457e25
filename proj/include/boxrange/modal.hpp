#pragma once

// Box, diamond and the Boolean connectives on 0/1 valuations, with the
// brute-force range of box and the injectivity/surjectivity tests.

#include "boxrange/error.hpp"
#include "boxrange/frame.hpp"
#include "boxrange/valuation.hpp"

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace boxrange {

namespace detail {

inline void require_length(const KripkeFrame &frame, const Valuation &a) {
    if (a.size() != frame.world_count())
        throw std::invalid_argument("valuation has length " + std::to_string(a.size()) +
                                    ", frame has " + std::to_string(frame.world_count()) +
                                    " worlds");
}

// box on raw masks: world w is true iff N(w) is inside a.
inline std::uint64_t box_mask(std::span<const std::uint64_t> neighborhoods, std::uint64_t a) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < neighborhoods.size(); ++i)
        if ((neighborhoods[i] & ~a) == 0)
            out |= std::uint64_t{1} << i;
    return out;
}

} // namespace detail

/// (box a)(w) = product of a(w') over w' in N(w); 1 on an empty neighborhood.
inline Valuation box(const KripkeFrame &frame, const Valuation &a) {
    detail::require_length(frame, a);
    return Valuation::from_mask(a.size(), detail::box_mask(frame.neighbor_masks(), a.mask()));
}

/// 1 - box(1 - a).
inline Valuation diamond(const KripkeFrame &frame, const Valuation &a) {
    return box(frame, a.complement()).complement();
}

enum class Connective { Not, And, Or, Implies, Iff };

/// Pointwise Boolean connective, evaluated through its polynomial form:
/// 1-a, ab, a+b-ab, 1-a+ab, 1-a-b+2ab.
inline Valuation connective(Connective op, const Valuation &a,
                            const std::optional<Valuation> &b = std::nullopt) {
    if (op == Connective::Not) {
        if (b)
            throw std::invalid_argument("'not' takes one operand");
    } else if (!b) {
        throw std::invalid_argument("binary connective needs two operands");
    }
    if (b)
        a.require_same_size(*b);
    std::uint64_t out = 0;
    for (World w = 1; w <= a.size(); ++w) {
        const int x = a[w];
        const int y = b ? static_cast<int>((*b)[w]) : 0;
        int value = 0;
        switch (op) {
        case Connective::Not: value = 1 - x; break;
        case Connective::And: value = x * y; break;
        case Connective::Or: value = x + y - x * y; break;
        case Connective::Implies: value = 1 - x + x * y; break;
        case Connective::Iff: value = 1 - x - y + 2 * x * y; break;
        }
        if (value)
            out |= std::uint64_t{1} << (w - 1);
    }
    return Valuation::from_mask(a.size(), out);
}

/// Pointwise minimum of a nonempty family.
inline Valuation meet(std::span<const Valuation> family) {
    if (family.empty())
        throw std::invalid_argument("meet of an empty family");
    std::uint64_t bits = family.front().mask();
    for (const auto &v : family) {
        family.front().require_same_size(v);
        bits &= v.mask();
    }
    return Valuation::from_mask(family.front().size(), bits);
}

inline Valuation meet(std::initializer_list<Valuation> family) {
    return meet(std::span<const Valuation>(family.begin(), family.size()));
}

/// { box a : a in {0,1}^K } by enumeration.
inline RangeSet box_range(const KripkeFrame &frame, const Caps &caps = {}) {
    const std::size_t k = frame.world_count();
    detail::require_cap("box_range", k, caps.points);
    const auto masks = frame.neighbor_masks();
    const std::uint64_t total = std::uint64_t{1} << k;
    std::vector<std::uint8_t> hit(total, 0);
    for (std::uint64_t a = 0; a < total; ++a)
        hit[detail::box_mask(masks, a)] = 1;
    std::vector<Valuation> points;
    for (std::uint64_t b = 0; b < total; ++b)
        if (hit[b])
            points.push_back(Valuation::from_mask(k, b));
    return RangeSet(std::move(points));
}

/// The least a with box a = b (the meet of all preimages), if b is in range.
inline std::optional<Valuation> minimal_preimage(const KripkeFrame &frame, const Valuation &b,
                                                 const Caps &caps = {}) {
    detail::require_length(frame, b);
    const std::size_t k = frame.world_count();
    detail::require_cap("minimal_preimage", k, caps.points);
    const auto masks = frame.neighbor_masks();
    const std::uint64_t total = std::uint64_t{1} << k;
    std::optional<std::uint64_t> least;
    for (std::uint64_t a = 0; a < total; ++a)
        if (detail::box_mask(masks, a) == b.mask())
            least = least ? (*least & a) : a;
    if (!least)
        return std::nullopt;
    return Valuation::from_mask(k, *least);
}

/// Injectivity and surjectivity through single-value criteria: box is
/// injective iff no single flip a -> a + e_w leaves box a unchanged, and
/// surjective iff every valuation with exactly one 0 is attained.
inline bool is_box_injective(const KripkeFrame &frame, const Caps &caps = {}) {
    const std::size_t k = frame.world_count();
    detail::require_cap("is_box_injective", k, caps.points);
    const auto masks = frame.neighbor_masks();
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t a = 0; a < total; ++a) {
        const std::uint64_t image = detail::box_mask(masks, a);
        for (std::size_t w = 0; w < k; ++w) {
            const std::uint64_t bit = std::uint64_t{1} << w;
            if ((a & bit) == 0 && detail::box_mask(masks, a | bit) == image)
                return false;
        }
    }
    return true;
}

inline bool is_box_surjective(const KripkeFrame &frame, const Caps &caps = {}) {
    const std::size_t k = frame.world_count();
    detail::require_cap("is_box_surjective", k, caps.points);
    const auto masks = frame.neighbor_masks();
    const std::uint64_t total = std::uint64_t{1} << k;
    const std::uint64_t full = Valuation::full_mask(k);
    for (std::size_t w = 0; w < k; ++w) {
        const std::uint64_t coatom = full & ~(std::uint64_t{1} << w);
        bool attained = false;
        for (std::uint64_t a = 0; a < total && !attained; ++a)
            attained = detail::box_mask(masks, a) == coatom;
        if (!attained)
            return false;
    }
    return true;
}

/// Injectivity by counting distinct images.
inline bool is_box_injective_direct(const KripkeFrame &frame, const Caps &caps = {}) {
    return box_range(frame, caps).size() == (std::uint64_t{1} << frame.world_count());
}

/// For a finite frame injective, surjective and bijective coincide.
inline bool is_box_surjective_direct(const KripkeFrame &frame, const Caps &caps = {}) {
    return is_box_injective_direct(frame, caps);
}

/// Box is an isomorphism iff the adjacency matrix is a permutation matrix.
/// Debug builds also run the semantic test when the frame is small enough.
inline bool is_box_isomorphism(const KripkeFrame &frame, const Caps &caps = {}) {
    const bool permutation = is_disjoint_union_of_cycles(frame);
#ifndef NDEBUG
    if (frame.world_count() <= caps.points)
        assert(permutation == is_box_injective(frame, caps));
#else
    (void)caps;
#endif
    return permutation;
}

} // namespace boxrange
