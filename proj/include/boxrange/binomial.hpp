#pragma once

// Binomial descriptions of range(box): lattice-basis toric binomials,
// support-class binomials, and the 0/1 points of the ideals they generate.

#include "boxrange/error.hpp"
#include "boxrange/frame.hpp"
#include "boxrange/lattice.hpp"
#include "boxrange/modal.hpp"
#include "boxrange/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxrange {

using Exponents = std::vector<std::uint64_t>;

/// z^u - z^v with u, v in N^K.
class Binomial {
  public:
    Binomial(Exponents u, Exponents v) : u_(std::move(u)), v_(std::move(v)) {
        if (u_.size() != v_.size())
            throw std::invalid_argument("binomial exponent vectors differ in length");
        if (u_ == v_)
            throw std::invalid_argument("z^u - z^u is the zero polynomial");
    }

    /// z^{alpha+} - z^{alpha-}.
    static Binomial from_lattice_vector(std::span<const Integer> alpha) {
        Exponents u(alpha.size(), 0), v(alpha.size(), 0);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] > 0)
                u[i] = alpha[i].convert_to<std::uint64_t>();
            else if (alpha[i] < 0)
                v[i] = Integer(-alpha[i]).convert_to<std::uint64_t>();
        }
        return Binomial(std::move(u), std::move(v));
    }

    static Binomial square_free(const Valuation &u, const Valuation &v) {
        u.require_same_size(v);
        Exponents eu(u.size()), ev(v.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            eu[i] = (u.mask() >> i) & 1U;
            ev[i] = (v.mask() >> i) & 1U;
        }
        return Binomial(std::move(eu), std::move(ev));
    }

    /// Square-free binomial from two lists of 1-based variable indices.
    static Binomial from_supports(std::size_t size, std::initializer_list<World> u,
                                  std::initializer_list<World> v) {
        return square_free(Valuation::indicator(size, u), Valuation::indicator(size, v));
    }

    std::size_t size() const noexcept { return u_.size(); }
    const Exponents &u() const noexcept { return u_; }
    const Exponents &v() const noexcept { return v_; }

    bool is_square_free() const {
        auto le1 = [](std::uint64_t e) { return e <= 1; };
        return std::ranges::all_of(u_, le1) && std::ranges::all_of(v_, le1);
    }

    Valuation u_support() const { return support_of(u_); }
    Valuation v_support() const { return support_of(v_); }

    /// u - v as an integer vector.
    IntegerVector difference() const {
        IntegerVector d(u_.size());
        for (std::size_t i = 0; i < u_.size(); ++i)
            d[i] = Integer(u_[i]) - Integer(v_[i]);
        return d;
    }

    /// Both monomials take the same value at the 0/1 point p.
    bool vanishes_at(const Valuation &p) const {
        if (p.size() != size())
            throw std::invalid_argument("point length does not match binomial");
        const bool lhs = (u_support().mask() & ~p.mask()) == 0;
        const bool rhs = (v_support().mask() & ~p.mask()) == 0;
        return lhs == rhs;
    }

    /// "z1*z3 - z2*z4"; the empty monomial renders as "1".
    std::string to_string() const { return monomial(u_) + " - " + monomial(v_); }

    friend bool operator==(const Binomial &, const Binomial &) = default;

  private:
    static Valuation support_of(const Exponents &e) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                bits |= std::uint64_t{1} << i;
        return Valuation::from_mask(e.size(), bits);
    }

    static std::string monomial(const Exponents &e) {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!out.empty())
                out += '*';
            out += 'z' + std::to_string(i + 1);
            if (e[i] > 1)
                out += '^' + std::to_string(e[i]);
        }
        return out.empty() ? "1" : out;
    }

    Exponents u_, v_;
};

namespace detail {

inline Exponents parse_monomial(std::string_view text, std::size_t size) {
    Exponents e(size, 0);
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "1")
        return e;
    auto number = [](std::string_view s) -> std::uint64_t {
        if (s.empty() || !std::ranges::all_of(s, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("expected a number, got '" + std::string(s) + "'");
        return std::stoull(std::string(s));
    };
    while (!text.empty()) {
        const auto star = text.find('*');
        std::string_view factor = trim(text.substr(0, star));
        text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
        if (factor.size() < 2 || factor.front() != 'z')
            throw std::invalid_argument("bad factor '" + std::string(factor) + "'");
        factor.remove_prefix(1);
        std::uint64_t power = 1;
        if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
            power = number(factor.substr(caret + 1));
            factor = factor.substr(0, caret);
        }
        const std::uint64_t index = number(factor);
        if (index < 1 || index > size)
            throw std::invalid_argument("variable z" + std::to_string(index) + " out of range");
        e[index - 1] += power;
    }
    return e;
}

} // namespace detail

/// Inverse of Binomial::to_string for K variables. Also reads "-m1 + m2"
/// as m2 - m1.
inline Binomial parse_binomial(std::string_view text, std::size_t size) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    if (!text.empty() && text.front() == '-') {
        const auto plus = text.find(" + ");
        if (plus == std::string_view::npos)
            throw std::invalid_argument("binomial must have the form 'm1 - m2' or '-m1 + m2'");
        return Binomial(detail::parse_monomial(text.substr(plus + 3), size),
                        detail::parse_monomial(text.substr(1, plus - 1), size));
    }
    const auto minus = text.find(" - ");
    if (minus == std::string_view::npos)
        throw std::invalid_argument("binomial must have the form 'm1 - m2'");
    return Binomial(detail::parse_monomial(text.substr(0, minus), size),
                    detail::parse_monomial(text.substr(minus + 3), size));
}

/// Lexicographic comparison of supports read as ascending index lists.
inline bool support_less(const Valuation &a, const Valuation &b) {
    const auto sa = a.support();
    const auto sb = b.support();
    return std::ranges::lexicographical_compare(sa, sb);
}

/// Union of N(w) over the worlds where u is 1, i.e. supp(E^t u).
inline Valuation support_key(const KripkeFrame &frame, const Valuation &u) {
    detail::require_length(frame, u);
    const auto masks = frame.neighbor_masks();
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if ((u.mask() >> i) & 1U)
            key |= masks[i];
    return Valuation::from_mask(u.size(), key);
}

/// supp(E^t u) = supp(E^t v) for the supports of the two monomials.
inline bool satisfies_support_identity(const KripkeFrame &frame, const Binomial &b) {
    return support_key(frame, b.u_support()) == support_key(frame, b.v_support());
}

struct SupportClass {
    Valuation key;
    std::vector<Valuation> members; // ordered by support_less; front() is the representative

    const Valuation &representative() const { return members.front(); }
};

namespace detail {

inline bool key_less(const Valuation &a, const Valuation &b) {
    if (a.count() != b.count())
        return a.count() < b.count();
    return support_less(a, b);
}

// key of every u in {0,1}^K, indexed by mask.
inline std::vector<std::uint64_t> all_support_keys(const KripkeFrame &frame) {
    const std::size_t k = frame.world_count();
    const auto masks = frame.neighbor_masks();
    std::vector<std::uint64_t> keys(std::size_t{1} << k, 0);
    for (std::uint64_t u = 1; u < keys.size(); ++u) {
        const std::uint64_t low = u & (~u + 1);
        keys[u] = keys[u ^ low] | masks[static_cast<std::size_t>(std::countr_zero(low))];
    }
    return keys;
}

} // namespace detail

/// All u in {0,1}^K grouped by supp(E^t u), ordered by (|key|, key).
inline std::vector<SupportClass> support_classes(const KripkeFrame &frame, const Caps &caps = {}) {
    const std::size_t k = frame.world_count();
    detail::require_cap("support_classes", k, caps.squarefree);
    const auto keys = detail::all_support_keys(frame);
    std::map<std::uint64_t, std::vector<Valuation>> grouped;
    for (std::uint64_t u = 0; u < keys.size(); ++u)
        grouped[keys[u]].push_back(Valuation::from_mask(k, u));
    std::vector<SupportClass> classes;
    classes.reserve(grouped.size());
    for (auto &[key, members] : grouped) {
        std::ranges::sort(members, support_less);
        classes.push_back(SupportClass{Valuation::from_mask(k, key), std::move(members)});
    }
    std::ranges::sort(classes, [](const SupportClass &a, const SupportClass &b) {
        return detail::key_less(a.key, b.key);
    });
    return classes;
}

/// z^{alpha+} - z^{alpha-} for each vector of the canonical basis of ker(E^t).
inline std::vector<Binomial> toric_basis_binomials(const KripkeFrame &frame) {
    std::vector<Binomial> out;
    for (const auto &alpha : frame_kernel(frame).vectors)
        out.push_back(Binomial::from_lattice_vector(alpha));
    return out;
}

enum class Provenance { Boolean, ToricBasis, SupportClass };

inline const char *to_string(Provenance p) {
    switch (p) {
    case Provenance::Boolean: return "boolean";
    case Provenance::ToricBasis: return "toric_basis";
    case Provenance::SupportClass: return "support_class";
    }
    return "?";
}

struct GeneratorSet {
    std::size_t boolean_count = 0; // z_w^2 - z_w for w = 1..K, implicit
    std::vector<Binomial> toric_basis;
    std::vector<Binomial> class_part;

    /// Explicit binomials tagged with where they came from.
    std::vector<std::pair<Provenance, Binomial>> entries() const {
        std::vector<std::pair<Provenance, Binomial>> out;
        for (const auto &b : toric_basis)
            out.emplace_back(Provenance::ToricBasis, b);
        for (const auto &b : class_part)
            out.emplace_back(Provenance::SupportClass, b);
        return out;
    }
};

namespace detail {

// Modulo z_w^2 - z_w, z^m (z^a - z^b) = z^(a|m) - z^(b|m). True if some m
// turns a - b into u - r.
inline bool is_boolean_multiple(std::uint64_t u, std::uint64_t r, std::uint64_t a,
                                std::uint64_t b) {
    return (a & ~u) == 0 && (b & ~r) == 0 && (u & ~a & ~r) == 0 && (r & ~b & ~u) == 0;
}

} // namespace detail

/// Boolean relations, the lattice-basis binomials for reporting, and the
/// class binomials z^u - z^r (u a non-representative member of a support
/// class with representative r). A class binomial is left out when, modulo
/// the boolean relations, it is a monomial multiple of one already listed;
/// the ideal is the same. The class binomials cut out range(box) in {0,1}^K.
inline GeneratorSet ideal_generators(const KripkeFrame &frame, const Caps &caps = {}) {
    GeneratorSet gens;
    gens.boolean_count = frame.world_count();
    gens.toric_basis = toric_basis_binomials(frame);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> kept;
    for (const auto &cls : support_classes(frame, caps)) {
        const std::uint64_t r = cls.representative().mask();
        for (std::size_t i = 1; i < cls.members.size(); ++i) {
            const std::uint64_t u = cls.members[i].mask();
            const bool implied = std::ranges::any_of(kept, [&](const auto &ab) {
                return detail::is_boolean_multiple(u, r, ab.first, ab.second);
            });
            if (implied)
                continue;
            kept.emplace_back(u, r);
            gens.class_part.push_back(Binomial::square_free(cls.members[i], cls.representative()));
        }
    }
    return gens;
}

/// 0/1 points on which, for every support class, the monomials z^u of its
/// members all take the same value.
inline RangeSet points_of_ideal(const KripkeFrame &frame, const Caps &caps = {}) {
    const std::size_t k = frame.world_count();
    detail::require_cap("points_of_ideal", k, caps.squarefree);
    const auto keys = detail::all_support_keys(frame);
    std::map<std::uint64_t, std::size_t> class_index;
    std::vector<std::uint32_t> class_of(keys.size());
    std::vector<std::uint32_t> class_size;
    for (std::uint64_t u = 0; u < keys.size(); ++u) {
        auto [it, inserted] = class_index.try_emplace(keys[u], class_size.size());
        if (inserted)
            class_size.push_back(0);
        class_of[u] = static_cast<std::uint32_t>(it->second);
        ++class_size[it->second];
    }
    std::vector<std::uint32_t> hits(class_size.size(), 0);
    std::vector<std::uint32_t> touched;
    std::vector<Valuation> points;
    for (std::uint64_t b = 0; b < keys.size(); ++b) {
        // z^u(b) = 1 exactly for the submasks u of b.
        touched.clear();
        for (std::uint64_t u = b;; u = (u - 1) & b) {
            const auto c = class_of[u];
            if (hits[c]++ == 0)
                touched.push_back(c);
            if (u == 0)
                break;
        }
        bool consistent = true;
        for (auto c : touched) {
            consistent = consistent && hits[c] == class_size[c];
            hits[c] = 0;
        }
        if (consistent)
            points.push_back(Valuation::from_mask(k, b));
    }
    return RangeSet(std::move(points));
}

namespace detail {

// Some kernel vector has positive part inside `support` but a negative part
// that leaves it, so z^{alpha+} = 1 and z^{alpha-} = 0 at the point.
inline bool separated_by_kernel(const LatticeBasis &basis, std::uint64_t support,
                                std::uint64_t active) {
    const std::uint64_t outside = active & ~support;
    for (std::size_t j = 0; j < basis.dimension; ++j)
        if (((outside >> j) & 1U) && sign_feasible_mask(basis, support, j))
            return true;
    return false;
}

} // namespace detail

/// 0/1 points of J = <z_w^2 - z_w> + toric ideal of E: no kernel vector
/// leaves exactly one of z^{alpha+}, z^{alpha-} equal to 1. The orientation
/// with the roles of alpha+ and alpha- exchanged is the query for -alpha,
/// which lies in the same span, so one query per coordinate covers both.
inline RangeSet points_of_J(const KripkeFrame &frame, const Caps &caps = {}) {
    const std::size_t k = frame.world_count();
    detail::require_cap("points_of_J", k, caps.lattice);
    const LatticeBasis basis = frame_kernel(frame);
    // Coordinates where the kernel is not identically zero.
    std::uint64_t active = 0;
    for (const auto &v : basis.vectors)
        for (std::size_t i = 0; i < k; ++i)
            if (v[i] != 0)
                active |= std::uint64_t{1} << i;
    std::vector<Valuation> points;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t b = 0; b < total; ++b)
        if (!detail::separated_by_kernel(basis, b, active))
            points.push_back(Valuation::from_mask(k, b));
    return RangeSet(std::move(points));
}

struct TamenessVerdict {
    bool is_tame = false;
    RangeSet range_points;
    RangeSet j_points;
    std::optional<Valuation> witness; // smallest point of V(J) outside the range
};

/// Tame iff range(box) = V(J). Every ideal here contains z_w^2 - z_w, so it
/// is radical and equality of 0/1 point sets is equality of ideals.
inline TamenessVerdict is_tame(const KripkeFrame &frame, const Caps &caps = {}) {
    TamenessVerdict verdict;
    verdict.range_points = box_range(frame, caps);
    verdict.j_points = points_of_J(frame, caps);
    verdict.is_tame = verdict.range_points == verdict.j_points;
    for (const auto &p : verdict.j_points) {
        if (!verdict.range_points.contains(p)) {
            verdict.witness = p;
            break;
        }
    }
    return verdict;
}

inline bool binomial_vanishes_on(const Binomial &b, const RangeSet &points) {
    return std::ranges::all_of(points, [&](const Valuation &p) { return b.vanishes_at(p); });
}

/// { 1 - b : b in range(box) }, the range of diamond.
inline RangeSet diamond_range(const KripkeFrame &frame, const Caps &caps = {}) {
    std::vector<Valuation> points;
    for (const auto &b : box_range(frame, caps))
        points.push_back(b.complement());
    return RangeSet(std::move(points));
}

} // namespace boxrange
