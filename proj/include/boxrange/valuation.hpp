#pragma once

#include "boxrange/error.hpp"
#include "boxrange/frame.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxrange {

/// Element of {0,1}^K stored as a bit mask: bit w-1 holds the value at world w.
class Valuation {
  public:
    Valuation() = default;

    static Valuation from_mask(std::size_t size, std::uint64_t bits) {
        check_size(size);
        Valuation v;
        v.size_ = size;
        v.bits_ = bits & full_mask(size);
        return v;
    }

    static Valuation zeros(std::size_t size) { return from_mask(size, 0); }
    static Valuation ones(std::size_t size) { return from_mask(size, full_mask(size)); }

    /// "1010" means world 1 true, world 2 false, ...
    static Valuation parse(std::string_view text) {
        check_size(text.size());
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1')
                bits |= std::uint64_t{1} << i;
            else if (text[i] != '0')
                throw std::invalid_argument("valuation string must contain only 0 and 1");
        }
        return from_mask(text.size(), bits);
    }

    static Valuation from_bits(std::initializer_list<int> values) {
        std::string s;
        for (int b : values)
            s.push_back(b ? '1' : '0');
        return parse(s);
    }

    /// Indicator of a set of 1-based worlds.
    static Valuation indicator(std::size_t size, std::initializer_list<World> worlds) {
        std::uint64_t bits = 0;
        for (World w : worlds) {
            if (w < 1 || w > size)
                throw FrameError("world " + std::to_string(w) + " outside valuation");
            bits |= std::uint64_t{1} << (w - 1);
        }
        return from_mask(size, bits);
    }

    std::size_t size() const noexcept { return size_; }
    std::uint64_t mask() const noexcept { return bits_; }

    bool operator[](World w) const {
        if (w < 1 || w > size_)
            throw FrameError("world " + std::to_string(w) + " outside valuation");
        return (bits_ >> (w - 1)) & 1U;
    }

    std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

    std::vector<World> support() const {
        std::vector<World> out;
        for (World w = 1; w <= size_; ++w)
            if ((bits_ >> (w - 1)) & 1U)
                out.push_back(w);
        return out;
    }

    Valuation complement() const { return from_mask(size_, ~bits_); }

    bool leq(const Valuation &other) const {
        require_same_size(other);
        return (bits_ & ~other.bits_) == 0;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if ((bits_ >> i) & 1U)
                s[i] = '1';
        return s;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out(size_);
        for (std::size_t i = 0; i < size_; ++i)
            out[i] = static_cast<int>((bits_ >> i) & 1U);
        return out;
    }

    void require_same_size(const Valuation &other) const {
        if (size_ != other.size_)
            throw std::invalid_argument("valuation lengths differ: " + std::to_string(size_) +
                                        " vs " + std::to_string(other.size_));
    }

    static constexpr std::uint64_t full_mask(std::size_t size) noexcept {
        return size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    }

    friend bool operator==(const Valuation &, const Valuation &) = default;

    /// Lexicographic on the 0/1 string (world 1 most significant).
    friend std::strong_ordering operator<=>(const Valuation &a, const Valuation &b) {
        if (auto c = a.size_ <=> b.size_; c != 0)
            return c;
        if (a.bits_ == b.bits_)
            return std::strong_ordering::equal;
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        const std::uint64_t first = diff & (~diff + 1); // lowest world that differs
        return (a.bits_ & first) ? std::strong_ordering::greater : std::strong_ordering::less;
    }

  private:
    static void check_size(std::size_t size) {
        if (size > Caps::max_mask_bits)
            throw CapExceeded("bitmask valuation", Caps::max_mask_bits, size);
    }

    std::size_t size_ = 0;
    std::uint64_t bits_ = 0;
};

/// Deduplicated, lexicographically sorted set of valuations of one length.
class RangeSet {
  public:
    RangeSet() = default;

    explicit RangeSet(std::vector<Valuation> points) : points_(std::move(points)) {
        for (std::size_t i = 1; i < points_.size(); ++i)
            points_[0].require_same_size(points_[i]);
        std::ranges::sort(points_);
        auto dup = std::ranges::unique(points_);
        points_.erase(dup.begin(), dup.end());
    }

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }
    const std::vector<Valuation> &points() const noexcept { return points_; }
    const Valuation &operator[](std::size_t i) const { return points_[i]; }

    bool contains(const Valuation &v) const { return std::ranges::binary_search(points_, v); }

    bool subset_of(const RangeSet &other) const {
        return std::ranges::includes(other.points_, points_);
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(points_.size());
        for (const auto &p : points_)
            out.push_back(p.to_string());
        return out;
    }

    friend bool operator==(const RangeSet &, const RangeSet &) = default;

  private:
    std::vector<Valuation> points_;
};

} // namespace boxrange
