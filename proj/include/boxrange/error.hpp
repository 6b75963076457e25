#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boxrange {

/// Invalid frame construction or an out-of-range world index.
class FrameError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration was requested on a frame larger than the configured cap.
class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(std::string analysis, std::size_t cap, std::size_t requested)
        : std::runtime_error(analysis + ": world count " + std::to_string(requested) +
                             " exceeds cap " + std::to_string(cap)),
          analysis_(std::move(analysis)), cap_(cap), requested_(requested) {}

    const std::string &analysis() const noexcept { return analysis_; }
    std::size_t cap() const noexcept { return cap_; }
    std::size_t requested() const noexcept { return requested_; }

  private:
    std::string analysis_;
    std::size_t cap_;
    std::size_t requested_;
};

/// Malformed frame file. `line` is 0 for JSON input; `field` is empty for
/// edge-list input.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, std::size_t line, std::string field)
        : std::runtime_error(what), line_(line), field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string &field() const noexcept { return field_; }

  private:
    std::size_t line_;
    std::string field_;
};

/// Enumeration limits in number of worlds.
struct Caps {
    /// Analyses that loop over all 2^K valuations.
    std::size_t points = 20;
    /// Square-free exponent enumeration (support classes, ideal points).
    std::size_t squarefree = 14;
    /// Lattice-constrained point enumeration (V(J)).
    std::size_t lattice = 12;
    /// Induced-cycle search.
    std::size_t cycles = 12;

    static constexpr std::size_t max_mask_bits = 64;
};

namespace detail {

inline void require_cap(const char *analysis, std::size_t world_count, std::size_t cap) {
    // 2^K loops index with 64-bit masks.
    const std::size_t hard = Caps::max_mask_bits - 2;
    if (world_count > cap || world_count > hard)
        throw CapExceeded(analysis, cap < hard ? cap : hard, world_count);
}

} // namespace detail
} // namespace boxrange
