#pragma once

// One-shot analysis of a frame and its text/JSON renderings.

#include "boxrange/binomial.hpp"
#include "boxrange/frame.hpp"
#include "boxrange/io.hpp"
#include "boxrange/lattice.hpp"
#include "boxrange/modal.hpp"

#include <chrono>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace boxrange {

struct TimingEntry {
    std::string analysis;
    double milliseconds = 0;
};

struct FrameReport {
    KripkeFrame frame{1, std::initializer_list<Edge>{}}; // as analyzed
    bool reversed = false;
    bool is_box_isomorphism = false;
    bool is_partitioning = false;
    TamenessVerdict tameness;
    LatticeBasis kernel;
    GeneratorSet generators;
    std::vector<TimingEntry> timing;

    std::size_t range_size() const { return tameness.range_points.size(); }

    /// Cross-field implications that must hold; returns the violated ones.
    std::vector<std::string> consistency_violations() const {
        std::vector<std::string> out;
        const std::size_t k = frame.world_count();
        if (is_box_isomorphism && range_size() != (std::size_t{1} << k))
            out.emplace_back("isomorphism but range is not all of {0,1}^K");
        if (is_partitioning && !tameness.is_tame)
            out.emplace_back("partitioning but not tame");
        if (!tameness.range_points.subset_of(tameness.j_points))
            out.emplace_back("range(box) not contained in V(J)");
        if (tameness.is_tame == tameness.witness.has_value())
            out.emplace_back("witness present iff not tame");
        if (kernel.size() + rank(adjacency_matrix(frame)) != k)
            out.emplace_back("kernel dimension and rank do not add up to K");
        return out;
    }
};

namespace detail {

template <typename F> auto timed(std::vector<TimingEntry> &log, const char *name, F &&f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    log.push_back({name, elapsed.count()});
    return result;
}

inline ordered_json integer_to_json(const Integer &x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return ordered_json(x.convert_to<long long>());
    return ordered_json(x.str());
}

inline ordered_json exponents_to_json(const Exponents &e) { return ordered_json(e); }

inline ordered_json binomial_to_json(const Binomial &b) {
    return ordered_json{{"u", exponents_to_json(b.u())},
                        {"v", exponents_to_json(b.v())},
                        {"text", b.to_string()}};
}

inline ordered_json binomials_to_json(const std::vector<Binomial> &list) {
    ordered_json out = ordered_json::array();
    for (const auto &b : list)
        out.push_back(binomial_to_json(b));
    return out;
}

inline ordered_json points_to_json(const RangeSet &points) {
    ordered_json out = ordered_json::array();
    for (const auto &p : points)
        out.push_back(valuation_to_json(p));
    return out;
}

} // namespace detail

/// Runs every analysis; throws CapExceeded when the frame is too large for
/// one of the enumerations.
inline FrameReport analyze(const KripkeFrame &input, const Caps &caps = {}, bool reversed = false) {
    FrameReport r;
    r.frame = reversed ? reverse(input) : input;
    r.reversed = reversed;
    const KripkeFrame &f = r.frame;
    r.is_box_isomorphism = detail::timed(r.timing, "is_box_isomorphism",
                                         [&] { return is_box_isomorphism(f, caps); });
    r.is_partitioning =
        detail::timed(r.timing, "is_partitioning", [&] { return is_partitioning(f); });
    r.kernel = detail::timed(r.timing, "kernel_basis", [&] { return frame_kernel(f); });
    r.generators =
        detail::timed(r.timing, "ideal_generators", [&] { return ideal_generators(f, caps); });
    r.tameness = detail::timed(r.timing, "is_tame", [&] { return is_tame(f, caps); });
    return r;
}

inline ordered_json gens_to_json(const GeneratorSet &g) {
    return ordered_json{{"boolean_count", g.boolean_count},
                        {"toric_basis", detail::binomials_to_json(g.toric_basis)},
                        {"class_part_count", g.class_part.size()},
                        {"class_part", detail::binomials_to_json(g.class_part)}};
}

inline ordered_json tameness_to_json(const TamenessVerdict &t) {
    return ordered_json{{"is_tame", t.is_tame},
                        {"witness", t.witness ? ordered_json(t.witness->to_string()) : ordered_json()},
                        {"range_size", t.range_points.size()},
                        {"j_size", t.j_points.size()},
                        {"j_points", t.j_points.to_strings()}};
}

inline ordered_json range_to_json(const RangeSet &points) {
    return ordered_json{{"size", points.size()},
                        {"points", points.to_strings()},
                        {"vectors", detail::points_to_json(points)}};
}

inline ordered_json report_to_json(const FrameReport &r, bool include_timing = false) {
    ordered_json kernel = ordered_json::array();
    for (const auto &v : r.kernel.vectors) {
        ordered_json row = ordered_json::array();
        for (const auto &x : v)
            row.push_back(detail::integer_to_json(x));
        kernel.push_back(std::move(row));
    }
    ordered_json doc{
        {"frame", frame_to_json(r.frame)},
        {"reversed", r.reversed},
        {"summary", {{"worlds", r.frame.world_count()}, {"edges", r.frame.edge_count()}}},
        {"is_box_isomorphism", r.is_box_isomorphism},
        {"is_partitioning", r.is_partitioning},
        {"is_tame", r.tameness.is_tame},
        {"range", range_to_json(r.tameness.range_points)},
        {"kernel_basis", std::move(kernel)},
        {"generators", gens_to_json(r.generators)},
        {"tameness", tameness_to_json(r.tameness)},
    };
    if (include_timing) {
        ordered_json timing = ordered_json::object();
        for (const auto &t : r.timing)
            timing[t.analysis] = t.milliseconds;
        doc["timing_ms"] = std::move(timing);
    }
    return doc;
}

inline std::string generators_to_text(const GeneratorSet &g) {
    std::ostringstream out;
    out << "boolean relations: " << g.boolean_count << " (z_w^2 - z_w)\n";
    out << "toric basis (" << g.toric_basis.size() << "):\n";
    for (const auto &b : g.toric_basis)
        out << "  " << b.to_string() << "\n";
    out << "support-class binomials (" << g.class_part.size() << "):\n";
    for (const auto &b : g.class_part)
        out << "  " << b.to_string() << "\n";
    return out.str();
}

inline std::string tameness_to_text(const TamenessVerdict &t) {
    std::ostringstream out;
    out << "tame: " << (t.is_tame ? "true" : "false") << "\n";
    out << "range size: " << t.range_points.size() << ", V(J) size: " << t.j_points.size() << "\n";
    if (t.witness)
        out << "witness (in V(J), not in range): " << t.witness->to_string() << "\n";
    return out.str();
}

inline std::string report_to_text(const FrameReport &r, bool include_timing = true) {
    std::ostringstream out;
    out << "worlds: " << r.frame.world_count() << ", edges: " << r.frame.edge_count()
        << (r.reversed ? " (reversed)" : "") << "\n";
    out << "box isomorphism: " << (r.is_box_isomorphism ? "true" : "false") << "\n";
    out << "partitioning: " << (r.is_partitioning ? "true" : "false") << "\n";
    out << tameness_to_text(r.tameness);
    out << "range:";
    for (const auto &p : r.tameness.range_points)
        out << " " << p.to_string();
    out << "\n";
    out << "kernel basis (" << r.kernel.size() << "):\n";
    for (const auto &v : r.kernel.vectors) {
        out << "  (";
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? "," : "") << v[i];
        out << ")\n";
    }
    out << generators_to_text(r.generators);
    if (include_timing) {
        out << "timing:";
        for (const auto &t : r.timing)
            out << " " << t.analysis << "=" << t.milliseconds << "ms";
        out << "\n";
    }
    return out.str();
}

} // namespace boxrange
