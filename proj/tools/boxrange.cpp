// boxrange: analyze finite Kripke frames from the command line.
//
//   boxrange analyze FRAME [--reverse] [--json] [--timing]
//   boxrange range FRAME
//   boxrange generators FRAME
//   boxrange tame FRAME
//
// Exit status: 0 success, 1 parse or usage error, 2 enumeration cap exceeded.

#include "boxrange/boxrange.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitCap = 2;

struct Options {
    std::string path;
    bool reverse = false;
    bool json = false;
    bool timing = false;
    std::size_t cap_points = boxrange::Caps{}.points;
    std::size_t cap_squarefree = boxrange::Caps{}.squarefree;
    std::size_t cap_lattice = boxrange::Caps{}.lattice;
};

boxrange::Caps caps_from(const Options &opt) {
    const boxrange::Caps defaults;
    boxrange::Caps caps;
    caps.points = opt.cap_points;
    caps.squarefree = opt.cap_squarefree;
    caps.lattice = opt.cap_lattice;
    auto warn = [](const char *flag, std::size_t value, std::size_t dflt) {
        if (value > dflt)
            std::cerr << "warning: " << flag << " " << value << " raises the default cap of "
                      << dflt << "; enumeration cost grows exponentially\n";
    };
    warn("--cap-points", caps.points, defaults.points);
    warn("--cap-squarefree", caps.squarefree, defaults.squarefree);
    warn("--cap-lattice", caps.lattice, defaults.lattice);
    return caps;
}

// The whole document is rendered before anything reaches stdout.
void emit(const std::string &text) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
}

std::string render(const boxrange::ordered_json &doc) { return doc.dump(2) + "\n"; }

int run(const std::string &command, const Options &opt) {
    using namespace boxrange;
    const Caps caps = caps_from(opt);
    const KripkeFrame input = load_frame(opt.path);
    const KripkeFrame frame = opt.reverse ? reverse(input) : input;

    if (command == "analyze") {
        // analyze() applies the reversal itself so the report records it.
        const FrameReport report = analyze(input, caps, opt.reverse);
        emit(opt.json ? render(report_to_json(report, opt.timing))
                      : report_to_text(report, opt.timing));
    } else if (command == "range") {
        const RangeSet range = box_range(frame, caps);
        if (opt.json) {
            emit(render(range_to_json(range)));
        } else {
            std::string out;
            for (const auto &p : range)
                out += p.to_string() + "\n";
            emit(out);
        }
    } else if (command == "generators") {
        const GeneratorSet gens = ideal_generators(frame, caps);
        emit(opt.json ? render(gens_to_json(gens)) : generators_to_text(gens));
    } else if (command == "tame") {
        const TamenessVerdict verdict = is_tame(frame, caps);
        emit(opt.json ? render(tameness_to_json(verdict)) : tameness_to_text(verdict));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Modal box operator range and binomial-ideal analysis of finite Kripke frames"};
    app.require_subcommand(1);
    Options opt;

    for (const char *name : {"analyze", "range", "generators", "tame"}) {
        auto *sub = app.add_subcommand(name);
        sub->add_option("frame", opt.path, "frame file (JSON or edge list)")->required();
        sub->add_flag("--reverse", opt.reverse, "transpose the accessibility relation first");
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--cap-points", opt.cap_points, "max worlds for 2^K enumerations");
        sub->add_option("--cap-squarefree", opt.cap_squarefree,
                        "max worlds for square-free exponent enumerations");
        sub->add_option("--cap-lattice", opt.cap_lattice,
                        "max worlds for V(J) point enumeration");
        if (std::string(name) == "analyze")
            sub->add_flag("--timing", opt.timing, "include per-analysis timings");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt);
    } catch (const boxrange::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const boxrange::FrameError &e) {
        std::cerr << "invalid frame: " << e.what() << "\n";
        return kExitParse;
    } catch (const boxrange::CapExceeded &e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    }
}
