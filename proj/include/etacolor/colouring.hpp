#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycles.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace etacolor {

/// Vertex colouring: assignment[v] is a colour id in 1..palette.
struct Colouring {
    std::vector<std::uint32_t> assignment;
    std::uint32_t palette = 1;
};

inline void validate_colouring(const Graph& g, const Colouring& col) {
    if (col.assignment.size() != g.num_vertices())
        throw BadInputError("colouring covers " + std::to_string(col.assignment.size()) +
                            " vertices, graph has " + std::to_string(g.num_vertices()));
    if (col.palette < 1) throw BadInputError("palette must be at least 1");
    for (auto c : col.assignment)
        if (c < 1 || c > col.palette)
            throw BadInputError("colour id " + std::to_string(c) + " outside palette 1.." +
                                std::to_string(col.palette));
}

/// Number of distinct colour values actually used.
inline std::uint32_t colours_used(const Colouring& col) {
    std::vector<std::uint32_t> vals(col.assignment);
    std::sort(vals.begin(), vals.end());
    return static_cast<std::uint32_t>(std::unique(vals.begin(), vals.end()) - vals.begin());
}

/// True iff no edge joins two same-coloured vertices.
inline bool is_proper(const Graph& g, const Colouring& col) {
    validate_colouring(g, col);
    for (auto [u, v] : g.edges())
        if (col.assignment[u] == col.assignment[v]) return false;
    return true;
}

/// Verdict on whether a colouring leaves at most an eta fraction of the
/// cycles of length >= c with fewer than c distinct colours. Counts cover
/// the enumerated portion only; `truncated` marks a capped census, in which
/// case `passes` is the verdict on what was seen (approximate).
struct AcyclicityReport {
    std::uint64_t cycles_total = 0;  ///< cycles of length >= c reached by the census
    std::uint64_t cycles_bad = 0;    ///< of those, cycles with <= c-1 distinct colours
    Rational bad_fraction{0, 1};     ///< exact cycles_bad / cycles_total (0 when no cycles)
    bool proper = false;
    bool passes = false;
    std::vector<Cycle> witnesses;  ///< up to witness_cap bad cycles
    bool truncated = false;
};

struct VerifyOptions {
    std::uint64_t cycle_cap = 1'000'000;  ///< stop censusing after this many cycles
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::size_t max_len = 0;  ///< 0 means up to n
    std::size_t witness_cap = 8;
};

/// Checks a colouring against the cycle-colour requirement: proper, and at
/// most an eta fraction of the simple cycles of length >= c carry <= c-1
/// distinct colours. The fraction comparison is exact rational arithmetic;
/// zero censused cycles passes vacuously (when proper). Budget exhaustion
/// surfaces as truncated=true, never an exception.
inline AcyclicityReport verify_colouring(const Graph& g, const Colouring& col, const Rational& eta,
                                         std::size_t c, const VerifyOptions& opts = {}) {
    if (!(Rational{0, 1} <= eta) || !(eta < Rational{1, 1}))
        throw BadInputError("eta must lie in [0,1), got " + eta.str());
    if (c < 3) throw BadInputError("cycle-length threshold c must be at least 3");
    validate_colouring(g, col);

    AcyclicityReport report;
    report.proper = is_proper(g, col);

    // Distinct-colour counting with a generation-stamped scratch array so a
    // big palette costs no per-cycle clearing.
    std::vector<std::uint32_t> stamp(static_cast<std::size_t>(col.palette) + 1, 0);
    std::uint32_t generation = 0;
    auto distinct_colours = [&](const Cycle& cyc) {
        ++generation;
        std::size_t d = 0;
        for (auto v : cyc) {
            auto colour = col.assignment[v];
            if (stamp[colour] != generation) {
                stamp[colour] = generation;
                ++d;
            }
        }
        return d;
    };

    const std::size_t max_len =
        opts.max_len == 0 ? g.num_vertices() : std::min(opts.max_len, g.num_vertices());
    if (c <= max_len) {
        detail::CycleSearch search{g, c, max_len, opts.node_budget};
        search.run([&](const Cycle& cyc) {
            if (report.cycles_total >= opts.cycle_cap) {
                report.truncated = true;
                return false;
            }
            ++report.cycles_total;
            if (distinct_colours(cyc) <= c - 1) {
                ++report.cycles_bad;
                if (report.witnesses.size() < opts.witness_cap) report.witnesses.push_back(cyc);
            }
            return true;
        });
        if (search.truncated) report.truncated = true;
    }

    if (report.cycles_total > 0)
        report.bad_fraction = Rational{static_cast<std::int64_t>(report.cycles_bad),
                                       static_cast<std::int64_t>(report.cycles_total)};
    report.passes = report.proper && leq_scaled(report.cycles_bad, eta, report.cycles_total);
    return report;
}

/// Groups vertices by colour; classes[i] lists the vertices coloured i+1,
/// sorted ascending (possibly empty for unused colour ids).
inline std::vector<std::vector<std::uint32_t>> colour_classes(const Colouring& col) {
    std::vector<std::vector<std::uint32_t>> classes(col.palette);
    for (std::uint32_t v = 0; v < col.assignment.size(); ++v)
        classes[col.assignment[v] - 1].push_back(v);
    return classes;
}

/// Parses the colouring text format: optional header "palette k", then lines
/// "vertex colour". Palette defaults to the maximum colour seen.
inline Colouring parse_colouring(std::istream& in, std::size_t n) {
    Colouring col;
    col.assignment.assign(n, 0);
    col.palette = 0;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream row(line);
        std::string first;
        row >> first;
        if (first == "palette") {
            long long k = 0;
            if (!(row >> k) || k < 1) throw BadInputError("colouring: bad palette line");
            col.palette = static_cast<std::uint32_t>(k);
            continue;
        }
        long long v = -1, colour = -1;
        std::istringstream pair_row(line);
        if (!(pair_row >> v >> colour) || v < 0 || colour < 1)
            throw BadInputError("colouring: bad line '" + line + "'");
        if (static_cast<std::size_t>(v) >= n)
            throw BadInputError("colouring: vertex " + std::to_string(v) + " out of range");
        col.assignment[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(colour);
        col.palette = std::max(col.palette, static_cast<std::uint32_t>(colour));
    }
    for (std::size_t v = 0; v < n; ++v)
        if (col.assignment[v] == 0)
            throw BadInputError("colouring: vertex " + std::to_string(v) + " left uncoloured");
    if (col.palette == 0) col.palette = 1;
    return col;
}

inline Colouring parse_colouring_json(const nlohmann::json& j, std::size_t n) {
    if (!j.is_object() || !j.contains("palette") || !j.contains("assignment"))
        throw BadInputError("colouring JSON: need object with 'palette' and 'assignment'");
    Colouring col;
    col.palette = j["palette"].get<std::uint32_t>();
    for (const auto& c : j["assignment"]) col.assignment.push_back(c.get<std::uint32_t>());
    if (col.assignment.size() != n)
        throw BadInputError("colouring JSON: assignment length mismatch");
    return col;
}

inline Colouring load_colouring(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw BadInputError("cannot open colouring file: " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = content.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && content[pos] == '{')
        return parse_colouring_json(nlohmann::json::parse(content), n);
    std::istringstream ss(content);
    return parse_colouring(ss, n);
}

inline void write_colouring(std::ostream& out, const Colouring& col) {
    out << "palette " << col.palette << '\n';
    for (std::size_t v = 0; v < col.assignment.size(); ++v)
        out << v << ' ' << col.assignment[v] << '\n';
}

inline nlohmann::json colouring_to_json(const Colouring& col) {
    return {{"palette", col.palette}, {"assignment", col.assignment}};
}

inline nlohmann::json rational_to_json(const Rational& q) {
    return {{"num", q.num}, {"den", q.den}};
}

inline nlohmann::json report_to_json(const AcyclicityReport& r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(w);
    return {{"cycles_total", r.cycles_total}, {"cycles_bad", r.cycles_bad},
            {"bad_fraction", rational_to_json(r.bad_fraction)}, {"proper", r.proper},
            {"passes", r.passes}, {"witnesses", std::move(witnesses)}, {"truncated", r.truncated}};
}

}  // namespace etacolor
