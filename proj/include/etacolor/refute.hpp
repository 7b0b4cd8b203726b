#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "colouring.hpp"
#include "cycles.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "paths.hpp"

namespace etacolor {

/// Meta-graph over the colour classes of size >= 2. Each such class becomes
/// a meta-vertex carrying its two smallest members as designated
/// representatives; a meta-edge is open when all four cross pairs between
/// the two representative pairs are edges of the host graph.
struct PartitionGraph {
    struct MetaVertex {
        std::uint32_t colour;                 ///< colour id of the class
        std::array<std::uint32_t, 2> reps;    ///< two smallest vertices of the class
        std::size_t class_size;
    };
    std::vector<MetaVertex> classes;  ///< ordered by colour id
    std::vector<std::pair<std::uint32_t, std::uint32_t>> open_edges;  ///< indices into classes, a < b
};

/// Builds the meta-graph for a proper colouring.
inline PartitionGraph build_partition_graph(const Graph& g, const Colouring& col) {
    if (!is_proper(g, col)) throw BadInputError("partition graph needs a proper colouring");
    PartitionGraph pg;
    for (std::uint32_t colour = 1; colour <= col.palette; ++colour) pg.classes.push_back({colour, {0, 0}, 0});
    std::vector<std::size_t> seen(col.palette, 0);
    for (std::uint32_t v = 0; v < col.assignment.size(); ++v) {
        auto idx = col.assignment[v] - 1;
        auto& mv = pg.classes[idx];
        if (seen[idx] < 2) mv.reps[seen[idx]] = v;  // vertices arrive in increasing order
        ++seen[idx];
        ++mv.class_size;
    }
    std::erase_if(pg.classes, [](const PartitionGraph::MetaVertex& mv) { return mv.class_size < 2; });

    auto open = [&](const PartitionGraph::MetaVertex& a, const PartitionGraph::MetaVertex& b) {
        for (auto x : a.reps)
            for (auto y : b.reps)
                if (!g.has_edge(x, y)) return false;
        return true;
    };
    for (std::uint32_t a = 0; a < pg.classes.size(); ++a)
        for (std::uint32_t b = a + 1; b < pg.classes.size(); ++b)
            if (open(pg.classes[a], pg.classes[b])) pg.open_edges.emplace_back(a, b);
    return pg;
}

struct RefuteOptions {
    std::uint64_t path_budget = 50'000'000;  ///< node budget for the meta-path search
    bool allow_odd = false;                  ///< enable the odd-c gadget
};

namespace detail {

/// Expands a meta-path of t edges into a host cycle of length 2t: forward
/// along first representatives, back along second representatives, endpoint
/// classes contributing one vertex each. Every required edge is a cross pair
/// of an open meta-edge.
inline Cycle expand_meta_path(const PartitionGraph& pg, const std::vector<std::uint32_t>& meta_path) {
    Cycle cyc;
    for (auto q : meta_path) cyc.push_back(pg.classes[q].reps[0]);
    for (std::size_t i = meta_path.size() - 2; i >= 1; --i)
        cyc.push_back(pg.classes[meta_path[i]].reps[1]);
    return cyc;
}

}  // namespace detail

/// Tries to certify that a proper colouring is NOT (0,c)-acyclic by
/// exhibiting a cycle of length >= c with at most c-1 distinct colours.
///
/// Route: find a simple path of c/2 meta-edges in the open meta-graph and
/// expand it to a host cycle of c vertices spanning c/2+1 colour classes.
/// For c=4, when no two-edge meta-path exists, a single open meta-edge still
/// yields the bichromatic 4-cycle on both representative pairs. Odd c (gated
/// behind allow_odd): c=3 uses the single-meta-edge 4-cycle (2 <= c-1
/// colours); odd c >= 5 expands a meta-path of (c+1)/2 edges to a cycle of
/// length c+1 with (c+3)/2 <= c-1 colours.
///
/// Returns nothing when no qualifying meta-path was found within budget.
inline std::optional<Cycle> refute_colouring(const Graph& g, const Colouring& col, std::size_t c,
                                             const RefuteOptions& opts = {},
                                             SearchAnswer* search_outcome = nullptr) {
    if (c < 3) throw BadInputError("cycle-length threshold c must be at least 3");
    if (c % 2 != 0 && !opts.allow_odd)
        throw OddCUnsupportedError("refutation for odd c is gated behind allow_odd");

    PartitionGraph pg = build_partition_graph(g, col);
    if (search_outcome) *search_outcome = SearchAnswer::no;

    auto finish = [&](Cycle cyc) -> std::optional<Cycle> {
        // structural self-check: length, host edges, colour count
        std::size_t want_len = c % 2 == 0 ? c : (c == 3 ? 4 : c + 1);
        std::vector<std::uint32_t> cols;
        for (auto v : cyc) cols.push_back(col.assignment[v]);
        std::sort(cols.begin(), cols.end());
        std::size_t distinct = static_cast<std::size_t>(
            std::unique(cols.begin(), cols.end()) - cols.begin());
        if (cyc.size() != want_len || !cycle_in_graph(g, cyc) || distinct > c - 1)
            throw Error("refuter produced a malformed witness; internal invariant broken");
        if (search_outcome) *search_outcome = SearchAnswer::yes;
        return canonical_cycle(std::move(cyc));
    };

    if (pg.classes.empty()) return std::nullopt;
    Graph meta(pg.classes.size(), pg.open_edges);

    const std::size_t meta_edges = c % 2 == 0 ? c / 2 : (c + 1) / 2;
    if (c != 3 && meta_edges >= 2) {
        SearchAnswer answer = SearchAnswer::no;
        auto meta_path = find_path_of_length(meta, meta_edges, opts.path_budget, &answer);
        if (meta_path) return finish(detail::expand_meta_path(pg, *meta_path));
        if (search_outcome) *search_outcome = answer;  // no vs unknown (budget)
        if (c != 4) return std::nullopt;
    }

    // c=4 fallback and the whole c=3 route: one open meta-edge gives the
    // 4-cycle alternating between the two representative pairs.
    if (!pg.open_edges.empty()) {
        auto [a, b] = pg.open_edges.front();
        const auto& ra = pg.classes[a].reps;
        const auto& rb = pg.classes[b].reps;
        return finish({ra[0], rb[0], ra[1], rb[1]});
    }
    return std::nullopt;
}

}  // namespace etacolor
