#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "colouring.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "power.hpp"
#include "rational.hpp"

namespace etacolor {

struct ExactSolverLimits {
    std::size_t vertex_cap = 10;     ///< refuse larger instances unless overridden
    bool override_cap = false;
    std::uint64_t node_budget = 500'000'000;  ///< branch nodes before giving up
    VerifyOptions verify;            ///< used for the acyclicity check at full assignments
};

namespace detail {

/// Enumerates proper assignments with palette exactly-at-most k by
/// branch-and-bound in vertex order, with symmetry breaking: vertex v may
/// only use colours 1..min(k, highest colour used so far + 1), so each
/// colour-class partition is visited once. Acyclicity is checked at full
/// assignments only.
struct ChiSearch {
    const Graph& g;
    const Rational& eta;
    std::size_t c;
    std::uint32_t k;
    const ExactSolverLimits& limits;
    std::uint64_t& nodes;
    Colouring col;

    bool run() {
        col.assignment.assign(g.num_vertices(), 0);
        col.palette = k;
        return place(0, 0);
    }

private:
    bool place(std::uint32_t v, std::uint32_t used) {
        if (v == g.num_vertices())
            return verify_colouring(g, col, eta, c, limits.verify).passes;
        std::uint32_t top = std::min<std::uint32_t>(k, used + 1);
        for (std::uint32_t colour = 1; colour <= top; ++colour) {
            if (++nodes > limits.node_budget)
                throw TimeoutError("exact solver ran out of node budget",
                                   static_cast<long long>(greedy_colouring(power_graph(g, c - 1)).palette));
            bool clash = false;
            for (auto u : g.neighbours(v))
                if (u < v && col.assignment[u] == colour) { clash = true; break; }
            if (clash) continue;
            col.assignment[v] = colour;
            if (place(v + 1, std::max(used, colour))) return true;
        }
        col.assignment[v] = 0;
        return false;
    }
};

}  // namespace detail

/// Minimum palette size admitting a proper colouring in which at most an eta
/// fraction of the cycles of length >= c have fewer than c distinct colours,
/// together with a witness colouring. An edgeless graph needs no colours at
/// all and reports 0 (the returned assignment is the all-1 map so the
/// Colouring object stays well-formed).
inline std::pair<std::uint32_t, Colouring> exact_acyclic_chromatic(
    const Graph& g, const Rational& eta, std::size_t c, const ExactSolverLimits& limits = {}) {
    if (c < 3) throw BadInputError("cycle-length threshold c must be at least 3");
    if (!(Rational{0, 1} <= eta) || !(eta < Rational{1, 1}))
        throw BadInputError("eta must lie in [0,1), got " + eta.str());
    const std::size_t n = g.num_vertices();
    if (n > limits.vertex_cap && !limits.override_cap)
        throw CapExceededError("exact solver limited to n <= " + std::to_string(limits.vertex_cap) +
                               "; pass override_cap to force");

    Colouring trivial;
    trivial.assignment.assign(n, 1);
    trivial.palette = 1;
    if (g.num_edges() == 0) return {0, trivial};

    std::uint64_t nodes = 0;
    for (std::uint32_t k = 2; k <= n; ++k) {
        detail::ChiSearch search{g, eta, c, k, limits, nodes, {}};
        if (search.run()) return {k, search.col};
    }
    throw Error("no colouring found with n colours; unreachable for simple graphs");
}

}  // namespace etacolor
