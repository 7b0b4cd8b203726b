#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "colouring.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace etacolor {

/// k-th power of g: u ~ v iff their graph distance in g is between 1 and k.
///
/// With bitset rows available the reachability ball grows by one hop per
/// round as word-parallel unions of neighbour rows; otherwise a depth-capped
/// breadth-first search runs from every vertex.
inline Graph power_graph(const Graph& g, std::size_t k) {
    if (k < 1) throw BadInputError("power index must be at least 1");
    const std::size_t n = g.num_vertices();
    if (k == 1 || n == 0) return g;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    if (g.row(0) != nullptr) {
        const std::size_t words = g.row_words();
        // ball[v] = vertices within distance <= current round of v (plus v itself)
        std::vector<std::uint64_t> ball(n * words), next(n * words);
        for (std::uint32_t v = 0; v < n; ++v) {
            const std::uint64_t* r = g.row(v);
            for (std::size_t w = 0; w < words; ++w) ball[v * words + w] = r[w];
            ball[v * words + v / 64] |= std::uint64_t{1} << (v % 64);
        }
        for (std::size_t round = 2; round <= k; ++round) {
            for (std::uint32_t v = 0; v < n; ++v) {
                std::uint64_t* dst = next.data() + v * words;
                const std::uint64_t* src = ball.data() + v * words;
                for (std::size_t w = 0; w < words; ++w) dst[w] = src[w];
                for (auto u : g.neighbours(v)) {
                    const std::uint64_t* bu = ball.data() + u * words;
                    for (std::size_t w = 0; w < words; ++w) dst[w] |= bu[w];
                }
            }
            ball.swap(next);
        }
        for (std::uint32_t v = 0; v < n; ++v) {
            const std::uint64_t* row = ball.data() + v * words;
            for (std::size_t w = v / 64; w < words; ++w) {
                std::uint64_t bits = row[w];
                if (w == v / 64) bits &= ~((std::uint64_t{2} << (v % 64)) - 1);  // keep u > v
                while (bits) {
                    std::uint32_t u = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                    edges.emplace_back(v, u);
                }
            }
        }
    } else {
        std::vector<std::uint32_t> dist(n);
        std::vector<std::uint32_t> queue;
        for (std::uint32_t s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), UINT32_MAX);
            dist[s] = 0;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                std::uint32_t v = queue[head];
                if (dist[v] == k) continue;
                for (auto u : g.neighbours(v))
                    if (dist[u] == UINT32_MAX) {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                        if (u > s) edges.emplace_back(s, u);
                    }
            }
        }
    }
    return Graph(n, std::move(edges));
}

/// First-fit greedy proper colouring in vertex order; uses at most
/// max_degree + 1 colours.
inline Colouring greedy_colouring(const Graph& g) {
    const std::size_t n = g.num_vertices();
    Colouring col;
    col.assignment.assign(n, 0);
    std::uint32_t used = 0;
    std::vector<std::uint32_t> taken(n + 2, 0);  // colour -> last vertex that stamped it
    for (std::uint32_t v = 0; v < n; ++v) {
        for (auto u : g.neighbours(v))
            if (u < v) taken[col.assignment[u]] = v + 1;
        std::uint32_t c = 1;
        while (taken[c] == v + 1) ++c;
        col.assignment[v] = c;
        used = std::max(used, c);
    }
    col.palette = std::max<std::uint32_t>(used, 1);
    return col;
}

/// Colours g so that every cycle of length >= c is rainbow on any c of its
/// vertices: a proper colouring of the (c-1)-th power gives any c consecutive
/// cycle vertices pairwise distinct colours, so no cycle of length >= c can
/// have fewer than c distinct colours. Uses at most Δ(g^(c-1)) + 1 colours.
inline Colouring power_graph_colouring(const Graph& g, std::size_t c) {
    if (c < 3) throw BadInputError("cycle-length threshold c must be at least 3");
    return greedy_colouring(power_graph(g, c - 1));
}

}  // namespace etacolor
