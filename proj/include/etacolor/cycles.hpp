#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace etacolor {

/// A simple cycle in canonical form: the sequence starts at the cycle's
/// minimum vertex and, of the two traversal directions, stores the
/// lexicographically smaller one (equivalently: second element < last).
/// Each simple cycle has exactly one such representation.
using Cycle = std::vector<std::uint32_t>;

/// Rewrites an arbitrary traversal of a simple cycle into canonical form.
inline Cycle canonical_cycle(Cycle c) {
    auto min_it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), min_it, c.end());
    if (c.size() >= 3 && c[1] > c.back())
        std::reverse(c.begin() + 1, c.end());
    return c;
}

/// True when `c` is a simple cycle of g: length >= 3, vertices distinct,
/// consecutive pairs plus the wrap-around pair all edges.
inline bool cycle_in_graph(const Graph& g, const Cycle& c) {
    if (c.size() < 3) return false;
    std::vector<char> seen(g.num_vertices(), 0);
    for (auto v : c) {
        if (v >= g.num_vertices() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

namespace detail {

/// Anchored depth-first enumeration of simple cycles with
/// min_len <= length <= max_len, visiting each cycle exactly once in its
/// canonical form. Anchoring: the search rooted at s only walks vertices
/// > s, so every cycle is discovered from its minimum vertex; emitting only
/// when path[1] < path.back() picks the canonical direction.
///
/// `emit` returns false to stop the search (budget exhausted upstream).
/// `node_budget` bounds path expansions; hitting it stops with truncated.
struct CycleSearch {
    const Graph& g;
    std::size_t min_len, max_len;
    std::uint64_t node_budget;
    std::uint64_t nodes = 0;
    bool truncated = false;

    template <typename Emit>
    void run(Emit&& emit) {
        std::vector<char> on_path(g.num_vertices(), 0);
        Cycle path;
        for (std::uint32_t s = 0; s + 2 < g.num_vertices() && !truncated; ++s) {
            path.assign(1, s);
            on_path[s] = 1;
            if (!extend(s, path, on_path, emit)) break;
            on_path[s] = 0;
        }
    }

private:
    template <typename Emit>
    bool extend(std::uint32_t s, Cycle& path, std::vector<char>& on_path, Emit& emit) {
        const std::uint32_t v = path.back();
        const auto& nb = g.neighbours(v);
        // only vertices above the anchor keep each cycle at one root
        auto it = std::upper_bound(nb.begin(), nb.end(), s);
        for (; it != nb.end(); ++it) {
            const std::uint32_t w = *it;
            if (on_path[w]) continue;
            if (++nodes > node_budget) { truncated = true; return false; }
            path.push_back(w);
            if (path.size() >= min_len && path[1] < w && g.has_edge(w, s)) {
                if (!emit(path)) { path.pop_back(); return false; }
            }
            if (path.size() < max_len) {
                on_path[w] = 1;
                bool keep = extend(s, path, on_path, emit);
                on_path[w] = 0;
                if (!keep) { path.pop_back(); return false; }
            }
            path.pop_back();
        }
        return true;
    }
};

}  // namespace detail

/// Census of simple cycles by length. counts[k] is exact when !truncated;
/// when the budget ran out, counts reflect only what was enumerated.
struct CycleCensus {
    std::map<std::size_t, std::uint64_t> counts;
    bool truncated = false;
    std::uint64_t cap = 0;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [len, cnt] : counts) t += cnt;
        return t;
    }
};

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

/// All simple cycles with min_len <= length <= max_len, each once, in sorted
/// canonical form. Throws CapExceeded (carrying the partial count) when more
/// than `cap` cycles exist or the node budget runs out.
inline std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t min_len, std::size_t max_len,
                                           std::uint64_t cap = 1'000'000,
                                           std::uint64_t node_budget = kDefaultNodeBudget) {
    if (min_len < 3) throw BadInputError("cycle length is at least 3");
    if (min_len > max_len) throw BadInputError("min_len must not exceed max_len");
    std::vector<Cycle> out;
    detail::CycleSearch search{g, min_len, max_len, node_budget};
    bool over_cap = false;
    search.run([&](const Cycle& c) {
        if (out.size() >= cap) { over_cap = true; return false; }
        out.push_back(c);
        return true;
    });
    if (over_cap)
        throw CapExceededError("cycle enumeration exceeded cap of " + std::to_string(cap), out.size());
    if (search.truncated)
        throw CapExceededError("cycle enumeration exceeded node budget", out.size());
    std::sort(out.begin(), out.end());
    return out;
}

/// Per-length cycle counts over [min_len, max_len]. Never throws on budget
/// exhaustion; the report is flagged truncated instead. Lengths with no
/// cycles found appear with count 0 so the covered range is explicit.
inline CycleCensus cycle_census(const Graph& g, std::size_t min_len, std::size_t max_len,
                                std::uint64_t cap = 1'000'000,
                                std::uint64_t node_budget = kDefaultNodeBudget) {
    if (min_len < 3) throw BadInputError("cycle length is at least 3");
    if (min_len > max_len) throw BadInputError("min_len must not exceed max_len");
    CycleCensus census;
    census.cap = cap;
    for (std::size_t k = min_len; k <= std::min(max_len, g.num_vertices()); ++k)
        census.counts[k] = 0;
    std::uint64_t found = 0;
    detail::CycleSearch search{g, min_len, max_len, node_budget};
    search.run([&](const Cycle& c) {
        if (found >= cap) { census.truncated = true; return false; }
        ++found;
        ++census.counts[c.size()];
        return true;
    });
    if (search.truncated) census.truncated = true;
    return census;
}

/// N_k: the number of simple cycles of length exactly k.
inline std::uint64_t count_cycles(const Graph& g, std::size_t k, std::uint64_t cap = 50'000'000,
                                  std::uint64_t node_budget = kDefaultNodeBudget) {
    if (k < 3) throw BadInputError("cycle length is at least 3");
    std::uint64_t found = 0;
    detail::CycleSearch search{g, k, k, node_budget};
    bool over_cap = false;
    search.run([&](const Cycle&) {
        if (found >= cap) { over_cap = true; return false; }
        ++found;
        return true;
    });
    if (over_cap || search.truncated)
        throw CapExceededError("cycle count exceeded budget", found);
    return found;
}

}  // namespace etacolor
