#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace etacolor {

enum class DensityVerdict { certified, falsified, inconclusive };

/// Outcome of a subset-density scan. A graph has edge density at most s0
/// when every vertex subset of size l >= l_min spans at most s0 * l(l-1)/2
/// edges; `witness` is a subset violating that bound when one was found.
struct DensityReport {
    Rational s0_target;
    DensityVerdict verdict = DensityVerdict::inconclusive;
    std::optional<std::vector<std::uint32_t>> witness;
};

struct DensityCheckOptions {
    enum class Mode { exact, sampled };
    Mode mode = Mode::exact;
    std::size_t exact_cap = 20;    ///< exact mode scans all 2^n subsets; refuse beyond this
    std::uint64_t sample_budget = 10000;
    std::uint64_t seed = 0;
    /// Smallest subset size the density bound is required to hold for. The
    /// literal definition starts at pairs (l_min = 2), under which any graph
    /// with a single edge is falsified whenever s0 < 1; raising l_min asks
    /// about larger subsets only.
    std::size_t l_min = 2;
};

namespace detail {

/// Edges of h spanned by the sorted subset `sel`.
inline std::uint64_t edges_within(const Graph& h, const std::vector<std::uint32_t>& sel) {
    std::vector<char> in(h.num_vertices(), 0);
    for (auto v : sel) in[v] = 1;
    std::uint64_t count = 0;
    for (auto u : sel)
        for (auto w : h.neighbours(u))
            if (w > u && in[w]) ++count;
    return count;
}

inline bool violates(std::uint64_t e, const Rational& s0, std::uint64_t l) {
    return !leq_scaled(e, s0, l * (l - 1) / 2);
}

}  // namespace detail

/// Checks whether every vertex subset of size >= l_min spans at most
/// s0 * l(l-1)/2 edges of h. Exact mode scans all subsets (n capped) and
/// returns certified or falsified, with the smallest — then lexicographically
/// first — violating subset as witness. Sampled mode tries peeling-order
/// suffixes plus random subsets and returns falsified or inconclusive.
inline DensityReport edge_density_check(const Graph& h, const Rational& s0,
                                        const DensityCheckOptions& opts = {}) {
    if (!(Rational{0, 1} < s0) || !(s0 < Rational{1, 1}))
        throw BadInputError("density target must lie strictly between 0 and 1, got " + s0.str());
    if (opts.l_min < 2) throw BadInputError("l_min must be at least 2");

    DensityReport report;
    report.s0_target = s0;
    const std::size_t n = h.num_vertices();

    if (h.num_edges() == 0 || opts.l_min > n) {
        // no edges, or no subsets of the required size: nothing can violate
        report.verdict = DensityVerdict::certified;
        return report;
    }

    if (opts.mode == DensityCheckOptions::Mode::exact) {
        const std::size_t cap = std::min<std::size_t>(opts.exact_cap, 25);
        if (n > cap)
            throw CapExceededError("exact density check limited to n <= " +
                                   std::to_string(cap) + ", got n = " + std::to_string(n));

        std::vector<std::uint32_t> adj_mask(n, 0);
        for (auto [u, v] : h.edges()) {
            adj_mask[u] |= std::uint32_t{1} << v;
            adj_mask[v] |= std::uint32_t{1} << u;
        }

        // e[S] = edges spanned by S, built by peeling the lowest vertex.
        const std::uint32_t full = (std::uint32_t{1} << n) - 1;
        std::vector<std::uint16_t> e(std::size_t{1} << n, 0);
        std::uint32_t best = 0;  // violating mask, smallest (popcount, mask)
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(mask));
            std::uint32_t rest = mask & (mask - 1);
            e[mask] = static_cast<std::uint16_t>(e[rest] + std::popcount(adj_mask[v] & rest));
            std::uint32_t l = static_cast<std::uint32_t>(std::popcount(mask));
            if (l < opts.l_min || !detail::violates(e[mask], s0, l)) continue;
            if (best == 0 || std::popcount(mask) < std::popcount(best) ||
                (std::popcount(mask) == std::popcount(best) && mask < best))
                best = mask;
        }
        if (best == 0) {
            report.verdict = DensityVerdict::certified;
        } else {
            report.verdict = DensityVerdict::falsified;
            std::vector<std::uint32_t> wit;
            for (std::uint32_t v = 0; v < n; ++v)
                if ((best >> v) & 1) wit.push_back(v);
            report.witness = std::move(wit);
        }
        return report;
    }

    auto try_subset = [&](std::vector<std::uint32_t> sel) -> bool {
        if (sel.size() < opts.l_min) return false;
        if (!detail::violates(detail::edges_within(h, sel), s0, sel.size())) return false;
        report.verdict = DensityVerdict::falsified;
        report.witness = std::move(sel);
        return true;
    };

    // Single edges falsify immediately whenever pairs are in scope.
    if (opts.l_min == 2) {
        auto [u, v] = h.edges().front();
        if (try_subset({u, v})) return report;
    }

    // Min-degree peeling: suffixes of the removal order are the classic dense
    // core candidates, so test each suffix size once.
    {
        std::vector<std::size_t> deg(n);
        for (std::uint32_t v = 0; v < n; ++v) deg[v] = h.degree(v);
        std::vector<char> removed(n, 0);
        std::vector<std::uint32_t> order;
        order.reserve(n);
        for (std::size_t step = 0; step < n; ++step) {
            std::uint32_t pick = 0;
            std::size_t best_deg = SIZE_MAX;
            for (std::uint32_t v = 0; v < n; ++v)
                if (!removed[v] && deg[v] < best_deg) { best_deg = deg[v]; pick = v; }
            removed[pick] = 1;
            order.push_back(pick);
            for (auto w : h.neighbours(pick))
                if (!removed[w]) --deg[w];
        }
        for (std::size_t l = std::max<std::size_t>(opts.l_min, 2); l <= n; ++l) {
            std::vector<std::uint32_t> suffix(order.end() - static_cast<std::ptrdiff_t>(l), order.end());
            std::sort(suffix.begin(), suffix.end());
            if (try_subset(std::move(suffix))) return report;
        }
    }

    // Random subsets across the size range.
    std::mt19937_64 rng(opts.seed);
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t v = 0; v < n; ++v) pool[v] = v;
    std::uniform_int_distribution<std::size_t> size_dist(opts.l_min, n);
    for (std::uint64_t it = 0; it < opts.sample_budget; ++it) {
        std::size_t l = size_dist(rng);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::uint32_t> sel(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(l));
        std::sort(sel.begin(), sel.end());
        if (try_subset(std::move(sel))) return report;
    }

    report.verdict = DensityVerdict::inconclusive;
    return report;
}

}  // namespace etacolor
