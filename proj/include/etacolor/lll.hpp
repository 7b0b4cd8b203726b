#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "colouring.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace etacolor {

/// Palette size ceil(8*D*(g^2 * (2np)^g)^(1/(g-c+1))) driving the resampling
/// colouring; evaluated in log space so (2np)^g cannot overflow.
inline long double lll_palette_bound_raw(std::size_t n, double p, std::size_t g, std::size_t c,
                                         double D) {
    if (g + 1 <= c) throw DomainError("palette bound needs g >= c (exponent 1/(g-c+1) undefined)");
    if (D <= 0) throw BadInputError("constant D must be positive");
    long double two_np = 2.0L * static_cast<long double>(n) * static_cast<long double>(p);
    if (two_np <= 0) return 0.0L;
    long double log_inner = 2.0L * std::log(static_cast<long double>(g)) +
                            static_cast<long double>(g) * std::log(two_np);
    long double exponent = 1.0L / (static_cast<long double>(g) - static_cast<long double>(c) + 1.0L);
    return 8.0L * static_cast<long double>(D) * std::exp(log_inner * exponent);
}

inline std::uint64_t lll_palette_bound(std::size_t n, double p, std::size_t g, std::size_t c,
                                       double D = 1.0) {
    return static_cast<std::uint64_t>(std::ceil(lll_palette_bound_raw(n, p, g, c, D)));
}

/// Evaluates the two sufficient inequalities for the weighted local lemma
/// with palette theta: one for monochromatic-edge events, one for
/// few-coloured-path events. Writing q = D*theta^(c-1)/theta^g, both reduce
/// (after dividing by the event probability) to log-space sums
///
///   log 2 + 2np      * log(1-2/theta) + 2g(2np)^g  * log(1-q) >= 0
///   log 2 + 2gnp     * log(1-2/theta) + g^2(2np)^g * log(1-q) >= 0
///
/// evaluated in extended precision; a zero exponent contributes nothing even
/// when its base is zero.
inline bool check_lll_conditions(std::uint64_t theta, std::size_t n, double p, std::size_t g,
                                 std::size_t c, double D = 1.0) {
    if (theta < 2) throw BadInputError("palette must be at least 2");
    if (D <= 0) throw BadInputError("constant D must be positive");

    long double np = static_cast<long double>(n) * static_cast<long double>(p);
    long double two_np = 2.0L * np;
    long double pow_g = two_np > 0 ? std::exp(static_cast<long double>(g) * std::log(two_np)) : 0.0L;
    long double log_theta = std::log(static_cast<long double>(theta));
    long double log_q = std::log(static_cast<long double>(D)) +
                        (static_cast<long double>(c) - 1.0L - static_cast<long double>(g)) * log_theta;
    long double q = std::exp(log_q);

    long double log_one_minus_2t = theta == 2 ? -INFINITY
                                              : std::log1p(-2.0L / static_cast<long double>(theta));
    long double log_one_minus_q = q >= 1.0L ? -INFINITY : std::log1p(-q);

    auto term = [](long double exponent, long double log_base) -> long double {
        return exponent == 0.0L ? 0.0L : exponent * log_base;
    };
    long double g_ld = static_cast<long double>(g);
    long double edge_events = std::log(2.0L) + term(two_np, log_one_minus_2t) +
                              term(2.0L * g_ld * pow_g, log_one_minus_q);
    long double path_events = std::log(2.0L) + term(2.0L * g_ld * np, log_one_minus_2t) +
                              term(g_ld * g_ld * pow_g, log_one_minus_q);
    return edge_events >= 0.0L && path_events >= 0.0L;
}

/// Smallest path cutoff g >= c+1 with (1-beta)*g/(g-c+1) <= 1-beta/2, so the
/// palette bound grows no faster than n^(1-beta/2). The inequality rearranges
/// to g >= (2-beta)(c-1)/beta, whose ceiling is taken after snapping values
/// within 1e-9 of an integer onto it: boundary inputs (beta=0.1, c=4 gives
/// exactly 57 in real arithmetic) otherwise land on the wrong side of the
/// comparison through binary rounding.
inline std::size_t choose_path_cutoff(double beta, std::size_t c) {
    if (!(beta > 0.0 && beta < 1.0))
        throw BadInputError("density exponent must lie in (0,1), got " + std::to_string(beta));
    if (c < 3) throw BadInputError("cycle-length threshold c must be at least 3");
    long double x = (2.0L - static_cast<long double>(beta)) *
                    static_cast<long double>(c - 1) / static_cast<long double>(beta);
    long double nearest = std::round(x);
    if (std::abs(x - nearest) < 1e-9L) x = nearest;
    return std::max(static_cast<std::size_t>(std::ceil(x)), c + 1);
}

/// Result of the resampling colouring. When converged, the colouring is
/// proper and every simple path with exactly g edges carries at least c
/// distinct colours. Otherwise the last state is returned along with the
/// events still violated when the budget ran out.
struct LllColouringResult {
    Colouring colouring;
    bool converged = false;
    std::uint64_t resamples = 0;
    bool scan_complete = true;  ///< false if the path scan hit its node budget
    std::vector<std::vector<std::uint32_t>> violations;  ///< pairs (edges) or g+1-vertex paths
};

namespace detail {

/// Colour-pruned search for a simple path of exactly g edges whose vertices
/// carry at most c-1 distinct colours. Distinct counts only grow along a
/// path, so any prefix reaching c colours is discarded — which is what makes
/// scanning cheap once the colouring is nearly good.
struct FewColourPathScan {
    const Graph& g;
    const std::vector<std::uint32_t>& colour;
    std::size_t path_edges;
    std::size_t c;
    std::uint64_t node_budget;
    std::uint64_t nodes = 0;
    bool complete = true;

    FewColourPathScan(const Graph& host, const std::vector<std::uint32_t>& colours,
                      std::size_t edges, std::size_t threshold, std::uint64_t budget)
        : g(host), colour(colours), path_edges(edges), c(threshold), node_budget(budget) {}

    std::optional<std::vector<std::uint32_t>> run() {
        const std::size_t n = g.num_vertices();
        if (path_edges + 1 > n) return std::nullopt;
        on_path_.assign(n, 0);
        counts_.assign(max_colour() + 2, 0);
        for (std::uint32_t s = 0; s < n; ++s) {
            path_.assign(1, s);
            on_path_[s] = 1;
            counts_[colour[s]] = 1;
            distinct_ = 1;
            auto hit = extend();
            on_path_[s] = 0;
            counts_[colour[s]] = 0;
            if (hit || !complete) return hit;
        }
        return std::nullopt;
    }

private:
    std::uint32_t max_colour() const {
        std::uint32_t m = 0;
        for (auto x : colour) m = std::max(m, x);
        return m;
    }

    std::optional<std::vector<std::uint32_t>> extend() {
        if (path_.size() == path_edges + 1) return path_;
        for (auto w : g.neighbours(path_.back())) {
            if (on_path_[w]) continue;
            std::size_t d = distinct_ + (counts_[colour[w]] == 0 ? 1 : 0);
            if (d >= c) continue;  // no extension can drop below c distinct again
            if (++nodes > node_budget) { complete = false; return std::nullopt; }
            on_path_[w] = 1;
            ++counts_[colour[w]];
            path_.push_back(w);
            std::size_t saved = distinct_;
            distinct_ = d;
            auto hit = extend();
            distinct_ = saved;
            path_.pop_back();
            --counts_[colour[w]];
            on_path_[w] = 0;
            if (hit || !complete) return hit;
        }
        return std::nullopt;
    }

    std::vector<char> on_path_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint32_t> path_;
    std::size_t distinct_ = 1;
};

}  // namespace detail

/// Deterministic standalone check of the resampling colouring's guarantee:
/// proper, and no simple path of exactly g edges has fewer than c distinct
/// colours. Returns a violating path if one exists within budget.
struct PathColouringCheck {
    bool ok = false;
    bool complete = true;
    std::optional<std::vector<std::uint32_t>> witness;
};

inline PathColouringCheck verify_path_colouring(const Graph& g, const Colouring& col,
                                                std::size_t path_edges, std::size_t c,
                                                std::uint64_t node_budget = 2'000'000'000) {
    validate_colouring(g, col);
    PathColouringCheck check;
    if (!is_proper(g, col)) {
        check.ok = false;
        return check;
    }
    detail::FewColourPathScan scan{g, col.assignment, path_edges, c, node_budget};
    check.witness = scan.run();
    check.complete = scan.complete;
    check.ok = !check.witness.has_value() && scan.complete;
    return check;
}

/// Resampling construction of a proper colouring in which every simple path
/// of exactly g edges carries at least c distinct colours. All vertex
/// colours are drawn uniformly from 1..theta; while some bad event holds —
/// a monochromatic edge, or a g-edge path with <= c-1 distinct colours — the
/// first one found (edges in stored order first, then the path scan) has its
/// vertices redrawn. Deterministic given (graph, parameters, seed).
inline LllColouringResult lll_path_colouring(const Graph& g, std::size_t path_edges, std::size_t c,
                                             std::uint64_t theta, std::uint64_t seed,
                                             std::uint64_t max_resamples = 100'000,
                                             std::uint64_t scan_budget = 2'000'000'000) {
    if (c < 3) throw BadInputError("cycle-length threshold c must be at least 3");
    if (path_edges + 1 < c) throw BadInputError("a path of g edges has g+1 vertices and needs g+1 >= c to carry c colours");
    if (theta < c) throw BadInputError("palette must be at least c");
    if (theta > UINT32_MAX) throw BadInputError("palette too large for colour ids");

    std::mt19937_64 rng(seed);
    auto draw = [&]() -> std::uint32_t {
        // multiply-shift bounded draw; keeps the sequence portable across
        // standard libraries, unlike uniform_int_distribution
        return static_cast<std::uint32_t>(
                   (static_cast<unsigned __int128>(rng()) * theta) >> 64) + 1;
    };

    const std::size_t n = g.num_vertices();
    LllColouringResult result;
    result.colouring.palette = static_cast<std::uint32_t>(theta);
    result.colouring.assignment.resize(n);
    for (auto& x : result.colouring.assignment) x = draw();

    auto& colour = result.colouring.assignment;
    while (true) {
        // first violated event, deterministically: edge list order, then scan order
        std::vector<std::uint32_t> event;
        for (auto [u, v] : g.edges())
            if (colour[u] == colour[v]) { event = {u, v}; break; }
        if (event.empty()) {
            detail::FewColourPathScan scan{g, colour, path_edges, c, scan_budget};
            auto bad_path = scan.run();
            if (!scan.complete) result.scan_complete = false;
            if (bad_path) event = std::move(*bad_path);
        }
        if (event.empty()) {
            result.converged = result.scan_complete;
            if (!result.converged) break;
            return result;
        }
        if (result.resamples >= max_resamples) {
            result.violations.push_back(event);
            break;
        }
        ++result.resamples;
        for (auto v : event) colour[v] = draw();
    }

    // budget ran out: collect what is still violated for the caller
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v] && result.violations.size() < 16)
            result.violations.push_back({u, v});
    return result;
}

}  // namespace etacolor
