#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "random_model.hpp"
#include "rational.hpp"

namespace etacolor {

enum class SearchAnswer { yes, no, unknown };

/// Budgeted exact search for a simple path with exactly k edges.
///
/// Depth-first over simple paths with roots and branches visited in
/// decreasing-degree order (high-degree vertices reach long paths soonest).
/// Returns a witness when found; nullopt means exhaustively ruled out. The
/// budget counts node expansions; exceeding it reports unknown through
/// has_path_of_length below.
inline std::optional<std::vector<std::uint32_t>> find_path_of_length(
    const Graph& g, std::size_t k, std::uint64_t budget = 50'000'000,
    SearchAnswer* answer = nullptr) {
    if (k < 1) throw BadInputError("path length is at least 1 edge");
    const std::size_t n = g.num_vertices();
    if (answer) *answer = SearchAnswer::no;
    if (k + 1 > n) return std::nullopt;

    std::vector<std::uint32_t> by_degree(n);
    for (std::uint32_t v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return g.degree(a) > g.degree(b); });

    std::vector<char> on_path(n, 0);
    std::vector<std::uint32_t> path;
    std::uint64_t nodes = 0;
    bool exhausted_budget = false;

    auto dfs = [&](auto&& self, std::uint32_t v) -> bool {
        if (path.size() == k + 1) return true;
        std::vector<std::uint32_t> next(g.neighbours(v));
        std::stable_sort(next.begin(), next.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return g.degree(a) > g.degree(b); });
        for (auto w : next) {
            if (on_path[w]) continue;
            if (++nodes > budget) { exhausted_budget = true; return false; }
            on_path[w] = 1;
            path.push_back(w);
            if (self(self, w)) return true;
            path.pop_back();
            on_path[w] = 0;
            if (exhausted_budget) return false;
        }
        return false;
    };

    for (auto s : by_degree) {
        if (g.degree(s) == 0) continue;
        on_path[s] = 1;
        path.assign(1, s);
        if (dfs(dfs, s)) {
            if (answer) *answer = SearchAnswer::yes;
            return path;
        }
        on_path[s] = 0;
        if (exhausted_budget) {
            if (answer) *answer = SearchAnswer::unknown;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

/// Is there a simple path with exactly k edges? `no` only after exhaustive
/// search; `unknown` when the node budget ran out first.
inline SearchAnswer has_path_of_length(const Graph& g, std::size_t k,
                                       std::uint64_t budget = 50'000'000) {
    SearchAnswer answer;
    find_path_of_length(g, k, budget, &answer);
    return answer;
}

/// Monte Carlo estimate of P(the sampled graph has a simple path of k edges).
struct PathProbabilityEstimate {
    Rational probability;  ///< yes-count / trials
    std::uint64_t trials = 0;
    std::uint64_t yes_count = 0;
    std::uint64_t no_count = 0;
    std::uint64_t unknown_count = 0;  ///< budget-exhausted trials, reported separately
};

/// Samples `trials` graphs (per-trial seeds derived from `seed`, so paired
/// runs at different p share the underlying uniforms and couple
/// monotonically) and reports the fraction containing a k-edge path.
inline PathProbabilityEstimate estimate_path_probability(const EdgeProbabilityModel& model,
                                                         std::size_t k, std::uint64_t trials,
                                                         std::uint64_t seed,
                                                         std::uint64_t budget = 50'000'000) {
    if (trials < 1) throw BadInputError("need at least one trial");
    PathProbabilityEstimate est;
    est.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Graph g = sample_graph(model, mix_seed(seed, t));
        switch (has_path_of_length(g, k, budget)) {
            case SearchAnswer::yes: ++est.yes_count; break;
            case SearchAnswer::no: ++est.no_count; break;
            case SearchAnswer::unknown: ++est.unknown_count; break;
        }
    }
    est.probability = Rational{static_cast<std::int64_t>(est.yes_count),
                               static_cast<std::int64_t>(trials)};
    return est;
}

/// The closed-form lower bound 1 - k * n^(k-1) * exp(-C * n^2 * p^(2k-1)) on
/// the probability that a sample contains a k-edge path. Values below zero
/// carry no information and are flagged vacuous rather than clamped.
struct PathProbabilityBound {
    double value = 0.0;
    bool vacuous = false;
};

inline PathProbabilityBound path_probability_lower_bound(std::size_t n, std::size_t k, double p,
                                                         double C) {
    // log-space evaluation: k * n^(k-1) can overflow double for large k
    long double log_term = std::log(static_cast<long double>(k)) +
                           static_cast<long double>(k - 1) * std::log(static_cast<long double>(n)) -
                           static_cast<long double>(C) * static_cast<long double>(n) *
                               static_cast<long double>(n) *
                               std::pow(static_cast<long double>(p),
                                        static_cast<long double>(2 * k - 1));
    long double term = std::exp(log_term);
    PathProbabilityBound b;
    b.value = static_cast<double>(1.0L - term);
    b.vacuous = b.value < 0.0;
    return b;
}

}  // namespace etacolor
