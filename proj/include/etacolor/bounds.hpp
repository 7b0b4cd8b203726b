#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "cycles.hpp"
#include "errors.hpp"
#include "random_model.hpp"
#include "rational.hpp"

namespace etacolor {

/// Tail bound 2*exp(-eps^2 * mu / 4) on P(|W - mu| >= eps*mu) for sums of
/// independent indicators with mean mu; stated for 0 < eps < 1/2 only.
inline double chernoff_bound(double mu, double eps) {
    if (mu <= 0) throw DomainError("mean must be positive");
    if (!(eps > 0.0 && eps < 0.5))
        throw DomainError("deviation fraction must lie in (0, 1/2), got " + std::to_string(eps));
    return 2.0 * std::exp(-eps * eps * mu / 4.0);
}

enum class GraphStatistic { edge_count, vertex_degree };

/// Measured tail frequency: the fraction of trials whose statistic W lands
/// at least eps*mu away from its exact mean mu. No bound is asserted here —
/// eps outside the chernoff_bound range still yields the raw fraction.
inline Rational empirical_tail(const EdgeProbabilityModel& model, GraphStatistic stat, double eps,
                               std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw BadInputError("need at least one trial");
    model.validate();
    double mu = 0.0;
    for (std::uint32_t u = 0; u + 1 < model.n; ++u)
        for (std::uint32_t v = u + 1; v < model.n; ++v) {
            double q = model.probability_of(u, v);
            if (stat == GraphStatistic::edge_count) mu += q;
            else if (u == 0) mu += q;  // vertex_degree tracks vertex 0
        }
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Graph g = sample_graph(model, mix_seed(seed, t));
        double w = stat == GraphStatistic::edge_count ? static_cast<double>(g.num_edges())
                                                      : static_cast<double>(g.degree(0));
        if (std::abs(w - mu) >= eps * mu) ++hits;
    }
    return Rational{static_cast<std::int64_t>(hits), static_cast<std::int64_t>(trials)};
}

/// Same measurement for a plain Bernoulli(p) sum of t indicators, mu = t*p.
inline Rational bernoulli_tail(std::uint64_t t, double p, double eps, std::uint64_t trials,
                               std::uint64_t seed) {
    if (trials < 1) throw BadInputError("need at least one trial");
    if (p < 0.0 || p > 1.0) throw BadInputError("probability must lie in [0,1]");
    double mu = static_cast<double>(t) * p;
    std::uint64_t hits = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(mix_seed(seed, trial));
        std::uint64_t w = 0;
        for (std::uint64_t i = 0; i < t; ++i)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) ++w;
        if (std::abs(static_cast<double>(w) - mu) >= eps * mu) ++hits;
    }
    return Rational{static_cast<std::int64_t>(hits), static_cast<std::int64_t>(trials)};
}

/// Bracket ((np)^k / (4k), (np)^k) around the expected number of k-cycles.
/// The upper end always dominates the exact first moment; the lower end
/// holds whenever the falling factorial (n)_k is at least n^k / 2, i.e. n
/// large relative to k^2.
inline std::pair<double, double> expected_cycle_bracket(std::size_t n, double p, std::size_t k) {
    if (k < 3) throw BadInputError("cycle length is at least 3");
    double npk = std::pow(static_cast<double>(n) * p, static_cast<double>(k));
    return {npk / (4.0 * static_cast<double>(k)), npk};
}

/// Exact first moment of the k-cycle count: (n)_k * p^k / (2k), with
/// (n)_k the falling factorial.
inline double expected_cycles_exact(std::size_t n, double p, std::size_t k) {
    if (k < 3) throw BadInputError("cycle length is at least 3");
    if (k > n) return 0.0;
    long double falling = 1.0L;
    for (std::size_t i = 0; i < k; ++i) falling *= static_cast<long double>(n - i);
    long double val = falling * std::pow(static_cast<long double>(p), static_cast<long double>(k)) /
                      (2.0L * static_cast<long double>(k));
    return static_cast<double>(val);
}

/// Fraction of censused cycles shorter than g, as an exact rational; used to
/// certify that a chosen cutoff leaves short cycles below an eta budget.
inline Rational short_cycle_fraction(const CycleCensus& census, std::size_t g) {
    if (census.truncated)
        throw DomainError("census truncated; short-cycle fraction would be unreliable");
    if (census.counts.empty() || census.counts.begin()->first > 3 ||
        census.counts.rbegin()->first < g)
        throw DomainError("census must cover lengths 3 through at least g");
    std::uint64_t below = 0, total = 0;
    for (const auto& [len, cnt] : census.counts) {
        total += cnt;
        if (len < g) below += cnt;
    }
    if (total == 0) return Rational{0, 1};
    return Rational{static_cast<std::int64_t>(below), static_cast<std::int64_t>(total)};
}

/// Bounds on the critical density exponent for the (eta,c) colouring
/// threshold: for eta = 0 the window is [1/(4c-2), 1-1/(c-1)]; any positive
/// eta collapses it to zero (colourability holds for every positive
/// exponent).
struct ExponentBounds {
    std::size_t c = 3;
    Rational eta{0, 1};
    Rational lower{0, 1};
    Rational upper{0, 1};
};

inline ExponentBounds critical_exponent_bounds(std::size_t c, const Rational& eta) {
    if (c < 3) throw BadInputError("cycle-length threshold c must be at least 3");
    if (!(Rational{0, 1} <= eta) || !(eta < Rational{1, 1}))
        throw BadInputError("eta must lie in [0,1), got " + eta.str());
    ExponentBounds b;
    b.c = c;
    b.eta = eta;
    if (eta == Rational{0, 1}) {
        b.lower = Rational{1, static_cast<std::int64_t>(4 * c - 2)};
        b.upper = Rational{static_cast<std::int64_t>(c - 2), static_cast<std::int64_t>(c - 1)};
    }
    return b;
}

}  // namespace etacolor
