#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace etacolor {

/// splitmix64 finalizer; mixes a stream of inputs into one well-spread seed.
/// Used to derive independent per-trial seeds from (master seed, parameters).
inline std::uint64_t mix_seed(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    std::uint64_t z = h + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t double_bits(double x) {
    std::uint64_t b;
    static_assert(sizeof(b) == sizeof(x));
    std::memcpy(&b, &x, sizeof(b));
    return b;
}

/// Fisher–Yates with explicit multiply-shift draws, so shuffles do not
/// depend on the standard library's distribution internals.
template <typename T>
inline void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(
            (static_cast<unsigned __int128>(rng()) * i) >> 64);
        std::swap(v[i - 1], v[j]);
    }
}

/// Random graph model on n vertices: each unordered pair {u,v} is an edge
/// independently with probability p(u,v), except pairs masked off by the
/// optional forbidden graph, which are never edges.
///
/// The probability is one of:
///   - a single uniform p in [0,1];
///   - a density exponent beta > 0, meaning p = n^-beta;
///   - per-pair overrides on top of the uniform base.
struct EdgeProbabilityModel {
    std::size_t n = 0;
    double p = 0.0;
    std::optional<double> beta;                 ///< when set, p is derived as n^-beta
    std::optional<Graph> forbidden;             ///< pairs that are never sampled as edges
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> overrides;

    static EdgeProbabilityModel uniform(std::size_t n, double p) {
        EdgeProbabilityModel m;
        m.n = n;
        m.p = p;
        m.validate();
        return m;
    }

    static EdgeProbabilityModel power_law(std::size_t n, double beta) {
        EdgeProbabilityModel m;
        m.n = n;
        m.beta = beta;
        m.p = std::pow(static_cast<double>(n), -beta);
        m.validate();
        return m;
    }

    void validate() const {
        if (p < 0.0 || p > 1.0)
            throw BadInputError("edge probability must lie in [0,1], got " + std::to_string(p));
        if (beta && *beta < 0.0)
            throw BadInputError("density exponent must be non-negative, got " + std::to_string(*beta));
        if (forbidden && forbidden->num_vertices() != n)
            throw BadInputError("forbidden graph must have the same vertex count as the model");
        for (const auto& [pair, q] : overrides) {
            auto [u, v] = pair;
            if (u >= v || v >= n)
                throw BadInputError("override pair must satisfy u < v < n");
            if (q < 0.0 || q > 1.0)
                throw BadInputError("override probability must lie in [0,1]");
        }
    }

    double probability_of(std::uint32_t u, std::uint32_t v) const {
        if (u > v) std::swap(u, v);
        if (forbidden && forbidden->has_edge(u, v)) return 0.0;
        auto it = overrides.find({u, v});
        return it != overrides.end() ? it->second : p;
    }
};

/// Samples one graph from the model.
///
/// Determinism contract: one canonical uniform draw is consumed for every
/// unordered pair in lexicographic order, including forbidden pairs (whose
/// draws are discarded). Consequently two runs with the same seed but
/// probabilities p1 <= p2 pointwise produce nested edge sets, and adding a
/// forbidden mask removes exactly the masked edges without reshuffling the
/// rest of the sample.
inline Graph sample_graph(const EdgeProbabilityModel& model, std::uint64_t seed) {
    model.validate();
    std::mt19937_64 rng(seed);
    auto canonical = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u + 1 < model.n; ++u) {
        for (std::uint32_t v = u + 1; v < model.n; ++v) {
            double x = canonical();
            if (model.forbidden && model.forbidden->has_edge(u, v)) continue;
            if (x < model.probability_of(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph(model.n, std::move(edges));
}

}  // namespace etacolor
