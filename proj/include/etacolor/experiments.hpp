#pragma once

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "colouring.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "lll.hpp"
#include "power.hpp"
#include "random_model.hpp"
#include "rational.hpp"
#include "refute.hpp"

namespace etacolor {

/// Shortest round-trip decimal rendering; keeps emitted data byte-stable.
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

/// Named forbidden-graph families for sweep configs: "empty", "clique"
/// (K_param on the first vertices), "matching" (param disjoint edges),
/// "cycle" (C_param on the first vertices).
struct ForbiddenSpec {
    std::string family = "empty";
    std::size_t param = 0;
};

inline Graph make_forbidden(const ForbiddenSpec& spec, std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    if (spec.family == "empty") {
        // no edges
    } else if (spec.family == "clique") {
        if (spec.param > n) throw BadInputError("forbidden clique larger than the vertex set");
        for (std::uint32_t u = 0; u + 1 < spec.param; ++u)
            for (std::uint32_t v = u + 1; v < spec.param; ++v) edges.emplace_back(u, v);
    } else if (spec.family == "matching") {
        if (2 * spec.param > n) throw BadInputError("forbidden matching larger than the vertex set");
        for (std::uint32_t i = 0; i < spec.param; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    } else if (spec.family == "cycle") {
        if (spec.param > n || (spec.param > 0 && spec.param < 3))
            throw BadInputError("forbidden cycle needs 3 <= length <= n");
        for (std::uint32_t i = 0; i < spec.param; ++i)
            edges.emplace_back(std::min<std::uint32_t>(i, (i + 1) % spec.param),
                               std::max<std::uint32_t>(i, (i + 1) % spec.param));
    } else {
        throw BadInputError("unknown forbidden family '" + spec.family + "'");
    }
    return Graph(n, std::move(edges));
}

enum class SweepAlgorithm { power_graph, lll, exact };

struct SweepCaps {
    std::uint64_t verify_cycle_cap = 200'000;
    std::uint64_t verify_node_budget = 50'000'000;
    std::uint64_t lll_max_resamples = 100'000;
    std::uint64_t lll_scan_budget = 2'000'000'000;
    std::size_t exact_vertex_cap = 10;
};

struct SweepConfig {
    std::vector<std::size_t> n_grid;
    std::vector<double> beta_grid;
    std::size_t c = 3;
    Rational eta{0, 1};
    std::uint64_t trials_per_cell = 1;
    SweepAlgorithm algorithm = SweepAlgorithm::power_graph;
    std::uint64_t seed = 0;
    SweepCaps caps;
    std::optional<ForbiddenSpec> forbidden;
    bool timings = false;  ///< leave runtime_ms at 0 unless enabled, keeping output byte-stable

    void validate() const {
        if (n_grid.empty() || beta_grid.empty()) throw BadInputError("sweep grids must be non-empty");
        if (trials_per_cell < 1) throw BadInputError("need at least one trial per cell");
        if (c < 3) throw BadInputError("cycle-length threshold c must be at least 3");
        if (!(Rational{0, 1} <= eta) || !(eta < Rational{1, 1}))
            throw BadInputError("eta must lie in [0,1)");
        for (auto n : n_grid)
            if (n < 1) throw BadInputError("vertex counts must be positive");
        for (auto b : beta_grid)
            if (b < 0.0) throw BadInputError("density exponents must be non-negative");
        if (algorithm == SweepAlgorithm::exact)
            for (auto n : n_grid)
                if (n > caps.exact_vertex_cap)
                    throw BadInputError("exact algorithm restricted to n <= " +
                                        std::to_string(caps.exact_vertex_cap));
    }
};

/// One row of sweep output; the CSV column order is exactly this field order.
struct TrialRecord {
    std::size_t n = 0;
    double beta = 0.0;
    std::uint64_t trial_seed = 0;
    std::uint32_t colours_used = 0;
    Rational chi_over_n{0, 1};
    bool verified = false;
    Rational bad_cycle_fraction{0, 1};
    std::uint64_t runtime_ms = 0;
    std::string truncated_flags = "-";
};

inline std::uint64_t sweep_trial_seed(std::uint64_t seed, std::size_t n, double beta,
                                      std::uint64_t trial) {
    return mix_seed(mix_seed(mix_seed(seed, n), double_bits(beta)), trial);
}

/// Runs the full (n, beta, trial) grid. Pure function of the config: trial
/// seeds are derived from (seed, n, beta, trial index), records appear in
/// grid order, and every emitted colouring is re-verified before recording.
/// Per-trial problems (budget exhaustion, unmet palette conditions) are
/// recorded in truncated_flags rather than aborting the sweep.
inline std::vector<TrialRecord> run_sweep(const SweepConfig& config) {
    config.validate();
    std::vector<TrialRecord> records;
    records.reserve(config.n_grid.size() * config.beta_grid.size() * config.trials_per_cell);

    for (auto n : config.n_grid) {
        for (auto beta : config.beta_grid) {
            const double p = std::pow(static_cast<double>(n), -beta);
            for (std::uint64_t trial = 0; trial < config.trials_per_cell; ++trial) {
                TrialRecord rec;
                rec.n = n;
                rec.beta = beta;
                rec.trial_seed = sweep_trial_seed(config.seed, n, beta, trial);
                auto started = std::chrono::steady_clock::now();
                std::vector<std::string> flags;

                EdgeProbabilityModel model = EdgeProbabilityModel::uniform(n, p);
                if (config.forbidden) model.forbidden = make_forbidden(*config.forbidden, n);
                Graph g = sample_graph(model, rec.trial_seed);

                Colouring col;
                bool have_colouring = false;
                if (g.num_edges() == 0) {
                    // no edges means no colours are needed at all; the
                    // verified trivial assignment keeps the record honest
                    col.assignment.assign(n, 1);
                    col.palette = 1;
                    rec.colours_used = 0;
                    have_colouring = true;
                } else if (config.algorithm == SweepAlgorithm::power_graph) {
                    col = power_graph_colouring(g, config.c);
                    rec.colours_used = col.palette;
                    have_colouring = true;
                } else if (config.algorithm == SweepAlgorithm::lll) {
                    std::size_t cutoff;
                    if (beta > 0.0 && beta < 1.0) {
                        cutoff = choose_path_cutoff(beta, config.c);
                    } else {
                        cutoff = config.c + 1;
                        flags.push_back("path_cutoff_default");
                    }
                    std::uint64_t theta =
                        std::max<std::uint64_t>(lll_palette_bound(n, p, cutoff, config.c, 1.0),
                                                std::max<std::uint64_t>(config.c, 2));
                    int doublings = 0;
                    while (!check_lll_conditions(theta, n, p, cutoff, config.c, 1.0) &&
                           doublings < 6) {
                        theta *= 2;
                        ++doublings;
                    }
                    if (doublings > 0) flags.push_back("theta_doubled:" + std::to_string(doublings));
                    if (!check_lll_conditions(theta, n, p, cutoff, config.c, 1.0))
                        flags.push_back("lll_conditions_unmet");
                    auto lll = lll_path_colouring(g, cutoff, config.c, theta,
                                                  mix_seed(rec.trial_seed, 1),
                                                  config.caps.lll_max_resamples,
                                                  config.caps.lll_scan_budget);
                    if (!lll.converged) flags.push_back("lll_budget_exhausted");
                    if (!lll.scan_complete) flags.push_back("lll_scan_incomplete");
                    col = std::move(lll.colouring);
                    rec.colours_used = colours_used(col);
                    have_colouring = true;
                } else {
                    ExactSolverLimits limits;
                    limits.vertex_cap = config.caps.exact_vertex_cap;
                    auto [k, exact_col] = exact_acyclic_chromatic(g, config.eta, config.c, limits);
                    col = std::move(exact_col);
                    rec.colours_used = k;
                    have_colouring = true;
                }

                if (have_colouring) {
                    VerifyOptions vo;
                    vo.cycle_cap = config.caps.verify_cycle_cap;
                    vo.node_budget = config.caps.verify_node_budget;
                    auto report = verify_colouring(g, col, config.eta, config.c, vo);
                    rec.verified = report.passes;
                    rec.bad_cycle_fraction = report.bad_fraction;
                    if (report.truncated) flags.push_back("verify_truncated");
                }
                rec.chi_over_n = Rational{static_cast<std::int64_t>(rec.colours_used),
                                          static_cast<std::int64_t>(n)};
                if (config.timings)
                    rec.runtime_ms = static_cast<std::uint64_t>(
                        std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count());
                if (!flags.empty()) {
                    rec.truncated_flags.clear();
                    for (std::size_t i = 0; i < flags.size(); ++i)
                        rec.truncated_flags += (i ? ";" : "") + flags[i];
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

inline const char* kSweepCsvHeader =
    "n,beta,trial_seed,colours_used,chi_over_n,verified,bad_cycle_fraction,runtime_ms,"
    "truncated_flags";

inline std::string records_to_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << format_double(r.beta) << ',' << r.trial_seed << ',' << r.colours_used
            << ',' << r.chi_over_n.str() << ',' << (r.verified ? "true" : "false") << ','
            << r.bad_cycle_fraction.str() << ',' << r.runtime_ms << ',' << r.truncated_flags
            << '\n';
    }
    return out.str();
}

inline nlohmann::json records_to_json(const std::vector<TrialRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back({{"n", r.n},
                       {"beta", r.beta},
                       {"trial_seed", r.trial_seed},
                       {"colours_used", r.colours_used},
                       {"chi_over_n", rational_to_json(r.chi_over_n)},
                       {"verified", r.verified},
                       {"bad_cycle_fraction", rational_to_json(r.bad_cycle_fraction)},
                       {"runtime_ms", r.runtime_ms},
                       {"truncated_flags", r.truncated_flags}});
    return arr;
}

/// Least-squares slope of log(mean colours) against log(n) for one beta.
/// alpha_hat near 1 means the palette grows linearly with n; values
/// significantly below 1 indicate the sub-linear colourable regime.
struct ExponentFit {
    double beta = 0.0;
    double alpha_hat = 0.0;
    double stderr_alpha = 0.0;
    std::size_t cells_used = 0;
};

inline std::vector<ExponentFit> fit_exponents(const std::vector<TrialRecord>& records) {
    std::vector<double> betas;
    for (const auto& r : records)
        if (std::find(betas.begin(), betas.end(), r.beta) == betas.end()) betas.push_back(r.beta);

    std::vector<ExponentFit> fits;
    for (double beta : betas) {
        std::map<std::size_t, std::pair<double, std::uint64_t>> cells;  // n -> (sum, count)
        for (const auto& r : records)
            if (r.beta == beta) {
                auto& [sum, count] = cells[r.n];
                sum += static_cast<double>(r.colours_used);
                ++count;
            }
        std::vector<double> xs, ys;
        for (const auto& [n, cell] : cells) {
            double mean = cell.first / static_cast<double>(cell.second);
            if (mean <= 0.0) continue;  // log undefined; empty-graph cells carry no slope signal
            xs.push_back(std::log(static_cast<double>(n)));
            ys.push_back(std::log(mean));
        }
        const std::size_t m = xs.size();
        if (m < 3)
            throw InsufficientDataError("exponent fit needs >= 3 usable n-cells per beta, got " +
                                        std::to_string(m) + " at beta=" + format_double(beta));
        double x_bar = 0, y_bar = 0;
        for (std::size_t i = 0; i < m; ++i) { x_bar += xs[i]; y_bar += ys[i]; }
        x_bar /= static_cast<double>(m);
        y_bar /= static_cast<double>(m);
        double sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < m; ++i) {
            sxx += (xs[i] - x_bar) * (xs[i] - x_bar);
            sxy += (xs[i] - x_bar) * (ys[i] - y_bar);
        }
        ExponentFit fit;
        fit.beta = beta;
        fit.alpha_hat = sxy / sxx;
        double ss_resid = 0;
        for (std::size_t i = 0; i < m; ++i) {
            double resid = ys[i] - (y_bar + fit.alpha_hat * (xs[i] - x_bar));
            ss_resid += resid * resid;
        }
        fit.stderr_alpha = m > 2 ? std::sqrt(ss_resid / static_cast<double>(m - 2) / sxx) : 0.0;
        fit.cells_used = m;
        fits.push_back(fit);
    }
    return fits;
}

inline std::string fits_to_csv(const std::vector<ExponentFit>& fits) {
    std::ostringstream out;
    out << "beta,alpha_hat,stderr,cells_used\n";
    for (const auto& f : fits)
        out << format_double(f.beta) << ',' << format_double(f.alpha_hat) << ','
            << format_double(f.stderr_alpha) << ',' << f.cells_used << '\n';
    return out.str();
}

/// Proper colouring aimed at a palette cap: vertices in shuffled order each
/// take a uniformly shuffled admissible colour among 1..cap, spilling to
/// first-fit colours above the cap only when every capped colour clashes.
/// The spill keeps the colouring proper unconditionally; how often it
/// happened is reported by the caller.
inline Colouring random_capped_colouring(const Graph& g, std::uint32_t palette_cap,
                                         std::mt19937_64& rng, bool* overflowed = nullptr) {
    const std::size_t n = g.num_vertices();
    Colouring col;
    col.assignment.assign(n, 0);
    if (overflowed) *overflowed = false;

    std::vector<std::uint32_t> order(n);
    for (std::uint32_t v = 0; v < n; ++v) order[v] = v;
    deterministic_shuffle(order, rng);

    std::vector<std::uint32_t> perm(palette_cap);
    std::vector<char> clashes(static_cast<std::size_t>(palette_cap) + 2, 0);
    std::uint32_t max_used = 1;
    for (auto v : order) {
        if (clashes.size() < static_cast<std::size_t>(max_used) + 2)
            clashes.resize(static_cast<std::size_t>(max_used) + 2, 0);
        std::fill(clashes.begin(), clashes.end(), 0);
        for (auto u : g.neighbours(v))
            if (col.assignment[u] != 0 && col.assignment[u] < clashes.size())
                clashes[col.assignment[u]] = 1;
        for (std::uint32_t i = 0; i < palette_cap; ++i) perm[i] = i + 1;
        deterministic_shuffle(perm, rng);
        std::uint32_t chosen = 0;
        for (auto candidate : perm)
            if (!clashes[candidate]) { chosen = candidate; break; }
        if (chosen == 0) {
            if (overflowed) *overflowed = true;
            chosen = palette_cap + 1;
            while (chosen < clashes.size() && clashes[chosen]) ++chosen;
        }
        col.assignment[v] = chosen;
        max_used = std::max(max_used, chosen);
    }
    col.palette = max_used;
    return col;
}

struct RefutationStats {
    Rational rate{0, 1};
    std::uint64_t trials = 0;
    std::uint64_t refuted = 0;
    std::uint64_t overflow_trials = 0;  ///< colouring spilled past the palette cap
    std::uint64_t unknown_trials = 0;   ///< meta-path search hit its budget
};

/// Samples `trials` graphs at p = n^-beta, builds a random proper colouring
/// aimed at palette_cap colours for each, and reports how often the refuter
/// finds a witness cycle. palette_cap = 0 selects the default n/8.
inline RefutationStats refutation_rate(std::size_t n, double beta, std::size_t c,
                                       std::uint64_t trials, std::uint32_t palette_cap,
                                       std::uint64_t seed, const RefuteOptions& opts = {}) {
    if (trials < 1) throw BadInputError("need at least one trial");
    if (c % 2 != 0 && !opts.allow_odd)
        throw OddCUnsupportedError("refutation for odd c is gated behind allow_odd");
    if (palette_cap == 0) palette_cap = static_cast<std::uint32_t>(std::max<std::size_t>(1, n / 8));

    RefutationStats stats;
    stats.trials = trials;
    const double p = std::pow(static_cast<double>(n), -beta);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::uint64_t trial_seed = sweep_trial_seed(seed, n, beta, trial);
        Graph g = sample_graph(EdgeProbabilityModel::uniform(n, p), trial_seed);
        std::mt19937_64 rng(mix_seed(trial_seed, 0xC0110C));
        bool overflowed = false;
        Colouring col = random_capped_colouring(g, palette_cap, rng, &overflowed);
        if (overflowed) ++stats.overflow_trials;
        SearchAnswer answer = SearchAnswer::no;
        auto witness = refute_colouring(g, col, c, opts, &answer);
        if (witness) ++stats.refuted;
        else if (answer == SearchAnswer::unknown) ++stats.unknown_trials;
    }
    stats.rate = Rational{static_cast<std::int64_t>(stats.refuted),
                          static_cast<std::int64_t>(trials)};
    return stats;
}

/// Parses a sweep config from JSON. eta accepts {"num":..,"den":..}, a
/// "num/den" or decimal string, or a plain integer.
inline SweepConfig parse_sweep_config(const nlohmann::json& j) {
    if (!j.is_object()) throw BadInputError("sweep config must be a JSON object");
    SweepConfig cfg;
    if (!j.contains("n_grid") || !j.contains("beta_grid"))
        throw BadInputError("sweep config needs n_grid and beta_grid");
    for (const auto& n : j["n_grid"]) cfg.n_grid.push_back(n.get<std::size_t>());
    for (const auto& b : j["beta_grid"]) cfg.beta_grid.push_back(b.get<double>());
    if (j.contains("c")) cfg.c = j["c"].get<std::size_t>();
    if (j.contains("eta")) {
        const auto& e = j["eta"];
        if (e.is_object()) cfg.eta = Rational{e.at("num").get<std::int64_t>(),
                                              e.at("den").get<std::int64_t>()};
        else if (e.is_string()) cfg.eta = parse_rational(e.get<std::string>());
        else cfg.eta = Rational{e.get<std::int64_t>(), 1};
    }
    if (j.contains("trials_per_cell")) cfg.trials_per_cell = j["trials_per_cell"].get<std::uint64_t>();
    if (j.contains("algorithm")) {
        std::string a = j["algorithm"].get<std::string>();
        if (a == "power_graph") cfg.algorithm = SweepAlgorithm::power_graph;
        else if (a == "lll") cfg.algorithm = SweepAlgorithm::lll;
        else if (a == "exact") cfg.algorithm = SweepAlgorithm::exact;
        else throw BadInputError("unknown algorithm '" + a + "'");
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("caps")) {
        const auto& caps = j["caps"];
        if (caps.contains("verify_cycle_cap"))
            cfg.caps.verify_cycle_cap = caps["verify_cycle_cap"].get<std::uint64_t>();
        if (caps.contains("verify_node_budget"))
            cfg.caps.verify_node_budget = caps["verify_node_budget"].get<std::uint64_t>();
        if (caps.contains("lll_max_resamples"))
            cfg.caps.lll_max_resamples = caps["lll_max_resamples"].get<std::uint64_t>();
        if (caps.contains("lll_scan_budget"))
            cfg.caps.lll_scan_budget = caps["lll_scan_budget"].get<std::uint64_t>();
        if (caps.contains("exact_vertex_cap"))
            cfg.caps.exact_vertex_cap = caps["exact_vertex_cap"].get<std::size_t>();
    }
    if (j.contains("forbidden")) {
        ForbiddenSpec spec;
        spec.family = j["forbidden"].at("family").get<std::string>();
        if (j["forbidden"].contains("param")) spec.param = j["forbidden"]["param"].get<std::size_t>();
        cfg.forbidden = spec;
    }
    if (j.contains("timings")) cfg.timings = j["timings"].get<bool>();
    cfg.validate();
    return cfg;
}

}  // namespace etacolor
