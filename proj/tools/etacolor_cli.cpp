// Command-line surface for the etacolor library: graph generation, cycle
// censuses, colouring construction, verification, refutation, Monte Carlo
// sweeps, and closed-form bound tables.
//
// Exit codes: 0 success; 1 verification failure (verify: colouring rejected;
// refute: no witness); 2 budget or cap exhaustion; 3 bad input.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <etacolor/etacolor.hpp>

namespace {

using namespace etacolor;

void emit(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw BadInputError("cannot open output file: " + out_path);
    f << data;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const TimeoutError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

struct GenArgs {
    std::size_t n = 0;
    double p = -1.0;
    double beta = -1.0;
    std::uint64_t seed = 0;
    std::string forbidden_family;
    std::size_t forbidden_param = 0;
    std::string out, format = "csv";
};

int run_gen(const GenArgs& a) {
    if ((a.p < 0.0) == (a.beta < 0.0))
        throw BadInputError("give exactly one of --p or --beta");
    EdgeProbabilityModel model = a.p >= 0.0 ? EdgeProbabilityModel::uniform(a.n, a.p)
                                            : EdgeProbabilityModel::power_law(a.n, a.beta);
    if (!a.forbidden_family.empty())
        model.forbidden = make_forbidden({a.forbidden_family, a.forbidden_param}, a.n);
    Graph g = sample_graph(model, a.seed);
    if (a.format == "json") {
        emit(a.out, graph_to_json(g).dump(2) + "\n");
    } else {
        std::ostringstream os;
        write_edge_list(os, g);
        emit(a.out, os.str());
    }
    return 0;
}

struct CyclesArgs {
    std::string in;
    std::size_t min_len = 3, max_len = 0;
    std::uint64_t cap = 1'000'000;
    std::uint64_t budget = kDefaultNodeBudget;
    std::string out, format = "csv";
};

int run_cycles(const CyclesArgs& a) {
    Graph g = load_graph(a.in);
    std::size_t max_len =
        a.max_len == 0 ? std::max<std::size_t>(g.num_vertices(), a.min_len) : a.max_len;
    CycleCensus census = cycle_census(g, a.min_len, max_len, a.cap, a.budget);
    if (a.format == "json") {
        nlohmann::json counts = nlohmann::json::object();
        for (const auto& [len, cnt] : census.counts) counts[std::to_string(len)] = cnt;
        nlohmann::json j = {{"counts", std::move(counts)},
                            {"total", census.total()},
                            {"truncated", census.truncated}};
        emit(a.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "length,count\n";
        for (const auto& [len, cnt] : census.counts) os << len << ',' << cnt << '\n';
        emit(a.out, os.str());
    }
    if (census.truncated) {
        std::cerr << "warning: census truncated by cycle cap or node budget\n";
        return 2;
    }
    return 0;
}

struct ColorArgs {
    std::string in;
    std::string algorithm = "power";
    std::size_t c = 3;
    std::string eta = "0/1";
    std::uint64_t seed = 1;
    std::uint64_t theta = 0;
    std::size_t cutoff = 0;
    double p = -1.0, beta = -1.0;
    std::uint64_t max_resamples = 100'000;
    std::uint64_t scan_budget = 2'000'000'000;
    bool force_exact = false;
    std::string out, format = "csv";
};

int run_color(const ColorArgs& a) {
    Graph g = load_graph(a.in);
    Colouring col;
    if (a.algorithm == "greedy") {
        col = greedy_colouring(g);
    } else if (a.algorithm == "power") {
        col = power_graph_colouring(g, a.c);
    } else if (a.algorithm == "exact") {
        ExactSolverLimits limits;
        limits.override_cap = a.force_exact;
        col = exact_acyclic_chromatic(g, parse_rational(a.eta), a.c, limits).second;
    } else if (a.algorithm == "lll") {
        std::size_t cutoff = a.cutoff;
        if (cutoff == 0)
            cutoff = (a.beta > 0.0 && a.beta < 1.0) ? choose_path_cutoff(a.beta, a.c) : a.c + 1;
        std::uint64_t theta = a.theta;
        if (theta == 0) {
            double p = a.p;
            if (p < 0.0 && a.beta >= 0.0)
                p = std::pow(static_cast<double>(g.num_vertices()), -a.beta);
            if (p < 0.0)
                throw BadInputError("lll colouring needs --theta, or --p/--beta to derive one");
            theta = std::max<std::uint64_t>(
                lll_palette_bound(g.num_vertices(), p, cutoff, a.c),
                std::max<std::uint64_t>(a.c, 2));
        }
        auto res = lll_path_colouring(g, cutoff, a.c, theta, a.seed, a.max_resamples,
                                      a.scan_budget);
        if (!res.converged) {
            std::cerr << "error: resampling did not converge within its budget ("
                      << res.resamples << " resamples, scan "
                      << (res.scan_complete ? "complete" : "incomplete") << ")\n";
            return 2;
        }
        col = std::move(res.colouring);
    } else {
        throw BadInputError("unknown algorithm '" + a.algorithm + "'");
    }

    if (a.format == "json") {
        emit(a.out, colouring_to_json(col).dump(2) + "\n");
    } else {
        std::ostringstream os;
        write_colouring(os, col);
        emit(a.out, os.str());
    }
    return 0;
}

struct VerifyArgs {
    std::string in, colouring;
    std::string eta = "0/1";
    std::size_t c = 3;
    std::size_t max_len = 0;
    std::uint64_t cap = 1'000'000;
    std::uint64_t budget = kDefaultNodeBudget;
    std::size_t witness_cap = 8;
    std::string out, format = "json";
};

int run_verify(const VerifyArgs& a) {
    Graph g = load_graph(a.in);
    Colouring col = load_colouring(a.colouring, g.num_vertices());
    VerifyOptions vo;
    vo.cycle_cap = a.cap;
    vo.node_budget = a.budget;
    vo.max_len = a.max_len;
    vo.witness_cap = a.witness_cap;
    AcyclicityReport report = verify_colouring(g, col, parse_rational(a.eta), a.c, vo);
    if (a.format == "csv") {
        std::ostringstream os;
        os << "cycles_total,cycles_bad,bad_fraction,proper,passes,truncated\n"
           << report.cycles_total << ',' << report.cycles_bad << ','
           << report.bad_fraction.str() << ',' << (report.proper ? "true" : "false") << ','
           << (report.passes ? "true" : "false") << ','
           << (report.truncated ? "true" : "false") << '\n';
        emit(a.out, os.str());
    } else {
        emit(a.out, report_to_json(report).dump(2) + "\n");
    }
    if (!report.passes) return 1;
    if (report.truncated) return 2;
    return 0;
}

struct RefuteArgs {
    std::string in, colouring;
    std::size_t c = 4;
    bool allow_odd = false;
    std::uint64_t budget = 50'000'000;
    std::string out, format = "csv";
};

int run_refute(const RefuteArgs& a) {
    Graph g = load_graph(a.in);
    Colouring col = load_colouring(a.colouring, g.num_vertices());
    RefuteOptions opts;
    opts.allow_odd = a.allow_odd;
    opts.path_budget = a.budget;
    SearchAnswer answer = SearchAnswer::no;
    auto witness = refute_colouring(g, col, a.c, opts, &answer);
    if (witness) {
        if (a.format == "json") {
            nlohmann::json j = {{"witness", *witness}};
            emit(a.out, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            for (std::size_t i = 0; i < witness->size(); ++i)
                os << (i ? "," : "") << (*witness)[i];
            os << '\n';
            emit(a.out, os.str());
        }
        return 0;
    }
    if (answer == SearchAnswer::unknown) {
        std::cerr << "meta-path search exhausted its budget; refutation undecided\n";
        return 2;
    }
    std::cerr << "no witness cycle found\n";
    return 1;
}

struct SweepArgs {
    std::string config;
    bool fit = false;
    std::string out, format = "csv";
};

int run_sweep_cmd(const SweepArgs& a) {
    std::ifstream in(a.config);
    if (!in) throw BadInputError("cannot open config file: " + a.config);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, true, true);
    SweepConfig cfg = parse_sweep_config(j);
    auto records = run_sweep(cfg);
    if (a.fit) {
        auto fits = fit_exponents(records);
        if (a.format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& f : fits)
                arr.push_back({{"beta", f.beta},
                               {"alpha_hat", f.alpha_hat},
                               {"stderr", f.stderr_alpha},
                               {"cells_used", f.cells_used}});
            emit(a.out, arr.dump(2) + "\n");
        } else {
            emit(a.out, fits_to_csv(fits));
        }
    } else {
        if (a.format == "json") emit(a.out, records_to_json(records).dump(2) + "\n");
        else emit(a.out, records_to_csv(records));
    }
    return 0;
}

struct BoundsArgs {
    std::string table;
    std::size_t c = 3;
    std::size_t c_max = 8;
    double d = 1.0;
    std::uint64_t trials = 2000;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> t_list{100, 1000};
    std::vector<double> p_list{0.1, 0.3, 0.5};
    std::vector<double> eps_list{0.1, 0.2, 0.4};
    std::vector<std::size_t> n_list{100, 200};
    std::vector<std::size_t> k_list{3, 4, 5};
    std::vector<double> beta_list{0.5};
    std::string out, format = "csv";
};

int run_bounds(const BoundsArgs& a) {
    std::ostringstream os;
    nlohmann::json arr = nlohmann::json::array();
    if (a.table == "beta_crit") {
        os << "c,eta,lower,upper\n";
        for (std::size_t c = 3; c <= a.c_max; ++c) {
            auto b = critical_exponent_bounds(c, Rational{0, 1});
            os << c << ',' << b.eta.str() << ',' << b.lower.str() << ',' << b.upper.str() << '\n';
            arr.push_back({{"c", c},
                           {"eta", rational_to_json(b.eta)},
                           {"lower", rational_to_json(b.lower)},
                           {"upper", rational_to_json(b.upper)}});
        }
    } else if (a.table == "chernoff") {
        os << "t,p,eps,bound,empirical,stderr\n";
        for (auto t : a.t_list)
            for (double p : a.p_list)
                for (double eps : a.eps_list) {
                    double mu = static_cast<double>(t) * p;
                    double bound = chernoff_bound(mu, eps);
                    Rational tail = bernoulli_tail(t, p, eps, a.trials, a.seed);
                    double f = tail.to_double();
                    double se = std::sqrt(f * (1.0 - f) / static_cast<double>(a.trials));
                    os << t << ',' << format_double(p) << ',' << format_double(eps) << ','
                       << format_double(bound) << ',' << format_double(f) << ','
                       << format_double(se) << '\n';
                    arr.push_back({{"t", t}, {"p", p}, {"eps", eps}, {"bound", bound},
                                   {"empirical", f}, {"stderr", se}});
                }
    } else if (a.table == "cycle_bracket") {
        os << "n,p,k,lower,exact,upper\n";
        for (auto n : a.n_list)
            for (double p : a.p_list)
                for (auto k : a.k_list) {
                    auto [lo, hi] = expected_cycle_bracket(n, p, k);
                    double exact = expected_cycles_exact(n, p, k);
                    os << n << ',' << format_double(p) << ',' << k << ',' << format_double(lo)
                       << ',' << format_double(exact) << ',' << format_double(hi) << '\n';
                    arr.push_back({{"n", n}, {"p", p}, {"k", k}, {"lower", lo},
                                   {"exact", exact}, {"upper", hi}});
                }
    } else if (a.table == "theta") {
        os << "n,beta,g,c,theta,conditions_met\n";
        for (auto n : a.n_list)
            for (double beta : a.beta_list) {
                double p = std::pow(static_cast<double>(n), -beta);
                std::size_t g = (beta > 0.0 && beta < 1.0) ? choose_path_cutoff(beta, a.c)
                                                           : a.c + 1;
                std::uint64_t theta = std::max<std::uint64_t>(
                    lll_palette_bound(n, p, g, a.c, a.d),
                    std::max<std::uint64_t>(a.c, 2));
                bool met = check_lll_conditions(theta, n, p, g, a.c, a.d);
                os << n << ',' << format_double(beta) << ',' << g << ',' << a.c << ','
                   << theta << ',' << (met ? "true" : "false") << '\n';
                arr.push_back({{"n", n}, {"beta", beta}, {"g", g}, {"c", a.c},
                               {"theta", theta}, {"conditions_met", met}});
            }
    } else {
        throw BadInputError("unknown table '" + a.table + "'");
    }
    if (a.format == "json") emit(a.out, arr.dump(2) + "\n");
    else emit(a.out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-graph cycle-colouring toolkit"};
    app.require_subcommand(1);

    auto add_format = [](CLI::App* sub, std::string& fmt) {
        sub->add_option("--format", fmt, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "sample a random graph and print its edge list");
    gen_cmd->add_option("--n", gen.n, "number of vertices")->required();
    gen_cmd->add_option("--p", gen.p, "uniform edge probability");
    gen_cmd->add_option("--beta", gen.beta, "density exponent, p = n^-beta");
    gen_cmd->add_option("--seed", gen.seed, "sampling seed");
    gen_cmd->add_option("--forbidden", gen.forbidden_family,
                        "forbidden family: empty|clique|matching|cycle");
    gen_cmd->add_option("--forbidden-param", gen.forbidden_param, "forbidden family size");
    gen_cmd->add_option("--out", gen.out, "output file (stdout when omitted)");
    add_format(gen_cmd, gen.format);

    CyclesArgs cycles;
    auto* cycles_cmd = app.add_subcommand("cycles", "census of simple cycles by length");
    cycles_cmd->add_option("--in", cycles.in, "graph file (edge list or JSON)")->required();
    cycles_cmd->add_option("--min", cycles.min_len, "minimum cycle length");
    cycles_cmd->add_option("--max", cycles.max_len, "maximum cycle length (0 = n)");
    cycles_cmd->add_option("--cap", cycles.cap, "stop after this many cycles");
    cycles_cmd->add_option("--budget", cycles.budget, "search node budget");
    cycles_cmd->add_option("--out", cycles.out, "output file");
    add_format(cycles_cmd, cycles.format);

    ColorArgs color;
    auto* color_cmd = app.add_subcommand("color", "construct a colouring");
    color_cmd->add_option("--in", color.in, "graph file")->required();
    color_cmd->add_option("--algorithm", color.algorithm, "greedy|power|lll|exact")
        ->check(CLI::IsMember({"greedy", "power", "lll", "exact"}));
    color_cmd->add_option("--c", color.c, "cycle-length threshold");
    color_cmd->add_option("--eta", color.eta, "bad-cycle budget (exact algorithm)");
    color_cmd->add_option("--seed", color.seed, "resampling seed (lll)");
    color_cmd->add_option("--theta", color.theta, "palette size (lll; 0 = derive)");
    color_cmd->add_option("--cutoff", color.cutoff, "path cutoff g (lll; 0 = derive)");
    color_cmd->add_option("--p", color.p, "edge probability used to derive theta");
    color_cmd->add_option("--beta", color.beta, "density exponent used to derive g and theta");
    color_cmd->add_option("--max-resamples", color.max_resamples, "resampling budget (lll)");
    color_cmd->add_option("--scan-budget", color.scan_budget, "path-scan node budget (lll)");
    color_cmd->add_flag("--force-exact", color.force_exact,
                        "lift the exact solver's vertex cap");
    color_cmd->add_option("--out", color.out, "output file");
    add_format(color_cmd, color.format);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "check a colouring against the cycle rule");
    verify_cmd->add_option("--in", verify.in, "graph file")->required();
    verify_cmd->add_option("--colouring", verify.colouring, "colouring file")->required();
    verify_cmd->add_option("--eta", verify.eta, "allowed bad-cycle fraction");
    verify_cmd->add_option("--c", verify.c, "cycle-length threshold");
    verify_cmd->add_option("--max-len", verify.max_len, "longest cycle to census (0 = n)");
    verify_cmd->add_option("--cap", verify.cap, "cycle census cap");
    verify_cmd->add_option("--budget", verify.budget, "search node budget");
    verify_cmd->add_option("--witness-cap", verify.witness_cap, "max recorded bad cycles");
    verify_cmd->add_option("--out", verify.out, "output file");
    add_format(verify_cmd, verify.format);

    RefuteArgs refute;
    auto* refute_cmd = app.add_subcommand("refute", "search for a short-coloured cycle witness");
    refute_cmd->add_option("--in", refute.in, "graph file")->required();
    refute_cmd->add_option("--colouring", refute.colouring, "colouring file")->required();
    refute_cmd->add_option("--c", refute.c, "cycle-length threshold");
    refute_cmd->add_flag("--allow-odd", refute.allow_odd, "enable the odd-c gadget");
    refute_cmd->add_option("--budget", refute.budget, "meta-path search node budget");
    refute_cmd->add_option("--out", refute.out, "output file");
    add_format(refute_cmd, refute.format);

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a Monte Carlo (n, beta) sweep");
    sweep_cmd->add_option("--config", sweep.config, "sweep config JSON file")->required();
    sweep_cmd->add_flag("--fit", sweep.fit, "emit fitted exponents instead of raw records");
    sweep_cmd->add_option("--out", sweep.out, "output file");
    add_format(sweep_cmd, sweep.format);

    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound tables");
    bounds_cmd->add_option("--table", bounds.table,
                           "beta_crit|chernoff|cycle_bracket|theta")
        ->required()
        ->check(CLI::IsMember({"beta_crit", "chernoff", "cycle_bracket", "theta"}));
    bounds_cmd->add_option("--c", bounds.c, "cycle-length threshold (chernoff-free tables)");
    bounds_cmd->add_option("--c-max", bounds.c_max, "largest c row (beta_crit)");
    bounds_cmd->add_option("--d", bounds.d, "degree constant D (theta)");
    bounds_cmd->add_option("--trials", bounds.trials, "Monte Carlo trials (chernoff)");
    bounds_cmd->add_option("--seed", bounds.seed, "Monte Carlo seed (chernoff)");
    bounds_cmd->add_option("--t", bounds.t_list, "indicator counts (chernoff)");
    bounds_cmd->add_option("--p", bounds.p_list, "probabilities (chernoff, cycle_bracket)");
    bounds_cmd->add_option("--eps", bounds.eps_list, "deviation fractions (chernoff)");
    bounds_cmd->add_option("--n-list", bounds.n_list, "vertex counts (cycle_bracket, theta)");
    bounds_cmd->add_option("--k", bounds.k_list, "cycle lengths (cycle_bracket)");
    bounds_cmd->add_option("--beta-list", bounds.beta_list, "density exponents (theta)");
    bounds_cmd->add_option("--out", bounds.out, "output file");
    add_format(bounds_cmd, bounds.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    if (gen_cmd->parsed()) return guarded([&] { return run_gen(gen); });
    if (cycles_cmd->parsed()) return guarded([&] { return run_cycles(cycles); });
    if (color_cmd->parsed()) return guarded([&] { return run_color(color); });
    if (verify_cmd->parsed()) return guarded([&] { return run_verify(verify); });
    if (refute_cmd->parsed()) return guarded([&] { return run_refute(refute); });
    if (sweep_cmd->parsed()) return guarded([&] { return run_sweep_cmd(sweep); });
    if (bounds_cmd->parsed()) return guarded([&] { return run_bounds(bounds); });
    return 3;
}
