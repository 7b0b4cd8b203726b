#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <etacolor/etacolor.hpp>

#include "oracles.hpp"

using namespace etacolor;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("tail bound evaluates its closed form") {
    CHECK_THAT(chernoff_bound(100, 0.2), WithinRel(2.0 * std::exp(-1.0), 1e-12));
    CHECK_THAT(chernoff_bound(100, 0.2), WithinRel(0.7357588823428847, 1e-9));
    // vacuous limit and the doubling law
    CHECK_THAT(chernoff_bound(100, 1e-8), WithinAbs(2.0, 1e-9));
    double b1 = chernoff_bound(50, 0.3);
    double b2 = chernoff_bound(100, 0.3);
    CHECK_THAT(b2, WithinRel(b1 * b1 / 2.0, 1e-9));

    CHECK_THROWS_AS(chernoff_bound(0.0, 0.2), DomainError);
    CHECK_THROWS_AS(chernoff_bound(-5.0, 0.2), DomainError);
    CHECK_THROWS_AS(chernoff_bound(100, 0.0), DomainError);
    CHECK_THROWS_AS(chernoff_bound(100, 0.5), DomainError);
    CHECK_THROWS_AS(chernoff_bound(100, -0.1), DomainError);
}

TEST_CASE("measured indicator-sum tails stay under the bound") {
    struct Cell { std::uint64_t t; double p; double eps; };
    const Cell cells[] = {{1000, 0.3, 0.2}, {100, 0.5, 0.4}, {1000, 0.1, 0.1},
                          {100, 0.1, 0.4},  {1000, 0.5, 0.2}};
    const std::uint64_t trials = 2000;
    for (const auto& cell : cells) {
        double mu = static_cast<double>(cell.t) * cell.p;
        double bound = chernoff_bound(mu, cell.eps);
        Rational tail = bernoulli_tail(cell.t, cell.p, cell.eps, trials, 404);
        double f = static_cast<double>(tail.num) / static_cast<double>(tail.den);
        double se = std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
        INFO("t=" << cell.t << " p=" << cell.p << " eps=" << cell.eps);
        CHECK(f <= bound + 3.0 * se);
    }
}

TEST_CASE("degenerate and out-of-range tail measurements stay well-defined") {
    // a deterministic sum never deviates
    CHECK(bernoulli_tail(50, 1.0, 0.3, 20, 9) == Rational{0, 1});
    // eps beyond the bound's domain still yields the raw fraction
    Rational raw = bernoulli_tail(10, 0.5, 0.9, 40, 11);
    CHECK(Rational{0, 1} <= raw);
    CHECK(raw <= Rational{1, 1});
    CHECK_THROWS_AS(bernoulli_tail(10, 0.5, 0.2, 0, 1), BadInputError);
    CHECK_THROWS_AS(bernoulli_tail(10, 1.5, 0.2, 5, 1), BadInputError);
}

TEST_CASE("graph-statistic tails are deterministic and bounded") {
    auto model = EdgeProbabilityModel::uniform(30, 0.2);
    double mu_edges = 435.0 * 0.2;   // C(30,2) * p
    Rational tail = empirical_tail(model, GraphStatistic::edge_count, 0.2, 300, 77);
    Rational again = empirical_tail(model, GraphStatistic::edge_count, 0.2, 300, 77);
    CHECK(tail == again);
    double f = static_cast<double>(tail.num) / static_cast<double>(tail.den);
    CHECK(f <= chernoff_bound(mu_edges, 0.2));

    Rational deg = empirical_tail(model, GraphStatistic::vertex_degree, 0.45, 300, 78);
    CHECK(Rational{0, 1} <= deg);
    CHECK(deg <= Rational{1, 1});
    CHECK_THROWS_AS(empirical_tail(model, GraphStatistic::edge_count, 0.2, 0, 1), BadInputError);
}

TEST_CASE("cycle-count bracket and exact first moment") {
    auto [lo, hi] = expected_cycle_bracket(200, 0.05, 3);
    CHECK_THAT(lo, WithinRel(1000.0 / 12.0, 1e-9));
    CHECK_THAT(hi, WithinRel(1000.0, 1e-9));
    CHECK_THAT(expected_cycles_exact(200, 0.05, 3), WithinRel(164.175, 1e-9));

    auto [ulo, uhi] = expected_cycle_bracket(100, 0.01, 3);
    CHECK_THAT(ulo, WithinRel(1.0 / 12.0, 1e-9));
    CHECK_THAT(uhi, WithinRel(1.0, 1e-9));

    CHECK(expected_cycles_exact(5, 0.5, 6) == 0.0);
    CHECK_THROWS_AS(expected_cycle_bracket(100, 0.1, 2), BadInputError);
    CHECK_THROWS_AS(expected_cycles_exact(100, 0.1, 2), BadInputError);
}

TEST_CASE("the exact moment lies inside the bracket across a regime grid") {
    // the lower end needs the falling factorial to hold half of n^k, true
    // whenever k^2 is well below n
    for (std::size_t n : {std::size_t{64}, std::size_t{128}, std::size_t{256}})
        for (std::size_t k = 3; k <= 8; ++k)
            for (double p : {0.01, 0.1, 0.5}) {
                auto [lo, hi] = expected_cycle_bracket(n, p, k);
                double exact = expected_cycles_exact(n, p, k);
                INFO("n=" << n << " k=" << k << " p=" << p);
                CHECK(lo < exact);
                CHECK(exact < hi);
            }
}

TEST_CASE("short-cycle fraction from literal censuses") {
    CycleCensus a;
    a.counts = {{3, 0}, {4, 0}, {5, 7}};
    CHECK(short_cycle_fraction(a, 5) == Rational{0, 1});

    CycleCensus b;
    b.counts = {{3, 1}, {4, 1}, {5, 2}};
    CHECK(short_cycle_fraction(b, 5) == Rational{1, 2});
    CHECK(short_cycle_fraction(b, 3) == Rational{0, 1});   // nothing below 3

    CycleCensus zero;
    zero.counts = {{3, 0}, {4, 0}, {5, 0}, {6, 0}};
    CHECK(short_cycle_fraction(zero, 6) == Rational{0, 1});

    CycleCensus truncated = b;
    truncated.truncated = true;
    CHECK_THROWS_AS(short_cycle_fraction(truncated, 5), DomainError);

    CycleCensus missing_start;
    missing_start.counts = {{4, 1}, {5, 1}};
    CHECK_THROWS_AS(short_cycle_fraction(missing_start, 5), DomainError);

    CycleCensus too_short;
    too_short.counts = {{3, 1}, {4, 1}};
    CHECK_THROWS_AS(short_cycle_fraction(too_short, 5), DomainError);
}

TEST_CASE("short-cycle fraction of a real census matches direct enumeration") {
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                        {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
    auto census = cycle_census(petersen, 3, 6);
    REQUIRE_FALSE(census.truncated);
    auto len5 = static_cast<std::int64_t>(oracle::cycles_by_subsets(petersen, 5, 5).size());
    auto len6 = static_cast<std::int64_t>(oracle::cycles_by_subsets(petersen, 6, 6).size());
    REQUIRE(len5 > 0);
    CHECK(short_cycle_fraction(census, 5) == Rational{0, 1});   // girth is 5
    CHECK(short_cycle_fraction(census, 6) == Rational{len5, len5 + len6});
}

TEST_CASE("the weight of the census tier just below the cutoff shrinks as the cutoff grows") {
    // aggregate censuses of G(200, 0.05) (so np = 10) over a dozen seeds and
    // compare counts[g-1] / sum_{k<=g} counts[k] across cutoffs
    std::map<std::size_t, std::uint64_t> counts;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = sample_graph(EdgeProbabilityModel::uniform(200, 0.05), 9000 + seed);
        auto census = cycle_census(g, 3, 6, 2'000'000);
        REQUIRE_FALSE(census.truncated);
        for (const auto& [len, cnt] : census.counts) counts[len] += cnt;
    }
    auto tier = [&](std::size_t g) {
        std::uint64_t below = counts.at(g - 1), total = 0;
        for (std::size_t k = 3; k <= g; ++k) total += counts.at(k);
        return static_cast<double>(below) / static_cast<double>(total);
    };
    CHECK(tier(4) > tier(5));
    CHECK(tier(5) > tier(6));
}

TEST_CASE("critical exponent window") {
    auto b3 = critical_exponent_bounds(3, Rational{0, 1});
    CHECK(b3.lower == Rational{1, 10});
    CHECK(b3.upper == Rational{1, 2});
    auto b4 = critical_exponent_bounds(4, Rational{0, 1});
    CHECK(b4.lower == Rational{1, 14});
    CHECK(b4.upper == Rational{2, 3});

    auto relaxed = critical_exponent_bounds(3, Rational{1, 100});
    CHECK(relaxed.lower == Rational{0, 1});
    CHECK(relaxed.upper == Rational{0, 1});

    for (std::size_t c = 3; c <= 12; ++c) {
        auto b = critical_exponent_bounds(c, Rational{0, 1});
        CHECK(b.lower < b.upper);
    }

    CHECK_THROWS_AS(critical_exponent_bounds(2, Rational{0, 1}), BadInputError);
    CHECK_THROWS_AS(critical_exponent_bounds(3, Rational{1, 1}), BadInputError);
    CHECK_THROWS_AS(critical_exponent_bounds(3, Rational{-1, 2}), BadInputError);
}
