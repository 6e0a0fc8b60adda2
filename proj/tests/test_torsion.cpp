#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "tropigusa/torsion.hpp"

using namespace tropigusa;

namespace {

CycleDivisorSpec spec_of(std::size_t n, std::initializer_list<long> a, Rational len = 1) {
    CycleDivisorSpec s;
    s.N = n;
    s.a.assign(a.begin(), a.end());
    s.edge_length = len;
    return s;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("cycle principality criterion") {
    CHECK(check_cycle_principal(spec_of(5, {-2, 2, 1, 0, -1})));
    CHECK_FALSE(check_cycle_principal(spec_of(5, {1, -1, 0, 0, 0})));
    CHECK(check_cycle_principal(spec_of(7, {-1, 1, 1, 1, 1, -1, -2})));
    CHECK_THROWS_AS(check_cycle_principal(spec_of(3, {1, 1, 1})), non_zero_degree);
}

TEST_CASE("criterion agrees with solver and Laplacian membership") {
    testutil::Rng rng(51);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.integer(2, 10));
        std::vector<Integer> a(n, Integer(0));
        long acc = 0;
        for (std::size_t i = 1; i < n; ++i) {
            long x = rng.integer(-2, 2);
            a[i] = x;
            acc += x;
        }
        a[0] = -acc;
        CycleDivisorSpec s{n, a, 1};
        auto cyc = MetricGraph::cycle(n);
        bool crit = check_cycle_principal(s);
        CHECK(crit == is_principal(cyc, GraphDivisor{a}).principal);
        CHECK(crit == testutil::cycle_solve_oracle(a).has_value());
    }
}

TEST_CASE("elliptic reports reproduce the three torsion examples") {
    // N = 4: (f) = P1 + P2 - P3 - O, (g) = P2 + P3 - P1 - O
    auto r4 = elliptic_trop(4, {spec_of(4, {-1, 1, 1, -1}, Rational(1, 4)),
                                spec_of(4, {-1, -1, 1, 1}, Rational(1, 4))},
                            {"f", "g"});
    CHECK(r4.length_in_vj == Rational(1));
    CHECK(format_vj_multiple(r4.length_in_vj) == "-v(j)");
    CHECK(r4.classification.verdict == TropVerdict::Faithful);
    CHECK(r4.expansions == ints({1, 1, 1, 1}));

    // N = 5: (f) = 2P1 + P2 - P4 - 2O, (g) = -P1 + 2P3 - O
    auto r5 = elliptic_trop(5, {spec_of(5, {-2, 2, 1, 0, -1}, Rational(1, 5)),
                                spec_of(5, {-1, -1, 0, 2, 0}, Rational(1, 5))},
                            {"f", "g"});
    CHECK(r5.length_in_vj == Rational(6, 5));
    CHECK(format_vj_multiple(r5.length_in_vj) == "-6/5*v(j)");
    CHECK(r5.expansions == ints({2, 1, 1, 1, 1}));
    CHECK(r5.classification.verdict == TropVerdict::Scaled);
    CHECK(r5.functions[0].slopes == ints({2, 0, -1, -1, 0}));
    CHECK(r5.functions[1].slopes == ints({0, 1, 1, -1, -1}));

    // N = 7: (f) = -P1 - P2 + P3 + P4 + 2P5 - 2O, (g) = -O + P1 + .. - P5 - 2P6
    auto r7 = elliptic_trop(7, {spec_of(7, {-2, -1, -1, 1, 1, 2, 0}, Rational(1, 7)),
                                spec_of(7, {-1, 1, 1, 1, 1, -1, -2}, Rational(1, 7))},
                            {"f", "g"});
    CHECK(r7.length_in_vj == Rational(10, 7));
    CHECK(format_vj_multiple(r7.length_in_vj) == "-10/7*v(j)");
    CHECK(r7.expansions == ints({2, 1, 2, 1, 2, 1, 1}));
    CHECK(r7.functions[0].slopes == ints({0, 1, 2, 1, 0, -2, -2}));
    CHECK(r7.functions[1].slopes == ints({2, 1, 0, -1, -2, -1, 1}));
}

TEST_CASE("elliptic report rejects non-principal divisors") {
    CHECK_THROWS_AS(elliptic_trop(5, {spec_of(5, {1, -1, 0, 0, 0}, Rational(1, 5))}),
                    not_principal);
}

TEST_CASE("genus-2 divisor pairs from torsion configurations") {
    auto [f, g] = genus2_divisor_pair({9, 7, 5});
    CHECK(f.a == ints({-2, 0, -1, 0, -1, 2, 0, 2, 0}));
    CHECK(g.a == ints({-2, 0, 2, 0, 2, -1, 0, -1, 0}));

    auto [f2, g2] = genus2_divisor_pair({9, 8, 4});
    CHECK(f2.a == ints({-2, -1, 0, 0, 2, -1, 0, 0, 2}));
    CHECK(g2.a == ints({-2, 2, 0, 0, -1, 2, 0, 0, -1}));

    CHECK_THROWS_AS(genus2_divisor_pair({9, 7, 4}), invalid_config); // 11 != 3 mod 9
    CHECK_THROWS_AS(genus2_divisor_pair({8, 1, 2}), invalid_config); // e1 not divisible by 3
    CHECK_THROWS_AS(genus2_divisor_pair({9, 9, 3}), invalid_config); // index out of range
    CHECK_NOTHROW(genus2_divisor_pair({3, 2, 2}));                   // 4 = 1 mod 3
}

TEST_CASE("genus-2 tropicalization with separation") {
    auto rep = genus2_trop({9, 7, 5});
    CHECK(rep.separated);
    CHECK(rep.length == Rational(14));
    CHECK(rep.F.slopes == ints({0, 0, 1, 1, 2, 0, 0, -2, -2}));
    CHECK(rep.G.slopes == ints({2, 2, 0, 0, -2, -1, -1, 0, 0}));
    CHECK(rep.expansions == ints({2, 2, 1, 1, 2, 1, 1, 2, 2}));
    CHECK(rep.classification.verdict == TropVerdict::Scaled);
}

TEST_CASE("genus-2 tropicalization without separation") {
    auto rep = genus2_trop({9, 8, 4});
    CHECK_FALSE(rep.separated);
    CHECK(rep.separation.witness_a == "C3");
    CHECK(rep.separation.witness_b == "C6");
    CHECK(rep.separation.common_image == std::vector<Rational>{Rational(2), Rational(2)});
    // every edge still carries a nonzero slope of F or G
    for (std::size_t e = 0; e < 9; ++e)
        CHECK((rep.F.slopes[e] != 0 || rep.G.slopes[e] != 0));
    CHECK(rep.classification.verdict == TropVerdict::NotScaled);
}

TEST_CASE("div(f) + div(g) is principal (3-torsion consistency)") {
    for (std::size_t e1 : {3u, 6u, 9u, 12u}) {
        auto cyc = MetricGraph::cycle(e1);
        for (std::size_t i = 0; i < e1; ++i)
            for (std::size_t j = i; j < e1; ++j) {
                if ((i + j) % e1 != e1 / 3 % e1) continue;
                auto [f, g] = genus2_divisor_pair({e1, i, j});
                GraphDivisor sum;
                sum.coeffs.assign(e1, Integer(0));
                for (std::size_t k = 0; k < e1; ++k) sum.coeffs[k] = f.a[k] + g.a[k];
                CHECK(is_principal(cyc, sum).principal);
                CHECK(check_cycle_principal(f));
                CHECK(check_cycle_principal(g));
            }
    }
}

TEST_CASE("F and G are reflections of each other") {
    for (auto cfg : {Genus2TorsionConfig{9, 7, 5}, Genus2TorsionConfig{9, 8, 4},
                     Genus2TorsionConfig{12, 1, 3}, Genus2TorsionConfig{15, 11, 9}}) {
        auto rep = genus2_trop(cfg);
        const std::size_t n = cfg.e1;
        for (std::size_t k = 0; k < n; ++k) {
            Rational reflected = rep.F.heights[(n - k) % n];
            CHECK(rep.G.heights[k] == reflected);
        }
    }
}

TEST_CASE("reports are invariant under simultaneous relabeling by a unit") {
    // replacing the torsion generator by u times itself permutes both the
    // divisor coefficients and the cycle adjacency; the tropicalization data
    // cannot change
    const std::size_t n = 5;
    auto base = elliptic_trop(n, {spec_of(n, {-2, 2, 1, 0, -1}, Rational(1, 5)),
                                  spec_of(n, {-1, -1, 0, 2, 0}, Rational(1, 5))});
    for (std::size_t u : {2u, 3u, 4u}) {
        MetricGraph relabeled;
        for (std::size_t i = 0; i < n; ++i) relabeled.add_vertex("C" + std::to_string(i));
        for (std::size_t k = 0; k < n; ++k)
            relabeled.add_edge(u * k % n, u * (k + 1) % n, Rational(1, 5));
        FunctionSolver solver(relabeled);
        std::vector<PiecewiseAffineFunction> fs;
        for (auto a : {std::vector<long>{-2, 2, 1, 0, -1}, std::vector<long>{-1, -1, 0, 2, 0}}) {
            GraphDivisor d;
            d.coeffs.assign(n, Integer(0));
            for (std::size_t i = 0; i < n; ++i) d.coeffs[u * i % n] = a[i];
            fs.push_back(solver.solve(d));
        }
        CHECK(trop_length(fs) == base.length_in_vj);
        auto ex = expansion_factors(fs);
        auto expected = base.expansions;
        std::sort(ex.begin(), ex.end());
        std::sort(expected.begin(), expected.end());
        CHECK(ex == expected);
    }
}

TEST_CASE("nonzero-slope scan is clean on a small range") {
    auto rep = nonzero_slope_scan(12);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.configs_checked == 2 + 4 + 5 + 7);
    CHECK(rep.edges_checked == 2 * 3 + 4 * 6 + 5 * 9 + 7 * 12);
}
