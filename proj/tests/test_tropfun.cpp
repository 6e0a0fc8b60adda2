#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "tropigusa/tropfun.hpp"

using namespace tropigusa;

namespace {

GraphDivisor div_of(std::initializer_list<long> xs) {
    GraphDivisor d;
    for (long x : xs) d.coeffs.emplace_back(x);
    return d;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
}

std::vector<Rational> rats(std::initializer_list<long> xs) {
    return std::vector<Rational>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("solve on the 5-cycle") {
    auto cyc = MetricGraph::cycle(5);
    auto F = solve_function(cyc, div_of({-2, 2, 1, 0, -1}));
    CHECK(F.heights == rats({0, 2, 2, 1, 0}));
    CHECK(F.slopes == ints({2, 0, -1, -1, 0}));

    CHECK_THROWS_AS(solve_function(cyc, div_of({1, -1, 0, 0, 0})), not_principal);
    CHECK_FALSE(FunctionSolver(cyc).solvable(div_of({1, -1, 0, 0, 0})));

    auto constant = solve_function(cyc, div_of({0, 0, 0, 0, 0}));
    for (const auto& h : constant.heights) CHECK(h == 0);
    for (const auto& s : constant.slopes) CHECK(s == 0);
}

TEST_CASE("solve matches the cycle recursion oracle") {
    testutil::Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.integer(2, 12));
        std::vector<Integer> a(n, Integer(0));
        long acc = 0;
        for (std::size_t i = 1; i < n; ++i) {
            long x = rng.integer(-2, 2);
            a[i] = x;
            acc += x;
        }
        a[0] = -acc;
        auto oracle = testutil::cycle_solve_oracle(a);
        auto cyc = MetricGraph::cycle(n);
        FunctionSolver solver(cyc);
        GraphDivisor d{a};
        CHECK(solver.solvable(d) == oracle.has_value());
        if (oracle) {
            auto F = solver.solve(d);
            for (std::size_t i = 0; i < n; ++i) CHECK(F.heights[i] == Rational((*oracle)[i]));
        }
    }
}

TEST_CASE("divisor_of round-trips with solve on random graphs") {
    testutil::Rng rng(42);
    int done = 0;
    for (int trial = 0; trial < 500; ++trial) {
        auto g = rng.connected_multigraph(6, 8);
        std::vector<Integer> phi;
        for (std::size_t i = 0; i < g.vertices.size(); ++i) phi.emplace_back(rng.integer(-4, 4));
        for (auto& x : phi) x -= phi[0];
        auto d = laplacian_apply(g, phi);
        FunctionSolver solver(g);
        auto F = solver.solve(d); // principal by construction
        CHECK(divisor_of(F).coeffs == d.coeffs);
        // unique modulo additive constant on a connected graph
        for (std::size_t i = 0; i < phi.size(); ++i) CHECK(F.heights[i] == Rational(phi[i]));
        ++done;
    }
    CHECK(done == 500);
}

TEST_CASE("the divisor vanishes away from the prescribed support") {
    auto cyc = MetricGraph::cycle(9);
    auto F = solve_function(cyc, div_of({-2, 0, -1, 0, -1, 2, 0, 2, 0}));
    auto d = divisor_of(F);
    CHECK(d.coeffs[1] == 0);
    CHECK(d.coeffs[3] == 0);
    CHECK(d.coeffs[6] == 0);
    CHECK(d.coeffs[8] == 0);
    CHECK(d.degree() == 0);
}

TEST_CASE("expansion factors") {
    auto cyc = MetricGraph::cycle(5);
    auto F = solve_function(cyc, div_of({-2, 2, 1, 0, -1}));  // slopes (2,0,-1,-1,0)
    auto G = solve_function(cyc, div_of({-1, -1, 0, 2, 0}));  // slopes (0,1,1,-1,-1)
    CHECK(G.slopes == ints({0, 1, 1, -1, -1}));
    std::vector<PiecewiseAffineFunction> fs = {F, G};
    CHECK(expansion_factors(fs) == ints({2, 1, 1, 1, 1}));

    // edge where all slopes vanish collapses
    auto Z = solve_function(cyc, div_of({0, 0, 0, 0, 0}));
    std::vector<PiecewiseAffineFunction> zz = {Z, Z};
    CHECK(expansion_factor(0, zz) == 0);
}

TEST_CASE("trop_length on the torsion cycles") {
    auto mk = [](std::size_t n, std::initializer_list<long> a) {
        auto cyc = MetricGraph::cycle(n, Rational(1, static_cast<long>(n)));
        return solve_function(cyc, div_of(a));
    };
    // N = 4 box
    {
        auto F = mk(4, {-1, 1, 1, -1});
        auto G = mk(4, {-1, -1, 1, 1});
        std::vector<PiecewiseAffineFunction> fs = {F, G};
        CHECK(trop_length(fs) == Rational(1));
        CHECK(expansion_factors(fs) == ints({1, 1, 1, 1}));
    }
    // N = 5
    {
        auto F = mk(5, {-2, 2, 1, 0, -1});
        auto G = mk(5, {-1, -1, 0, 2, 0});
        std::vector<PiecewiseAffineFunction> fs = {F, G};
        CHECK(trop_length(fs) == Rational(6, 5));
    }
    // N = 7
    {
        auto F = mk(7, {-2, -1, -1, 1, 1, 2, 0});
        auto G = mk(7, {-1, 1, 1, 1, 1, -1, -2});
        std::vector<PiecewiseAffineFunction> fs = {F, G};
        CHECK(expansion_factors(fs) == ints({2, 1, 2, 1, 2, 1, 1}));
        CHECK(trop_length(fs) == Rational(10, 7));
    }
}

TEST_CASE("trop_length is invariant under subdivision refinement") {
    auto base = MetricGraph::cycle(5, Rational(1, 5));
    auto d5 = div_of({-2, 2, 1, 0, -1});
    auto F = solve_function(base, d5);
    auto G = solve_function(base, div_of({-1, -1, 0, 2, 0}));
    std::vector<PiecewiseAffineFunction> fs = {F, G};
    Rational len = trop_length(fs);

    auto finer = subdivide(base, Rational(1, 15)); // same circle, 15 edges
    GraphDivisor d15;
    d15.coeffs = d5.coeffs;
    d15.coeffs.resize(finer.vertices.size(), Integer(0));
    auto F2 = solve_function(finer, d15);
    GraphDivisor g15;
    g15.coeffs = div_of({-1, -1, 0, 2, 0}).coeffs;
    g15.coeffs.resize(finer.vertices.size(), Integer(0));
    auto G2 = solve_function(finer, g15);
    std::vector<PiecewiseAffineFunction> fs2 = {F2, G2};
    CHECK(trop_length(fs2) == len);
}

TEST_CASE("separation: the two genus-2 configurations") {
    auto cyc = MetricGraph::cycle(9);
    // P1 -> C8, P2 -> C4: F(C3) = F(C6) = G(C3) = G(C6)
    {
        auto F = solve_function(cyc, div_of({-2, -1, 0, 0, 2, -1, 0, 0, 2}));
        auto G = solve_function(cyc, div_of({-2, 2, 0, 0, -1, 2, 0, 0, -1}));
        std::vector<PiecewiseAffineFunction> fs = {F, G};
        auto sep = separates_points(fs);
        CHECK_FALSE(sep.separated);
        CHECK(sep.witness_a == "C3");
        CHECK(sep.witness_b == "C6");
        CHECK(sep.common_image == rats({2, 2}));
    }
    // P1 -> C7, P2 -> C5: injective
    {
        auto F = solve_function(cyc, div_of({-2, 0, -1, 0, -1, 2, 0, 2, 0}));
        auto G = solve_function(cyc, div_of({-2, 0, 2, 0, 2, -1, 0, -1, 0}));
        std::vector<PiecewiseAffineFunction> fs = {F, G};
        CHECK(separates_points(fs).separated);
    }
}

TEST_CASE("separation fails on a collapsed edge") {
    auto cyc = MetricGraph::cycle(5);
    auto F = solve_function(cyc, div_of({-1, 2, -1, 0, 0})); // slopes vanish somewhere?
    std::vector<PiecewiseAffineFunction> fs = {F};
    // a single function on a cycle always has a slope-0 edge or repeats
    // values; either way it cannot separate
    CHECK_FALSE(separates_points(fs).separated);
}

TEST_CASE("classification of the torsion tropicalizations") {
    auto mk = [](std::size_t n, std::initializer_list<long> a) {
        auto cyc = MetricGraph::cycle(n, Rational(1, static_cast<long>(n)));
        return solve_function(cyc, div_of(a));
    };
    {
        std::vector<PiecewiseAffineFunction> fs = {mk(4, {-1, 1, 1, -1}), mk(4, {-1, -1, 1, 1})};
        CHECK(classify_trop(fs).verdict == TropVerdict::Faithful);
    }
    {
        std::vector<PiecewiseAffineFunction> fs = {mk(5, {-2, 2, 1, 0, -1}),
                                                   mk(5, {-1, -1, 0, 2, 0})};
        auto c = classify_trop(fs);
        CHECK(c.verdict == TropVerdict::Scaled);
        CHECK(c.separated);
        CHECK(c.per_edge_expansion[0] == 2);
    }
    {
        auto cyc = MetricGraph::cycle(9);
        std::vector<PiecewiseAffineFunction> fs = {
            solve_function(cyc, div_of({-2, -1, 0, 0, 2, -1, 0, 0, 2})),
            solve_function(cyc, div_of({-2, 2, 0, 0, -1, 2, 0, 0, -1}))};
        CHECK(classify_trop(fs).verdict == TropVerdict::NotScaled);
    }
}

TEST_CASE("cycle solvability matches the mod-N criterion (small sweep)") {
    for (std::size_t n = 2; n <= 6; ++n) {
        auto cyc = MetricGraph::cycle(n);
        FunctionSolver solver(cyc);
        std::vector<long> a(n, 0);
        std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long sum) {
            if (idx + 1 == n) {
                a[idx] = -sum;
                if (a[idx] < -2 || a[idx] > 2) return;
                long weighted = 0;
                for (std::size_t i = 0; i < n; ++i) weighted += static_cast<long>(i) * a[i];
                GraphDivisor d;
                for (long x : a) d.coeffs.emplace_back(x);
                CHECK(solver.solvable(d) == (weighted % static_cast<long>(n) == 0));
                return;
            }
            for (long x = -2; x <= 2; ++x) {
                a[idx] = x;
                rec(idx + 1, sum + x);
            }
        };
        rec(0, 0);
    }
}

TEST_CASE("csv breakpoints") {
    auto cyc = MetricGraph::cycle(4, Rational(1, 4));
    auto F = solve_function(cyc, div_of({-1, 1, 1, -1}));
    auto G = solve_function(cyc, div_of({-1, -1, 1, 1}));
    std::vector<PiecewiseAffineFunction> fs = {F, G};
    std::vector<std::string> names = {"F", "G"};
    auto csv = csv_breakpoints(fs, names);
    CHECK(csv.find("position,F,G\n") == 0);
    CHECK(csv.find("\n1,") != std::string::npos); // closing wrap row at total length 1
}
