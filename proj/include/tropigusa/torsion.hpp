#pragma once

#include <string>
#include <vector>

#include "tropigusa/errors.hpp"
#include "tropigusa/tropfun.hpp"

namespace tropigusa {

// Degree-zero divisor sum a_i C_i on the components C_0..C_{N-1} of an
// N-gon special fibre, with a uniform edge length (-v(j)/N in the Tate
// setting, represented as a plain rational in units of -v(j)).
struct CycleDivisorSpec {
    std::size_t N = 0;
    std::vector<Integer> a;
    Rational edge_length = 1;

    void validate() const {
        if (N < 1 || a.size() != N)
            throw std::invalid_argument("divisor must have one coefficient per component");
        Integer deg = 0;
        for (const auto& x : a) deg += x;
        if (deg != 0) throw non_zero_degree("divisor degree is " + deg.str() + ", expected 0");
    }
};

// The N-gon principality criterion: sum i*a_i = 0 mod N. Agrees with the
// Laplacian solver on the cycle; kept as the cheap arithmetic form.
inline bool check_cycle_principal(const CycleDivisorSpec& spec) {
    spec.validate();
    Integer s = 0;
    for (std::size_t i = 0; i < spec.N; ++i) s += Integer(i) * spec.a[i];
    return s % Integer(spec.N) == 0;
}

inline std::string format_vj_multiple(const Rational& c) {
    if (c == 0) return "0";
    if (c == 1) return "-v(j)";
    return "-" + to_string(c) + "*v(j)";
}

struct EllipticTropReport {
    std::size_t N = 0;
    std::vector<std::string> names;
    std::vector<PiecewiseAffineFunction> functions;
    std::vector<Integer> expansions;   // per cycle edge
    Rational length_in_vj = 0;         // cycle length as a multiple of -v(j)
    TropClassification classification;
};

// Solves the given divisors on the N-gon with edge length -v(j)/N and
// reports expansion factors, the tropicalized cycle length and the
// faithful/scaled verdict.
inline EllipticTropReport elliptic_trop(std::size_t N, std::vector<CycleDivisorSpec> divisors,
                                        std::vector<std::string> names = {}) {
    EllipticTropReport rep;
    rep.N = N;
    MetricGraph cycle = MetricGraph::cycle(N, Rational(1, static_cast<long>(N)));
    FunctionSolver solver(cycle);
    for (std::size_t k = 0; k < divisors.size(); ++k) {
        auto& spec = divisors[k];
        if (spec.N != N) throw std::invalid_argument("divisor is not on the N-gon");
        if (!check_cycle_principal(spec))
            throw not_principal("divisor " + (k < names.size() ? names[k] : std::to_string(k)) +
                                " fails the cycle criterion sum i*a_i = 0 mod N");
        rep.functions.push_back(solver.solve(GraphDivisor{spec.a}));
    }
    rep.names = std::move(names);
    while (rep.names.size() < rep.functions.size())
        rep.names.push_back("f" + std::to_string(rep.names.size() + 1));
    rep.expansions = expansion_factors(rep.functions);
    rep.length_in_vj = trop_length(rep.functions);
    rep.classification = classify_trop(rep.functions);
    return rep;
}

// Reductions of a 3-torsion class D = P1 + P2 - 2*inf on the first cycle of
// a type-3/7 skeleton: e1 components, P1 -> C_i, P2 -> C_j with
// i + j = e1/3 mod e1. The involution sends the class of C_k to C_{e1-k}.
struct Genus2TorsionConfig {
    std::size_t e1 = 0;
    std::size_t i = 0, j = 0;

    void validate() const {
        if (e1 == 0 || e1 % 3 != 0)
            throw invalid_config("e1 must be a positive multiple of 3");
        if (i >= e1 || j >= e1) throw invalid_config("component indices must lie in 0..e1-1");
        if ((i + j) % e1 != e1 / 3 % e1)
            throw invalid_config("need i + j = e1/3 mod e1 for a 3-torsion reduction");
    }
};

// div(f) = 2P1 + 2P2 - s(P1) - s(P2) - 2*inf and
// div(g) = 2s(P1) + 2s(P2) - P1 - P2 - 2*inf, specialized to components
// (inf -> C_0, s(P) -> C_{e1 - index}).
inline std::pair<CycleDivisorSpec, CycleDivisorSpec> genus2_divisor_pair(
    const Genus2TorsionConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.e1;
    auto refl = [n](std::size_t k) { return (n - k) % n; };
    CycleDivisorSpec f{n, std::vector<Integer>(n, Integer(0)), 1};
    CycleDivisorSpec g = f;
    f.a[0] -= 2;
    f.a[cfg.i] += 2;
    f.a[cfg.j] += 2;
    f.a[refl(cfg.i)] -= 1;
    f.a[refl(cfg.j)] -= 1;
    g.a[0] -= 2;
    g.a[refl(cfg.i)] += 2;
    g.a[refl(cfg.j)] += 2;
    g.a[cfg.i] -= 1;
    g.a[cfg.j] -= 1;
    return {std::move(f), std::move(g)};
}

struct Genus2TropReport {
    Genus2TorsionConfig config;
    PiecewiseAffineFunction F, G;
    std::vector<Integer> expansions;
    Rational length = 0;
    bool separated = false;
    SeparationResult separation;
    TropClassification classification;
};

// Tropical forms of the 3-torsion function pair on the e1-cycle (unit edge
// lengths). F and G extend by constants over the bridge and second cycle of
// the full skeleton, so separation and length are reported for the first
// cycle, which is where all slopes live.
inline Genus2TropReport genus2_trop(const Genus2TorsionConfig& cfg) {
    auto [fspec, gspec] = genus2_divisor_pair(cfg);
    Genus2TropReport rep;
    rep.config = cfg;
    MetricGraph cycle = MetricGraph::cycle(cfg.e1, 1);
    FunctionSolver solver(cycle);
    rep.F = solver.solve(GraphDivisor{fspec.a});
    rep.G = solver.solve(GraphDivisor{gspec.a});
    std::vector<PiecewiseAffineFunction> fs = {rep.F, rep.G};
    rep.expansions = expansion_factors(fs);
    rep.length = trop_length(fs);
    rep.separation = separates_points(fs);
    rep.separated = rep.separation.separated;
    rep.classification = classify_trop(fs);
    return rep;
}

struct ScanCounterexample {
    std::size_t e1 = 0, i = 0, j = 0, edge = 0;
};

struct ScanReport {
    std::size_t e1_max = 0;
    std::size_t configs_checked = 0;
    std::size_t edges_checked = 0;
    std::vector<ScanCounterexample> counterexamples;
};

// Exhaustive check that on every edge of the cycle at least one of F, G has
// nonzero slope, over all e1 <= e1_max divisible by 3 and all valid (i, j)
// up to the i <-> j symmetry. Expected to return no counterexamples.
inline ScanReport nonzero_slope_scan(std::size_t e1_max) {
    ScanReport rep;
    rep.e1_max = e1_max;
    for (std::size_t e1 = 3; e1 <= e1_max; e1 += 3) {
        MetricGraph cycle = MetricGraph::cycle(e1, 1);
        FunctionSolver solver(cycle);
        for (std::size_t i = 0; i < e1; ++i) {
            for (std::size_t j = i; j < e1; ++j) {
                if ((i + j) % e1 != e1 / 3 % e1) continue;
                Genus2TorsionConfig cfg{e1, i, j};
                auto [fspec, gspec] = genus2_divisor_pair(cfg);
                auto F = solver.solve(GraphDivisor{fspec.a});
                auto G = solver.solve(GraphDivisor{gspec.a});
                ++rep.configs_checked;
                for (std::size_t e = 0; e < e1; ++e) {
                    ++rep.edges_checked;
                    if (F.slopes[e] == 0 && G.slopes[e] == 0)
                        rep.counterexamples.push_back({e1, i, j, e});
                }
            }
        }
    }
    return rep;
}

} // namespace tropigusa
