#pragma once

#include <array>
#include <string>
#include <vector>

#include "tropigusa/errors.hpp"
#include "tropigusa/extrat.hpp"
#include "tropigusa/igusa.hpp"
#include "tropigusa/metgraph.hpp"

namespace tropigusa {

// Stable reduction types of a genus-2 curve, numbered as usual: the special
// fibre is (1) smooth, (2) irreducible with one node, (3) irreducible with
// two nodes, (4) two lines through three points ("chestnut"), (5) two
// elliptic curves through one point, (6) an elliptic curve and a nodal line,
// (7) two nodal lines through one point.
enum class ReductionType {
    Smooth = 1,
    SingleDoublePoint,
    DoubleDoublePoint,
    Chestnut,
    TwoEllipticCurves,
    EllipticPlusSingularLine,
    TwoSingularLines,
};

inline const char* reduction_type_name(ReductionType t) {
    switch (t) {
        case ReductionType::Smooth: return "Smooth";
        case ReductionType::SingleDoublePoint: return "SingleDoublePoint";
        case ReductionType::DoubleDoublePoint: return "DoubleDoublePoint";
        case ReductionType::Chestnut: return "Chestnut";
        case ReductionType::TwoEllipticCurves: return "TwoEllipticCurves";
        case ReductionType::EllipticPlusSingularLine: return "EllipticPlusSingularLine";
        case ReductionType::TwoSingularLines: return "TwoSingularLines";
    }
    return "?";
}

// epsilon = 1 unless the residue characteristic is 3 or 2 (then 3 resp. 4).
struct Epsilon {
    int value = 1;

    static Epsilon from_residue_char(const Integer& p) {
        if (p == 3) return {3};
        if (p == 2) return {4};
        return {1};
    }
};

// The linear forms in the tropical Igusa invariants driving classification.
// Indices: w1[i-1] holds w_{1,i} for i = 1..5, likewise w2, w3; w_{4,i} is
// the same as w_{3,i}.
struct WTable {
    std::array<ExtRat, 5> w1, w2, w3;
    ExtRat w2x;
    ExtRat w3x, w3y1, w3y2;
    ExtRat w2c1, w2c2, w2c3;
    ExtRat w5_1, w5_2;
    ExtRat w6_1, w6_2;
    ExtRat w7_1, w7_2;

    const std::array<ExtRat, 5>& w4() const { return w3; }
};

// v(I_{2*eps}): I2, I6 or I8 according to epsilon
inline const ExtRat& v_I2eps(const TropIgusa& tv, Epsilon eps) {
    switch (eps.value) {
        case 3: return tv.vI6;
        case 4: return tv.vI8;
        default: return tv.vI2;
    }
}

inline WTable w_table(const TropIgusa& tv, Epsilon eps) {
    if (!tv.vJ10.is_finite())
        throw degenerate_curve("v(J10) must be finite (smooth curve has J10 != 0)");
    const std::array<const ExtRat*, 5> vJ = {&tv.vJ2, &tv.vJ4, &tv.vJ6, &tv.vJ8, &tv.vJ10};
    const ExtRat& i2e = v_I2eps(tv, eps);
    const Rational e(eps.value);

    WTable w;
    for (int i = 1; i <= 5; ++i) {
        w.w1[i - 1] = ext_combine({{5, *vJ[i - 1]}, {-i, tv.vJ10}});
        w.w2[i - 1] = ext_combine({{6, *vJ[i - 1]}, {-i, tv.vI12}});
        w.w3[i - 1] = ext_combine({{2, *vJ[i - 1]}, {-i, tv.vI4}});
    }
    w.w2x = ext_combine({{6, tv.vJ10}, {-5, tv.vI12}});
    w.w3x = ext_combine({{1, tv.vI12}, {-3, tv.vI4}});
    w.w3y1 = ext_combine({{1, tv.vJ4}, {-1, tv.vI4}});
    w.w3y2 = ext_combine({{2, tv.vJ6}, {-3, tv.vI4}});
    w.w2c1 = ext_combine({{e, tv.vI4}, {-2, i2e}});
    w.w2c2 = ext_combine({{e, tv.vJ10}, {-5, i2e}});
    w.w2c3 = ext_combine({{e, tv.vI12}, {-6, i2e}});
    w.w5_1 = ext_combine({{3 * e, tv.vI4}, {-e, tv.vJ10}, {-1, i2e}});
    w.w5_2 = ext_combine({{e, tv.vI12}, {-e, tv.vJ10}, {-1, i2e}});
    w.w6_1 = ext_combine({{3, tv.vI4}, {-1, tv.vI12}});
    w.w6_2 = ext_combine({{e, tv.vJ10}, {1, i2e}, {-e, tv.vI12}});
    w.w7_1 = ext_combine({{1, tv.vI12}, {-3, tv.vI4}});
    w.w7_2 = ext_combine({{e, tv.vJ10}, {1, i2e}, {-3 * e, tv.vI4}});
    return w;
}

struct ReductionVerdict {
    ReductionType rtype = ReductionType::Smooth;
    // cases whose predicate holds with positive implied thicknesses
    std::vector<ReductionType> matched_cases;
    bool ambiguous = false;
    std::vector<std::string> notes;
};

// Case predicates. The printed type-2 and type-3 conditions admit their own
// degeneration boundary (a node of thickness 0): with w2x = 0 the type-2
// condition is implied by good reduction, with w3x = 0 the type-3 condition
// collapses onto type 2. A case therefore "matches" only when the implied
// singular points have positive thickness, which is what makes exactly one
// case hold per curve.
inline ReductionVerdict classify(const WTable& w) {
    const ExtRat zero(0);
    auto all_ge0 = [&](const std::array<ExtRat, 5>& a) {
        for (const auto& x : a)
            if (x < zero) return false;
        return true;
    };

    bool smooth = all_ge0(w.w1);
    bool single = all_ge0(w.w2) && w.w2x > zero;
    bool dbl = all_ge0(w.w3) && w.w3[4] > zero && w.w3x > zero &&
               (w.w3y1 == zero || w.w3y2 == zero);
    bool chestnut = w.w3[1] > zero && w.w3[2] > zero && w.w3[3] > zero && w.w3[4] > zero;
    bool cc = w.w2c1 > zero && w.w2c2 > zero && w.w2c3 > zero;
    bool two_ell = cc && w.w5_1 >= zero && w.w5_2 >= zero;
    bool ell_line = cc && w.w6_1 >= zero && w.w6_2 > zero;
    bool two_lines = cc && w.w7_1 > zero && w.w7_2 > zero;

    ReductionVerdict v;
    auto consider = [&](bool hit, ReductionType t) {
        if (hit) v.matched_cases.push_back(t);
    };
    consider(smooth, ReductionType::Smooth);
    consider(single, ReductionType::SingleDoublePoint);
    consider(dbl, ReductionType::DoubleDoublePoint);
    consider(chestnut, ReductionType::Chestnut);
    consider(two_ell, ReductionType::TwoEllipticCurves);
    consider(ell_line, ReductionType::EllipticPlusSingularLine);
    consider(two_lines, ReductionType::TwoSingularLines);

    if (v.matched_cases.empty())
        throw no_case_matches("no reduction-type condition holds for these invariants");
    v.rtype = v.matched_cases.front();
    v.ambiguous = v.matched_cases.size() != 1;
    if (v.ambiguous) v.notes.push_back("more than one case condition holds; verdict is the first in type order");
    return v;
}

// Skeleton of the stable reduction: named thicknesses, the metric dual
// graph, and the component group of the Neron model.
struct SkeletonData {
    ReductionType rtype = ReductionType::Smooth;
    std::vector<std::pair<std::string, Rational>> thicknesses;
    AbelianGroup component_group;
    MetricGraph dual_graph;
    bool integral_over_K = true;
    std::vector<std::string> notes;
};

inline MetricGraph skeleton_graph_for(ReductionType t, const std::vector<Rational>& e) {
    MetricGraph g;
    switch (t) {
        case ReductionType::Smooth: {
            g.add_vertex("X", 2);
            break;
        }
        case ReductionType::SingleDoublePoint: {
            auto z = g.add_vertex("Z", 1);
            g.add_edge(z, z, e.at(0));
            break;
        }
        case ReductionType::DoubleDoublePoint: {
            auto z = g.add_vertex("Z", 0);
            g.add_edge(z, z, e.at(0));
            g.add_edge(z, z, e.at(1));
            break;
        }
        case ReductionType::Chestnut: {
            auto a = g.add_vertex("A", 0);
            auto b = g.add_vertex("B", 0);
            g.add_edge(a, b, e.at(0));
            g.add_edge(a, b, e.at(1));
            g.add_edge(a, b, e.at(2));
            break;
        }
        case ReductionType::TwoEllipticCurves: {
            auto a = g.add_vertex("E1", 1);
            auto b = g.add_vertex("E2", 1);
            g.add_edge(a, b, e.at(0));
            break;
        }
        case ReductionType::EllipticPlusSingularLine: {
            auto a = g.add_vertex("E", 1);
            auto b = g.add_vertex("L", 0);
            g.add_edge(a, b, e.at(0)); // intersection point, thickness e0
            g.add_edge(b, b, e.at(1)); // node on the line, thickness e1
            break;
        }
        case ReductionType::TwoSingularLines: {
            auto a = g.add_vertex("L1", 0);
            auto b = g.add_vertex("L2", 0);
            g.add_edge(a, b, e.at(0));
            g.add_edge(a, a, e.at(1));
            g.add_edge(b, b, e.at(2));
            break;
        }
    }
    return g;
}

inline MetricGraph skeleton_graph(const SkeletonData& s) {
    std::vector<Rational> e;
    for (const auto& [name, val] : s.thicknesses) e.push_back(val);
    return skeleton_graph_for(s.rtype, e);
}

// Component group from the closed forms, per type. Thicknesses that are not
// integral are scaled by the least common denominator first: that is the
// minimal ramified base extension over which the stable model lives, and it
// matches what the graph Jacobian of the rational-length skeleton computes.
inline AbelianGroup closed_form_component_group(ReductionType t, std::vector<Rational> e) {
    Integer scale = 1;
    for (const auto& x : e) scale = lcm(scale, denominator(x));
    std::vector<Integer> n;
    for (auto& x : e) n.push_back(numerator(x * scale));

    switch (t) {
        case ReductionType::Smooth:
        case ReductionType::TwoEllipticCurves:
            return {};
        case ReductionType::SingleDoublePoint:
            return AbelianGroup::from_cyclic_orders({n.at(0)});
        case ReductionType::DoubleDoublePoint:
            return AbelianGroup::from_cyclic_orders({n.at(0), n.at(1)});
        case ReductionType::Chestnut: {
            Integer d1 = gcd(gcd(n.at(0), n.at(1)), n.at(2));
            Integer sigma = n.at(0) * n.at(1) + n.at(1) * n.at(2) + n.at(0) * n.at(2);
            return AbelianGroup::from_cyclic_orders({d1, sigma / d1});
        }
        case ReductionType::EllipticPlusSingularLine:
            return AbelianGroup::from_cyclic_orders({n.at(1)}); // e0 is the bridge
        case ReductionType::TwoSingularLines:
            return AbelianGroup::from_cyclic_orders({n.at(1), n.at(2)});
    }
    return {};
}

namespace detail {

inline Rational finite_or_throw(const ExtRat& x, const char* what) {
    if (!x.is_finite())
        throw non_positive_thickness(std::string(what) + " is not finite");
    return x.rational();
}

inline void check_positive(const Rational& e, const char* what) {
    if (e <= 0)
        throw non_positive_thickness(std::string(what) + " = " + to_string(e) +
                                     " is not positive");
}

} // namespace detail

inline SkeletonData thickness(const ReductionVerdict& verdict, const TropIgusa& tv, Epsilon eps) {
    if (verdict.ambiguous)
        throw ambiguous_verdict("thickness requires an unambiguous reduction type");
    using detail::check_positive;
    using detail::finite_or_throw;

    const Rational epsv(eps.value);
    SkeletonData s;
    s.rtype = verdict.rtype;

    auto fin = [&](const ExtRat& x, const char* what) { return finite_or_throw(x, what); };

    switch (verdict.rtype) {
        case ReductionType::Smooth:
            break;
        case ReductionType::SingleDoublePoint: {
            Rational w2x = 6 * fin(tv.vJ10, "v(J10)") - 5 * fin(tv.vI12, "v(I12)");
            Rational e = w2x / 6;
            check_positive(e, "e");
            s.thicknesses = {{"e", e}};
            break;
        }
        case ReductionType::DoubleDoublePoint: {
            Rational vI4 = fin(tv.vI4, "v(I4)");
            Rational w3x = fin(tv.vI12, "v(I12)") - 3 * vI4;
            Rational w35 = 2 * fin(tv.vJ10, "v(J10)") - 5 * vI4;
            Rational e1 = rat_min(w3x, Rational(w35 / 4));
            Rational e2 = w35 / 2 - e1;
            check_positive(e1, "e1");
            check_positive(e2, "e2");
            s.thicknesses = {{"e1", e1}, {"e2", e2}};
            break;
        }
        case ReductionType::Chestnut: {
            Rational vJ2 = fin(tv.vJ2, "v(J2)");
            Rational l = fin(tv.vJ10, "v(J10)") - 5 * vJ2;
            Rational n = fin(tv.vI12, "v(I12)") - 6 * vJ2;
            Rational m = fin(tv.vJ4, "v(J4)") - 2 * vJ2;
            Rational e1 = rat_min(rat_min(Rational(l / 3), Rational(n / 2)), m);
            Rational e2 = rat_min(Rational((l - e1) / 2), Rational(n - e1));
            Rational e3 = l - e1 - e2;
            check_positive(e1, "e1");
            check_positive(e2, "e2");
            check_positive(e3, "e3");
            s.thicknesses = {{"e1", e1}, {"e2", e2}, {"e3", e3}};
            s.notes.push_back("n reads v(I12) - 6 v(J2); the J_12 in the source table "
                              "does not exist and only v(J2) keeps n weight-0");
            break;
        }
        case ReductionType::TwoEllipticCurves: {
            Rational e = (epsv * fin(tv.vJ10, "v(J10)") - 5 * fin(v_I2eps(tv, eps), "v(I_2eps)")) /
                         (12 * epsv);
            check_positive(e, "e");
            s.thicknesses = {{"e", e}};
            s.notes.push_back("thickness formula parenthesized as (1/(12 eps)) * "
                              "(eps v(J10) - 5 v(I_2eps)), the weight-0 reading");
            break;
        }
        case ReductionType::EllipticPlusSingularLine: {
            Rational i2e = fin(v_I2eps(tv, eps), "v(I_2eps)");
            Rational vI12 = fin(tv.vI12, "v(I12)");
            Rational e0 = (epsv * vI12 - 6 * i2e) / (12 * epsv);
            Rational e1 = (epsv * fin(tv.vJ10, "v(J10)") + i2e - epsv * vI12) / epsv;
            check_positive(e0, "e0");
            check_positive(e1, "e1");
            s.thicknesses = {{"e0", e0}, {"e1", e1}};
            break;
        }
        case ReductionType::TwoSingularLines: {
            Rational i2e = fin(v_I2eps(tv, eps), "v(I_2eps)");
            Rational vI4 = fin(tv.vI4, "v(I4)");
            Rational w7_1 = fin(tv.vI12, "v(I12)") - 3 * vI4;
            Rational w7_2 = epsv * fin(tv.vJ10, "v(J10)") + i2e - 3 * epsv * vI4;
            Rational e0 = (epsv * vI4 - 2 * i2e) / (4 * epsv);
            Rational e1 = rat_min(w7_1, Rational(w7_2 / (2 * epsv)));
            Rational e2 = w7_2 / epsv - e1;
            check_positive(e0, "e0");
            check_positive(e1, "e1");
            check_positive(e2, "e2");
            s.thicknesses = {{"e0", e0}, {"e1", e1}, {"e2", e2}};
            break;
        }
    }

    s.integral_over_K = true;
    std::vector<Rational> evals;
    for (const auto& [name, v] : s.thicknesses) {
        evals.push_back(v);
        if (!is_integral(v)) s.integral_over_K = false;
    }
    if (!s.integral_over_K)
        s.notes.push_back("thicknesses are integral only after a ramified base extension; "
                          "the component group refers to the extended model");
    s.component_group = closed_form_component_group(verdict.rtype, evals);
    s.dual_graph = skeleton_graph_for(verdict.rtype, evals);
    return s;
}

} // namespace tropigusa
