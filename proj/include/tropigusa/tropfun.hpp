#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <vector>

#include "tropigusa/errors.hpp"
#include "tropigusa/metgraph.hpp"

namespace tropigusa {

// Tropical meromorphic function on a unit-subdivided metric graph: rational
// heights on vertices, integer slope on every (directed) unit edge.
struct PiecewiseAffineFunction {
    std::shared_ptr<const MetricGraph> base; // unit subdivision, shared between functions
    Rational unit = 1;
    std::vector<Rational> heights; // per vertex, heights[0] = 0 after solving
    std::vector<Integer> slopes;   // per edge, oriented base->edges[e].u -> .v
};

// Solver with the Smith factorization done once per graph; divisors live on
// the original vertices, solutions on the unit subdivision.
class FunctionSolver {
public:
    explicit FunctionSolver(const MetricGraph& g)
        : sys_(g), base_(std::make_shared<MetricGraph>(sys_.subdivided())) {}

    const std::shared_ptr<const MetricGraph>& base() const { return base_; }
    const Rational& unit() const { return sys_.unit(); }

    bool solvable(const GraphDivisor& d) const { return sys_.membership(d); }

    PiecewiseAffineFunction solve(const GraphDivisor& d) const {
        auto phi = sys_.solve(d);
        if (!phi)
            throw not_principal("divisor is not the divisor of any integer-slope function");
        PiecewiseAffineFunction f;
        f.base = base_;
        f.unit = sys_.unit();
        f.heights.reserve(phi->size());
        for (const auto& p : *phi) f.heights.push_back(Rational(p) * f.unit);
        f.slopes.reserve(base_->edges.size());
        for (const auto& e : base_->edges) f.slopes.push_back((*phi)[e.v] - (*phi)[e.u]);
        return f;
    }

private:
    LaplacianSystem sys_;
    std::shared_ptr<const MetricGraph> base_;
};

inline PiecewiseAffineFunction solve_function(const MetricGraph& g, const GraphDivisor& d) {
    return FunctionSolver(g).solve(d);
}

inline GraphDivisor divisor_of(const PiecewiseAffineFunction& f) {
    GraphDivisor d;
    d.coeffs.assign(f.base->vertices.size(), Integer(0));
    for (std::size_t ei = 0; ei < f.base->edges.size(); ++ei) {
        const auto& e = f.base->edges[ei];
        if (e.u == e.v) continue;
        d.coeffs[e.u] -= f.slopes[ei];
        d.coeffs[e.v] += f.slopes[ei];
    }
    return d;
}

// gcd of the absolute values of the nonzero slopes on edge e; 0 when every
// function is constant there (the edge collapses under tropicalization).
inline Integer expansion_factor(std::size_t edge,
                                std::span<const PiecewiseAffineFunction> fs) {
    Integer g = 0;
    for (const auto& f : fs) g = gcd(g, f.slopes[edge]);
    return g < 0 ? Integer(-g) : g;
}

inline std::vector<Integer> expansion_factors(std::span<const PiecewiseAffineFunction> fs) {
    std::vector<Integer> out;
    const auto& base = *fs.front().base;
    out.reserve(base.edges.size());
    for (std::size_t e = 0; e < base.edges.size(); ++e) out.push_back(expansion_factor(e, fs));
    return out;
}

// Total length of the tropicalized graph: sum of expansion_factor(e) * len(e)
// over the designated edges (all edges when none are given).
inline Rational trop_length(std::span<const PiecewiseAffineFunction> fs,
                            const std::vector<std::size_t>* edges = nullptr) {
    const auto& base = *fs.front().base;
    Rational total = 0;
    auto add = [&](std::size_t e) {
        total += Rational(expansion_factor(e, fs)) * base.edges[e].length;
    };
    if (edges) {
        for (auto e : *edges) add(e);
    } else {
        for (std::size_t e = 0; e < base.edges.size(); ++e) add(e);
    }
    return total;
}

struct SeparationResult {
    bool separated = true;
    std::string witness_a, witness_b;   // two distinct points with equal image
    std::vector<Rational> common_image; // their shared image tuple
};

namespace detail {

inline std::vector<Rational> image_of_vertex(std::span<const PiecewiseAffineFunction> fs,
                                             std::size_t v) {
    std::vector<Rational> p;
    p.reserve(fs.size());
    for (const auto& f : fs) p.push_back(f.heights[v]);
    return p;
}

inline std::string point_on_edge(const MetricGraph& g, std::size_t e, const Rational& t) {
    const auto& edge = g.edges[e];
    if (t == 0) return g.vertices[edge.u].name;
    if (t == 1) return g.vertices[edge.v].name;
    return g.vertices[edge.u].name + "~" + g.vertices[edge.v].name + " at " + to_string(t);
}

} // namespace detail

// Decides injectivity of v -> (F_1(v), ..., F_n(v)) extended affinely over
// the edges. Everything is exact: vertex images are compared directly and
// edge images are compared as rational segments, so the decision is sound
// and complete on the unit subdivision.
inline SeparationResult separates_points(std::span<const PiecewiseAffineFunction> fs) {
    const auto& g = *fs.front().base;
    const std::size_t nv = g.vertices.size(), ne = g.edges.size(), k = fs.size();
    SeparationResult res;

    auto fail = [&](std::string a, std::string b, std::vector<Rational> img) {
        res.separated = false;
        res.witness_a = std::move(a);
        res.witness_b = std::move(b);
        res.common_image = std::move(img);
        return res;
    };

    std::vector<std::vector<Rational>> img(nv);
    for (std::size_t v = 0; v < nv; ++v) img[v] = detail::image_of_vertex(fs, v);

    // an edge on which every function is constant maps all its points to one
    // image point
    for (std::size_t e = 0; e < ne; ++e) {
        if (expansion_factor(e, fs) == 0)
            return fail(detail::point_on_edge(g, e, Rational(1, 3)),
                        detail::point_on_edge(g, e, Rational(2, 3)), img[g.edges[e].u]);
        if (g.edges[e].u == g.edges[e].v)
            // nonconstant slopes on a unit loop cannot close up; constant is
            // handled above, so a unit loop always collapses
            return fail(detail::point_on_edge(g, e, Rational(1, 3)),
                        detail::point_on_edge(g, e, Rational(2, 3)), img[g.edges[e].u]);
    }

    for (std::size_t a = 0; a < nv; ++a)
        for (std::size_t b = a + 1; b < nv; ++b)
            if (img[a] == img[b]) return fail(g.vertices[a].name, g.vertices[b].name, img[a]);

    // pairwise exact segment intersection of edge images
    for (std::size_t e1 = 0; e1 < ne; ++e1) {
        for (std::size_t e2 = e1 + 1; e2 < ne; ++e2) {
            const auto& A = img[g.edges[e1].u];
            const auto& B = img[g.edges[e1].v];
            const auto& C = img[g.edges[e2].u];
            const auto& D = img[g.edges[e2].v];
            std::vector<Rational> d1(k), d2(k), ca(k);
            for (std::size_t i = 0; i < k; ++i) {
                d1[i] = B[i] - A[i];
                d2[i] = D[i] - C[i];
                ca[i] = C[i] - A[i];
            }

            // find a 2x2 nonsingular pair of coordinates of (d1 | -d2)
            std::optional<std::pair<std::size_t, std::size_t>> rows;
            for (std::size_t i = 0; i < k && !rows; ++i)
                for (std::size_t j = i + 1; j < k && !rows; ++j)
                    if (d1[i] * d2[j] - d1[j] * d2[i] != 0) rows = {i, j};

            if (!rows) {
                // parallel direction vectors: lines coincide or never meet
                std::size_t i0 = 0;
                while (d1[i0] == 0) ++i0;
                bool collinear = true;
                Rational tc = ca[i0] / d1[i0];
                for (std::size_t i = 0; i < k && collinear; ++i)
                    if (ca[i] != tc * d1[i]) collinear = false;
                if (!collinear) continue;
                Rational td = (ca[i0] + d2[i0]) / d1[i0]; // image of e2's far end
                Rational lo = rat_min(tc, td), hi = rat_max(tc, td);
                lo = rat_max(lo, Rational(0));
                hi = rat_min(hi, Rational(1));
                if (lo < hi) {
                    // a whole subsegment is doubled; exhibit its midpoint
                    Rational t = (lo + hi) / 2;
                    Rational s = (t - tc) / (td - tc);
                    std::vector<Rational> p(k);
                    for (std::size_t i = 0; i < k; ++i) p[i] = A[i] + t * d1[i];
                    return fail(detail::point_on_edge(g, e1, t), detail::point_on_edge(g, e2, s),
                                std::move(p));
                }
                continue;
            }

            auto [i, j] = *rows;
            Rational det = d1[i] * (-d2[j]) - (-d2[i]) * d1[j];
            Rational t = (ca[i] * (-d2[j]) - (-d2[i]) * ca[j]) / det;
            Rational s = (d1[i] * ca[j] - ca[i] * d1[j]) / det;
            if (t < 0 || t > 1 || s < 0 || s > 1) continue;
            bool consistent = true;
            for (std::size_t c = 0; c < k && consistent; ++c)
                if (ca[c] != t * d1[c] - s * d2[c]) consistent = false;
            if (!consistent) continue;

            // the crossing identifies two graph points unless it is a shared
            // endpoint of the two edges
            auto vertex_at = [&](std::size_t e, const Rational& p) -> std::optional<std::size_t> {
                if (p == 0) return g.edges[e].u;
                if (p == 1) return g.edges[e].v;
                return std::nullopt;
            };
            auto va = vertex_at(e1, t), vb = vertex_at(e2, s);
            if (va && vb && *va == *vb) continue;
            // distinct vertices with equal images were already reported; an
            // endpoint meeting an interior point, or two interiors, fails here
            std::vector<Rational> p(k);
            for (std::size_t c = 0; c < k; ++c) p[c] = A[c] + t * d1[c];
            return fail(detail::point_on_edge(g, e1, t), detail::point_on_edge(g, e2, s),
                        std::move(p));
        }
    }
    return res;
}

enum class TropVerdict { Faithful, Scaled, NotScaled };

inline const char* trop_verdict_name(TropVerdict v) {
    switch (v) {
        case TropVerdict::Faithful: return "Faithful";
        case TropVerdict::Scaled: return "Scaled";
        case TropVerdict::NotScaled: return "NotScaled";
    }
    return "?";
}

struct TropClassification {
    TropVerdict verdict = TropVerdict::NotScaled;
    std::vector<Integer> per_edge_expansion;
    bool separated = false;
    SeparationResult separation;
    std::vector<std::size_t> collapsed_edges;
};

inline TropClassification classify_trop(std::span<const PiecewiseAffineFunction> fs) {
    TropClassification c;
    c.per_edge_expansion = expansion_factors(fs);
    for (std::size_t e = 0; e < c.per_edge_expansion.size(); ++e)
        if (c.per_edge_expansion[e] == 0) c.collapsed_edges.push_back(e);
    c.separation = separates_points(fs);
    c.separated = c.separation.separated;
    bool all_one = true, all_nonzero = c.collapsed_edges.empty();
    for (const auto& m : c.per_edge_expansion)
        if (m != 1) all_one = false;
    c.verdict = !c.separated || !all_nonzero ? TropVerdict::NotScaled
                : all_one                    ? TropVerdict::Faithful
                                             : TropVerdict::Scaled;
    return c;
}

// Plot data: position of each vertex along the cycle against the heights of
// every function, one closing row for the wrap-around. Only meaningful when
// the base graph is a cycle built by MetricGraph::cycle.
inline std::string csv_breakpoints(std::span<const PiecewiseAffineFunction> fs,
                                   std::span<const std::string> names) {
    const auto& g = *fs.front().base;
    std::ostringstream os;
    os << "position";
    for (const auto& n : names) os << "," << n;
    os << "\n";
    Rational pos = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        os << to_string(pos);
        for (const auto& f : fs) os << "," << to_string(f.heights[v]);
        os << "\n";
        if (v < g.edges.size()) pos += g.edges[v].length;
    }
    os << to_string(pos);
    for (const auto& f : fs) os << "," << to_string(f.heights[0]);
    os << "\n";
    return os.str();
}

} // namespace tropigusa
