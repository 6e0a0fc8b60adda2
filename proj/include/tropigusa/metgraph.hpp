#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tropigusa/errors.hpp"
#include "tropigusa/linalg.hpp"
#include "tropigusa/rational.hpp"

namespace tropigusa {

// Metric graph: vertices carry a genus label, edges a positive rational
// length. Loops and parallel edges are allowed; graphs are immutable once
// built (all operations return new values).
struct MetricGraph {
    struct Vertex {
        std::string name;
        unsigned genus = 0;
    };
    struct Edge {
        std::size_t u = 0, v = 0;
        Rational length = 1;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    std::size_t add_vertex(std::string name, unsigned genus = 0) {
        vertices.push_back({std::move(name), genus});
        return vertices.size() - 1;
    }
    void add_edge(std::size_t u, std::size_t v, Rational length) {
        if (u >= vertices.size() || v >= vertices.size())
            throw unknown_vertex("edge endpoint out of range");
        if (length <= 0) throw std::domain_error("edge length must be positive");
        edges.push_back({u, v, std::move(length)});
    }

    std::optional<std::size_t> find_vertex(const std::string& name) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].name == name) return i;
        return std::nullopt;
    }

    // both loop ends count
    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (const auto& e : edges) {
            if (e.u == v) ++d;
            if (e.v == v) ++d;
        }
        return d;
    }

    bool connected() const {
        if (vertices.empty()) return false;
        std::vector<char> seen(vertices.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& e : edges) {
                std::size_t w = e.u == v ? e.v : e.v == v ? e.u : v;
                if (w != v && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    }

    std::size_t betti_number() const {
        // b1 = E - V + 1 for a connected graph
        return edges.size() + 1 - vertices.size();
    }

    unsigned total_genus() const {
        unsigned g = 0;
        for (const auto& v : vertices) g += v.genus;
        return g;
    }

    // N-cycle with vertices C0..C{N-1} and uniform edge length. N = 1 is a
    // single vertex with a loop, N = 2 a pair of parallel edges.
    static MetricGraph cycle(std::size_t n, Rational length = 1, const std::string& prefix = "C") {
        if (n == 0) throw std::domain_error("cycle needs at least one vertex");
        MetricGraph g;
        for (std::size_t i = 0; i < n; ++i) g.add_vertex(prefix + std::to_string(i));
        for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, length);
        return g;
    }
};

// Divisor on the vertices of a fixed graph.
struct GraphDivisor {
    std::vector<Integer> coeffs;

    Integer degree() const {
        return std::accumulate(coeffs.begin(), coeffs.end(), Integer(0));
    }
};

// Finite abelian group by invariant factors d1 | d2 | ... (factors 1 are
// dropped; the trivial group has an empty list).
struct AbelianGroup {
    std::vector<Integer> invariant_factors;

    static AbelianGroup from_cyclic_orders(std::vector<Integer> orders) {
        // normalize an arbitrary product of cyclic groups via the SNF of the
        // diagonal matrix it presents
        std::vector<Integer> kept;
        for (auto& d : orders) {
            if (d < 0) d = -d;
            if (d != 1) kept.push_back(d);
        }
        if (kept.empty()) return {};
        Mat<Integer> m(kept.size(), kept.size(), Integer(0));
        for (std::size_t i = 0; i < kept.size(); ++i) m.at(i, i) = kept[i];
        auto snf = smith_normal_form(std::move(m));
        AbelianGroup g;
        for (const auto& d : snf.diag)
            if (d != 1) g.invariant_factors.push_back(d);
        return g;
    }

    Integer order() const {
        Integer o = 1;
        for (const auto& d : invariant_factors) o *= d;
        return o;
    }

    bool trivial() const { return invariant_factors.empty(); }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    std::string str() const {
        if (invariant_factors.empty()) return "trivial";
        std::string s;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
            if (i) s += " x ";
            s += "Z/" + invariant_factors[i].str();
        }
        return s;
    }
};

// Largest rational dividing every edge length and 1. Integer lengths get
// unit 1, so a loop of length e subdivides into an e-cycle (the dual graph
// of the regular model); fractional lengths correspond to the minimal
// ramified base extension.
inline Rational intrinsic_unit(const MetricGraph& g) {
    Rational u = 1;
    for (const auto& e : g.edges) u = rational_gcd(u, e.length);
    return u;
}

// Each edge of length k*unit becomes a path of k edges of length unit
// through fresh genus-0 vertices. Original vertices keep their indices.
inline MetricGraph subdivide(const MetricGraph& g, const Rational& unit) {
    if (unit <= 0) throw non_commensurable_lengths("subdivision unit must be positive");
    MetricGraph out;
    out.vertices = g.vertices;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        const auto& e = g.edges[ei];
        Rational ratio = e.length / unit;
        if (!is_integral(ratio))
            throw non_commensurable_lengths("edge length " + to_string(e.length) +
                                            " is not a multiple of unit " + to_string(unit));
        std::size_t k = static_cast<std::size_t>(numerator(ratio));
        std::size_t prev = e.u;
        for (std::size_t step = 1; step < k; ++step) {
            std::size_t mid = out.add_vertex(g.vertices[e.u].name + "~" + g.vertices[e.v].name +
                                             "#" + std::to_string(ei) + "." + std::to_string(step));
            out.add_edge(prev, mid, unit);
            prev = mid;
        }
        out.add_edge(prev, e.v, unit);
    }
    return out;
}

// Suppress genus-0 vertices of degree 2 (not loop ends), merging their two
// edges. The result represents the same metric graph; used so that the
// Jacobian depends only on the metric structure, not on the representation.
inline MetricGraph canonical_form(MetricGraph g) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < g.vertices.size() && !changed; ++v) {
            if (g.vertices[v].genus != 0 || g.vertices.size() == 1) continue;
            std::vector<std::size_t> inc;
            bool loop_end = false;
            for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
                const auto& e = g.edges[ei];
                if (e.u == v && e.v == v) loop_end = true;
                else if (e.u == v || e.v == v) inc.push_back(ei);
            }
            if (loop_end || inc.size() != 2) continue;
            const auto& e1 = g.edges[inc[0]];
            const auto& e2 = g.edges[inc[1]];
            std::size_t a = e1.u == v ? e1.v : e1.u;
            std::size_t b = e2.u == v ? e2.v : e2.u;
            MetricGraph h;
            std::vector<std::size_t> remap(g.vertices.size());
            for (std::size_t i = 0; i < g.vertices.size(); ++i)
                if (i != v) remap[i] = h.add_vertex(g.vertices[i].name, g.vertices[i].genus);
            for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
                if (ei != inc[0] && ei != inc[1])
                    h.add_edge(remap[g.edges[ei].u], remap[g.edges[ei].v], g.edges[ei].length);
            h.add_edge(remap[a], remap[b], e1.length + e2.length);
            g = std::move(h);
            changed = true;
        }
    }
    return g;
}

// Combinatorial Laplacian, sign fixed as divisor(v) = sum over edges e=vw of
// (phi(v) - phi(w)); loops contribute nothing. Matches the cycle identity
// a_i = 2 h_i - h_{i-1} - h_{i+1}.
inline GraphDivisor laplacian_apply(const MetricGraph& g, std::span<const Integer> phi) {
    if (phi.size() != g.vertices.size()) throw std::invalid_argument("phi size mismatch");
    GraphDivisor d;
    d.coeffs.assign(g.vertices.size(), Integer(0));
    for (const auto& e : g.edges) {
        if (e.u == e.v) continue;
        d.coeffs[e.u] += phi[e.u] - phi[e.v];
        d.coeffs[e.v] += phi[e.v] - phi[e.u];
    }
    return d;
}

// Reduced Laplacian (vertex 0 deleted) of a graph taken combinatorially.
inline Mat<Integer> reduced_laplacian(const MetricGraph& g) {
    const std::size_t n = g.vertices.size();
    Mat<Integer> l(n - 1, n - 1, Integer(0));
    for (const auto& e : g.edges) {
        if (e.u == e.v) continue;
        if (e.u > 0) l.at(e.u - 1, e.u - 1) += 1;
        if (e.v > 0) l.at(e.v - 1, e.v - 1) += 1;
        if (e.u > 0 && e.v > 0) {
            l.at(e.u - 1, e.v - 1) -= 1;
            l.at(e.v - 1, e.u - 1) -= 1;
        }
    }
    return l;
}

// Prefactored principality tester / solver for one fixed metric graph.
// Divisors are supported on the ORIGINAL vertices; internally everything
// runs on the unit subdivision.
class LaplacianSystem {
public:
    explicit LaplacianSystem(const MetricGraph& g, std::optional<Rational> unit = std::nullopt)
        : original_(g), unit_(unit ? *unit : intrinsic_unit(g)), subdivided_(subdivide(g, unit_)) {
        if (!g.connected()) throw std::domain_error("graph must be connected");
        if (subdivided_.vertices.size() > 1)
            system_.emplace(reduced_laplacian(subdivided_));
    }

    const MetricGraph& subdivided() const { return subdivided_; }
    const Rational& unit() const { return unit_; }

    Integer tree_count() const { return system_ ? system_->det_abs() : Integer(1); }

    AbelianGroup jacobian() const {
        if (!system_) return {};
        return AbelianGroup::from_cyclic_orders(system_->diagonal());
    }

    bool is_principal(const GraphDivisor& d) const { return solve(d).has_value(); }

    // integer heights phi on the subdivided graph (phi[0] = 0) with
    // laplacian_apply(subdivided, phi) = d, when d is principal
    std::optional<std::vector<Integer>> solve(const GraphDivisor& d) const {
        std::vector<Integer> full = embed(d);
        if (std::accumulate(full.begin(), full.end(), Integer(0)) != 0)
            throw non_zero_degree("divisor degree is " + GraphDivisor{full}.degree().str() +
                                  ", expected 0");
        if (!system_) return std::vector<Integer>{Integer(0)};
        std::vector<Integer> rhs(full.begin() + 1, full.end());
        auto x = system_->solve(rhs);
        if (!x) return std::nullopt;
        std::vector<Integer> phi(subdivided_.vertices.size(), Integer(0));
        for (std::size_t i = 1; i < phi.size(); ++i) phi[i] = (*x)[i - 1];
        return phi;
    }

    bool membership(const GraphDivisor& d) const {
        std::vector<Integer> full = embed(d);
        if (std::accumulate(full.begin(), full.end(), Integer(0)) != 0)
            throw non_zero_degree("divisor degree must be 0");
        if (!system_) return true;
        std::vector<Integer> rhs(full.begin() + 1, full.end());
        return system_->contains(rhs);
    }

private:
    std::vector<Integer> embed(const GraphDivisor& d) const {
        if (d.coeffs.size() != original_.vertices.size())
            throw std::invalid_argument("divisor size does not match graph");
        std::vector<Integer> full(subdivided_.vertices.size(), Integer(0));
        std::copy(d.coeffs.begin(), d.coeffs.end(), full.begin());
        return full;
    }

    MetricGraph original_;
    Rational unit_;
    MetricGraph subdivided_;
    std::optional<IntegerSystem> system_;
};

// Jacobian group Jac(G) = Div0/Prin of the unit subdivision, computed on the
// canonical representation so that metrically equal graphs agree. Its order
// is the number of spanning trees.
inline AbelianGroup graph_jacobian(const MetricGraph& g) {
    if (!g.connected()) throw std::domain_error("graph must be connected");
    return LaplacianSystem(canonical_form(g)).jacobian();
}

// Specialization map: sum point multiplicities per vertex.
inline GraphDivisor specialize(const MetricGraph& g,
                               const std::vector<std::pair<Integer, std::string>>& assignments) {
    GraphDivisor d;
    d.coeffs.assign(g.vertices.size(), Integer(0));
    for (const auto& [mult, name] : assignments) {
        auto v = g.find_vertex(name);
        if (!v) throw unknown_vertex("no vertex named '" + name + "'");
        d.coeffs[*v] += mult;
    }
    return d;
}

struct PrincipalityResult {
    bool principal = false;
    Rational unit = 1;
    // heights on subdivide(g, unit), normalized to witness[0] = 0
    std::vector<Integer> witness;
};

inline PrincipalityResult is_principal(const MetricGraph& g, const GraphDivisor& d) {
    if (d.degree() != 0) throw non_zero_degree("divisor degree is " + d.degree().str());
    LaplacianSystem sys(g);
    PrincipalityResult r;
    r.unit = sys.unit();
    auto phi = sys.solve(d);
    r.principal = phi.has_value();
    if (phi) r.witness = std::move(*phi);
    return r;
}

inline std::string to_dot(const MetricGraph& g) {
    std::ostringstream os;
    os << "graph skeleton {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << g.vertices[i].name << " (g=" << g.vertices[i].genus
           << ")\"];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.u << " -- v" << e.v << " [label=\"" << to_string(e.length) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace tropigusa
