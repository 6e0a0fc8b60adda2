#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "tropigusa/igusa.hpp"
#include "tropigusa/redtype.hpp"
#include "tropigusa/torsion.hpp"
#include "tropigusa/tropfun.hpp"
#include "tropigusa/valfield.hpp"

namespace tropigusa {

using json = nlohmann::json;

// Extra files a command produces next to its JSON report (DOT graphs, CSV
// plot data): artifact name -> content.
using ArtifactMap = std::map<std::string, std::string>;

namespace cli_detail {

inline ValuedField parse_field(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw parse_error("field: expected an object with a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "tadic") return ValuedField::tadic();
    if (kind != "padic") throw parse_error("field.kind must be 'padic' or 'tadic'");
    if (!j.contains("p")) throw parse_error("p-adic field needs a prime 'p'");
    const json& p = j.at("p");
    Integer prime = p.is_string() ? Integer(p.get<std::string>()) : Integer(p.get<long long>());
    return ValuedField::padic(prime);
}

template <FieldScalar K>
K parse_scalar(const std::string& s);
template <>
inline Rational parse_scalar<Rational>(const std::string& s) { return parse_padic_scalar(s); }
template <>
inline RationalFunction parse_scalar<RationalFunction>(const std::string& s) {
    return parse_tadic_scalar(s);
}

// curve.coeffs are plain monomial coefficients c0..c5 (quintic) or c0..c6
// (sextic, with a designated rational root to move to infinity)
template <FieldScalar K>
QuinticModel<K> parse_curve(const json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw parse_error("curve: expected an object with 'coeffs'");
    const json& cj = j.at("coeffs");
    if (!cj.is_array() || (cj.size() != 6 && cj.size() != 7))
        throw parse_error("curve.coeffs must list 6 (quintic) or 7 (sextic) scalars");
    std::vector<K> c;
    for (const auto& x : cj) c.push_back(parse_scalar<K>(x.get<std::string>()));
    if (cj.size() == 6) {
        std::array<K, 6> a;
        std::copy(c.begin(), c.end(), a.begin());
        return QuinticModel<K>::from_monomial_coeffs(a);
    }
    if (!j.contains("root"))
        throw parse_error("a sextic needs a designated simple rational 'root'");
    std::array<K, 7> a;
    std::copy(c.begin(), c.end(), a.begin());
    return sextic_to_quintic(a, parse_scalar<K>(j.at("root").get<std::string>()));
}

inline json graph_to_json(const MetricGraph& g) {
    json vs = json::array(), es = json::array();
    for (const auto& v : g.vertices) vs.push_back({{"name", v.name}, {"genus", v.genus}});
    for (const auto& e : g.edges)
        es.push_back({{"from", g.vertices[e.u].name},
                      {"to", g.vertices[e.v].name},
                      {"length", to_string(e.length)}});
    return {{"vertices", vs}, {"edges", es}};
}

inline MetricGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw parse_error("graph: expected an object with 'vertices' and 'edges'");
    MetricGraph g;
    for (const auto& v : j.at("vertices")) {
        unsigned genus = v.contains("genus") ? v.at("genus").get<unsigned>() : 0;
        g.add_vertex(v.at("name").get<std::string>(), genus);
    }
    for (const auto& e : j.at("edges")) {
        auto u = g.find_vertex(e.at("from").get<std::string>());
        auto v = g.find_vertex(e.at("to").get<std::string>());
        if (!u || !v) throw unknown_vertex("edge endpoint names must be declared vertices");
        Rational len = e.contains("length") ? parse_rational(e.at("length").get<std::string>())
                                            : Rational(1);
        g.add_edge(*u, *v, len);
    }
    if (g.vertices.empty()) throw parse_error("graph has no vertices");
    if (!g.connected()) throw parse_error("graph must be connected");
    return g;
}

inline json group_to_json(const AbelianGroup& g) {
    json factors = json::array();
    for (const auto& d : g.invariant_factors) factors.push_back(d.str());
    return {{"invariant_factors", factors}, {"order", g.order().str()}, {"name", g.str()}};
}

inline json trop_to_json(const TropIgusa& tv) {
    return {{"J2", tv.vJ2.str()},   {"J4", tv.vJ4.str()}, {"J6", tv.vJ6.str()},
            {"J8", tv.vJ8.str()},   {"J10", tv.vJ10.str()}, {"I2", tv.vI2.str()},
            {"I4", tv.vI4.str()},   {"I6", tv.vI6.str()}, {"I8", tv.vI8.str()},
            {"I12", tv.vI12.str()}};
}

inline json wtable_to_json(const WTable& w) {
    json o;
    for (int i = 0; i < 5; ++i) {
        o["w1_" + std::to_string(i + 1)] = w.w1[i].str();
        o["w2_" + std::to_string(i + 1)] = w.w2[i].str();
        o["w3_" + std::to_string(i + 1)] = w.w3[i].str();
    }
    o["w2_x"] = w.w2x.str();
    o["w3_x"] = w.w3x.str();
    o["w3_y1"] = w.w3y1.str();
    o["w3_y2"] = w.w3y2.str();
    o["w2c_1"] = w.w2c1.str();
    o["w2c_2"] = w.w2c2.str();
    o["w2c_3"] = w.w2c3.str();
    o["w5_1"] = w.w5_1.str();
    o["w5_2"] = w.w5_2.str();
    o["w6_1"] = w.w6_1.str();
    o["w6_2"] = w.w6_2.str();
    o["w7_1"] = w.w7_1.str();
    o["w7_2"] = w.w7_2.str();
    return o;
}

template <FieldScalar K>
json invariants_to_json(const IgusaInvariants<K>& J) {
    return {{"J2", scalar_str(J.J2)},   {"J4", scalar_str(J.J4)}, {"J6", scalar_str(J.J6)},
            {"J8", scalar_str(J.J8)},   {"J10", scalar_str(J.J10)}, {"I2", scalar_str(J.I2)},
            {"I4", scalar_str(J.I4)},   {"I6", scalar_str(J.I6)}, {"I8", scalar_str(J.I8)},
            {"I12", scalar_str(J.I12)}};
}

struct CurveAnalysis {
    json invariants;
    TropIgusa tv;
    Epsilon eps;
};

template <FieldScalar K, class Valuation>
CurveAnalysis analyze_curve(const json& input, Valuation val, Epsilon eps) {
    QuinticModel<K> q = parse_curve<K>(input.at("curve"));
    IgusaInvariants<K> J = igusa_from_quintic(q);
    CurveAnalysis a{invariants_to_json(J), trop_igusa(J, val), eps};
    return a;
}

inline CurveAnalysis analyze(const json& input) {
    ValuedField field = parse_field(input.at("field"));
    Epsilon eps = Epsilon::from_residue_char(field.residue_char());
    if (field.kind == FieldKind::padic)
        return analyze_curve<Rational>(input, PadicValuation{field.p}, eps);
    return analyze_curve<RationalFunction>(input, TadicValuation{}, eps);
}

inline json classify_json(const CurveAnalysis& a) {
    WTable w = w_table(a.tv, a.eps);
    ReductionVerdict v = classify(w);
    json matched = json::array();
    for (auto t : v.matched_cases) matched.push_back(reduction_type_name(t));
    json notes = json::array();
    for (const auto& n : v.notes) notes.push_back(n);
    return {{"type", reduction_type_name(v.rtype)},
            {"ambiguous", v.ambiguous},
            {"matched_cases", matched},
            {"epsilon", a.eps.value},
            {"valuations", trop_to_json(a.tv)},
            {"w", wtable_to_json(w)},
            {"notes", notes}};
}

inline json functions_csv_and_json(const std::vector<PiecewiseAffineFunction>& fs,
                                   const std::vector<std::string>& names, ArtifactMap* artifacts,
                                   const std::string& csv_name) {
    json out = json::object();
    for (std::size_t k = 0; k < fs.size(); ++k) {
        json slopes = json::array(), heights = json::array();
        for (const auto& s : fs[k].slopes) slopes.push_back(s.str());
        for (const auto& h : fs[k].heights) heights.push_back(to_string(h));
        out[names[k]] = {{"slopes", slopes}, {"heights", heights}};
    }
    if (artifacts)
        (*artifacts)[csv_name] = csv_breakpoints(fs, names);
    return out;
}

} // namespace cli_detail

// Runs one command on a parsed input document. Domain failures surface as
// tropigusa::domain_error; malformed input as tropigusa::parse_error or
// nlohmann's json exceptions. The caller maps those to exit codes.
inline json run_command(const std::string& command, const json& input,
                        ArtifactMap* artifacts = nullptr,
                        std::optional<Rational> unit_override = std::nullopt) {
    using namespace cli_detail;

    if (command == "invariants") {
        CurveAnalysis a = analyze(input);
        return {{"invariants", a.invariants}, {"valuations", trop_to_json(a.tv)}};
    }

    if (command == "classify") {
        CurveAnalysis a = analyze(input);
        json out = classify_json(a);
        out["invariants"] = a.invariants;
        return out;
    }

    if (command == "skeleton") {
        CurveAnalysis a = analyze(input);
        WTable w = w_table(a.tv, a.eps);
        ReductionVerdict v = classify(w);
        SkeletonData s = thickness(v, a.tv, a.eps);
        json th = json::object();
        for (const auto& [name, val] : s.thicknesses) th[name] = to_string(val);
        json notes = json::array();
        for (const auto& n : s.notes) notes.push_back(n);
        MetricGraph export_graph =
            unit_override ? subdivide(s.dual_graph, *unit_override) : s.dual_graph;
        if (artifacts) (*artifacts)["skeleton.dot"] = to_dot(export_graph);
        return {{"type", reduction_type_name(s.rtype)},
                {"ambiguous", v.ambiguous},
                {"thicknesses", th},
                {"component_group", group_to_json(s.component_group)},
                {"integral_over_K", s.integral_over_K},
                {"dual_graph", graph_to_json(s.dual_graph)},
                {"valuations", trop_to_json(a.tv)},
                {"epsilon", a.eps.value},
                {"notes", notes}};
    }

    if (command == "graphjac") {
        MetricGraph g = graph_from_json(input.at("graph"));
        AbelianGroup jac;
        Rational unit;
        if (unit_override) {
            LaplacianSystem sys(g, *unit_override);
            jac = sys.jacobian();
            unit = *unit_override;
        } else {
            jac = graph_jacobian(g);
            unit = intrinsic_unit(canonical_form(g));
        }
        if (artifacts) (*artifacts)["graph.dot"] = to_dot(g);
        return {{"jacobian", group_to_json(jac)}, {"unit", to_string(unit)}};
    }

    if (command == "tropcycle") {
        std::size_t n = input.at("N").get<std::size_t>();
        std::vector<CycleDivisorSpec> specs;
        std::vector<std::string> names;
        for (const auto& dj : input.at("divisors")) {
            CycleDivisorSpec spec;
            spec.N = n;
            spec.edge_length = Rational(1, static_cast<long>(n));
            for (const auto& c : dj.at("a")) spec.a.push_back(Integer(c.get<long long>()));
            spec.validate();
            specs.push_back(std::move(spec));
            names.push_back(dj.contains("name") ? dj.at("name").get<std::string>()
                                                : "f" + std::to_string(names.size() + 1));
        }
        EllipticTropReport rep = elliptic_trop(n, std::move(specs), names);
        json expansions = json::array();
        for (const auto& m : rep.expansions) expansions.push_back(m.str());
        return {{"N", n},
                {"functions", functions_csv_and_json(rep.functions, names, artifacts,
                                                     "breakpoints.csv")},
                {"expansions", expansions},
                {"length", format_vj_multiple(rep.length_in_vj)},
                {"length_coefficient", to_string(rep.length_in_vj)},
                {"classification", trop_verdict_name(rep.classification.verdict)},
                {"separated", rep.classification.separated}};
    }

    if (command == "tropgenus2") {
        Genus2TorsionConfig cfg{input.at("e1").get<std::size_t>(),
                                input.at("i").get<std::size_t>(),
                                input.at("j").get<std::size_t>()};
        Genus2TropReport rep = genus2_trop(cfg);
        std::vector<PiecewiseAffineFunction> fs = {rep.F, rep.G};
        std::vector<std::string> names = {"F", "G"};
        json expansions = json::array();
        for (const auto& m : rep.expansions) expansions.push_back(m.str());
        json out = {{"config", {{"e1", cfg.e1}, {"i", cfg.i}, {"j", cfg.j}}},
                    {"functions", functions_csv_and_json(fs, names, artifacts, "breakpoints.csv")},
                    {"expansions", expansions},
                    {"length", to_string(rep.length)},
                    {"separated", rep.separated},
                    {"classification", trop_verdict_name(rep.classification.verdict)}};
        if (!rep.separated) {
            json img = json::array();
            for (const auto& x : rep.separation.common_image) img.push_back(to_string(x));
            out["witness"] = {{"a", rep.separation.witness_a},
                              {"b", rep.separation.witness_b},
                              {"image", img}};
        }
        return out;
    }

    if (command == "scan") {
        std::size_t e1_max = input.at("e1_max").get<std::size_t>();
        ScanReport rep = nonzero_slope_scan(e1_max);
        json ces = json::array();
        for (const auto& c : rep.counterexamples)
            ces.push_back({{"e1", c.e1}, {"i", c.i}, {"j", c.j}, {"edge", c.edge}});
        return {{"e1_max", rep.e1_max},
                {"configs_checked", rep.configs_checked},
                {"edges_checked", rep.edges_checked},
                {"counterexamples", ces}};
    }

    throw parse_error("unknown command '" + command + "'");
}

} // namespace tropigusa
