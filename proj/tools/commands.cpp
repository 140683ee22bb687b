#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "cusp_atlas/errors.hpp"
#include "cusp_atlas/selfcheck.hpp"
#include "cusp_atlas/symbols.hpp"

namespace cusp_atlas::io {

namespace {

json encode_symbol(const USymbol& s) {
    return json{{"kind", s.kind == SymbolKind::SpOrdered ? "ordered" : "unordered"}, {"A", s.A}, {"B", s.B}};
}

json encode_group_descriptor(const ComponentGroup& g) {
    return json{{"generators", g.generators}, {"relation", to_string(g.relation)}, {"order", g.order}};
}

json encode_datum(const CuspidalDatum& d) {
    json out{{"d", d.d},
             {"dprime", d.dprime},
             {"torus_rank", d.torus_rank},
             {"cusp_partition", encode(d.cusp_partition)},
             {"cusp_character", encode(d.cusp_character)}};
    if (d.lift != 0) out["lift"] = d.lift > 0 ? "O+" : "O-";
    return out;
}

std::string levi_of_datum(Side side, const CuspidalDatum& d) {
    const int m = side == Side::Symplectic ? d.d * (d.d + 1) : d.d * d.d;
    return "(C^x)^" + std::to_string(d.torus_rank) + " x " + (side == Side::Symplectic ? "Sp_" : "SO_") +
           std::to_string(m);
}

json encode_o_datum(const OSpringerDatum& o) {
    json out{{"case", to_string(o.which)},
             {"weyl_rep", to_string(o.weyl_rep)},
             {"quasi_levi", "(C^x)^" + std::to_string(o.torus_rank) + " x O_" + std::to_string(o.o_block)},
             {"fused_orbits", o.fused_orbits},
             {"datum", encode_datum(o.datum)}};
    if (o.chi != 0) out["chi"] = o.chi;
    return out;
}

json encode_pairs(const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back(json::array({a, b}));
    return out;
}

json encode_agroup(const ParameterAGroup& g) {
    json gens = json::array();
    for (const Block& b : g.generators) gens.push_back(json::array({b.pi, b.a}));
    json center = json::array();
    for (const Block& b : g.center_image) center.push_back(json::array({b.pi, b.a}));
    return json{{"generators", gens}, {"relation", to_string(g.relation)}, {"order", g.order}, {"center_image", center}};
}

RunResult run_validate_orbit(const OrbitInput& in) {
    json out{{"group", encode(in.group)}, {"partition", encode(in.partition)}};
    const Verdict v = validate_partition(in.group, in.partition);
    out["valid"] = v.valid;
    out["problems"] = v.problems;
    if (!v.valid) return {out, 0};
    out["orbit_count"] = orbit_count(in.group, in.partition);
    out["component_group"] = encode_group_descriptor(component_group(in.group, in.partition));
    out["distinguished"] = is_distinguished(in.group, in.partition);
    out["degenerate"] = is_degenerate(in.group, in.partition);
    if (in.group.family != Family::GL) out["symbol"] = encode_symbol(distinguished_symbol(in.group, in.partition));
    if (in.character) {
        require_character(in.group, in.partition, *in.character);
        if (is_special_orthogonal(in.group.family) && !in.character->values().empty() &&
            in.character->product() != 1)
            out["character_note"] = "not trivial on the full product; identified with its global flip";
        if (in.group.family != Family::GL) {
            const USymbol s = symbol_for_pair(in.group, in.partition, *in.character);
            out["symbol_for_pair"] = encode_symbol(s);
            out["defect"] = defect(s);
        }
    }
    return {out, 0};
}

RunResult run_validate_parameter(const ParameterInput& in) {
    json out{{"group", encode(in.parameter.dual)}};
    const Verdict v = validate_parameter(in.parameter);
    out["valid"] = v.valid;
    out["problems"] = v.problems;
    if (!v.valid) return {out, 0};
    out["p_adic_group"] = p_adic_group_name(in.parameter.dual);
    out["agroup"] = encode_agroup(agroup(in.parameter));
    out["sans_trou"] = is_sans_trou(in.parameter);
    if (in.character) {
        require_character(in.parameter, *in.character);
        out["sgroup_factors"] = sgroup_factors(in.parameter, *in.character);
    }
    return {out, 0};
}

RunResult run_springer(const OrbitInput& in) {
    const Side side = side_of(in.group.family);
    require_valid(in.group, in.partition);
    require_character(in.group, in.partition, *in.character);
    const bool distinguished = is_distinguished(in.group, in.partition);
    const CuspidalDatum datum = distinguished ? springer_datum(in.group, in.partition, *in.character)
                                              : springer_datum_general(in.group, in.partition, *in.character);
    json out{{"group", encode(in.group)},
             {"partition", encode(in.partition)},
             {"character", encode(*in.character)},
             {"distinguished", distinguished},
             {"datum", encode_datum(datum)},
             {"levi", levi_of_datum(side, datum)},
             {"symbol", encode_symbol(symbol_for_pair(in.group, in.partition, *in.character))}};
    if (distinguished) {
        const NormalForm nf = eliminate(in.partition, *in.character);
        out["normal_form"] = json{{"partition", encode(nf.partition)},
                                  {"character", encode(nf.character)},
                                  {"removed", encode_pairs(nf.removed)}};
    }
    if (is_orthogonal(in.group.family)) out["o_extension"] = encode_o_datum(springer_O(in.group, in.partition, *in.character));
    return {out, 0};
}

RunResult run_product(const ProductInput& in) {
    const ProductDatum d = springer_product(in.factors);
    json factors = json::array();
    for (const auto& f : d.factors) factors.push_back(encode_o_datum(f));
    json out{{"factors", factors},        {"arrangement", d.arrangement}, {"p", d.p},
             {"q", d.q},                  {"r", d.r},                     {"c_levi", encode_pairs(d.c_levi)},
             {"c_orbit", encode_pairs(d.c_orbit)}, {"c_induced", encode_pairs(d.c_induced)},
             {"chi_levi", d.chi_levi},    {"chi_orbit", d.chi_orbit},     {"weyl_rep", to_string(d.weyl_rep)},
             {"index", d.index()}};
    return {out, 0};
}

json encode_support(const CuspidalSupport& s) {
    json twists = json::array();
    for (const GLTwist& t : s.gl_twists) twists.push_back(json::array({t.pi, t.e.to_string()}));
    json blocks = json::array();
    json chars = json::array();
    for (const Block& b : s.cusp_param.sorted_blocks()) {
        blocks.push_back(json::array({b.pi, b.a}));
        chars.push_back(json::array({b.pi, b.a, s.cusp_char.at(b)}));
    }
    return json{{"levi", levi_string(s)},
                {"gl_twists", twists},
                {"cusp_blocks", blocks},
                {"cusp_char", chars},
                {"cusp_parameter", encode_parameter(s.cusp_param, &s.cusp_char)},
                {"n_sharp", s.n_sharp},
                {"ell", s.ell}};
}

RunResult run_support(const ParameterInput& in) {
    const CuspidalSupport s = support(in.parameter, *in.character);
    const SupportReport r = check_support(in.parameter, *in.character, s);
    json out = encode_support(s);
    out["group"] = encode(in.parameter.dual);
    out["p_adic_group"] = p_adic_group_name(in.parameter.dual);
    out["checks"] = json{{"infinitesimal_character", r.infinitesimal},
                         {"dimension", r.dimension},
                         {"idempotent", r.idempotent},
                         {"cuspidal_iff_self", r.cuspidal_iff_self},
                         {"psi_route", r.psi_agrees}};
    if (!r.ok()) out["failures"] = r.failures;
    return {out, r.ok() ? 0 : 4};
}

RunResult run_cuspidal_test(const ParameterInput& in) {
    const DiscreteParameter& p = in.parameter;
    const ParameterCharacter& eta = *in.character;
    const bool cuspidal = is_cuspidal(p, eta);
    const CuspidalSupport s = support(p, eta);
    const bool self = s.gl_twists.empty();
    json out{{"cuspidal", cuspidal},
             {"sans_trou", is_sans_trou(p)},
             {"alternating", is_alternating(p, eta)},
             {"sgroup_factors", sgroup_factors(p, eta)},
             {"support_is_self", self}};
    return {out, cuspidal == self ? 0 : 4};
}

RunResult run_reducibility(const ReducibilityInput& in) {
    const Half x = reducibility_point(in.group, in.pi, in.a_values);
    return {json{{"x", x.to_string()}, {"side", to_string(block_group_type(in.group, in.pi))}}, 0};
}

json encode_weyl(const WeylDescriptor& w) {
    json factors = json::array();
    for (const WeylFactor& f : w.factors)
        factors.push_back(json{{"pi", f.pi}, {"type", to_string(f.type)}, {"rank", f.rank}, {"star", f.star}});
    return json{{"factors", factors}, {"r_group", json{{"generators", w.r_group.generators}, {"order", w.r_group.order}}}};
}

RunResult run_bernstein(const TripleInput& in) {
    const WeylDescriptor w = weyl_descriptor(in.triple);
    const TorusDim t = torus_dim(in.triple);
    json torsion = json::array();
    for (const auto& [pi, order] : t.torsion) torsion.push_back(json::array({pi, order}));
    return {json{{"weyl", encode_weyl(w)}, {"torus", json{{"dim", t.dim}, {"torsion", torsion}}}}, 0};
}

RunResult run_hecke(const TripleInput& in) {
    json factors = json::array();
    for (const HeckeFactor& h : hecke_parameters(in.triple, in.theta))
        factors.push_back(json{{"pi", h.pi},
                               {"type", to_string(h.type)},
                               {"rank", h.rank},
                               {"x_plus", h.x_plus.to_string()},
                               {"x_minus", h.x_minus.to_string()},
                               {"lambda", h.lambda.to_string()},
                               {"lambda_star", h.lambda_star.to_string()},
                               {"mu", h.mu},
                               {"torsion", h.torsion}});
    return {json{{"factors", factors}}, 0};
}

RunResult run_enumerate(const EnumerateInput& in, int bound) {
    if (in.group.N > bound)
        throw DomainError("N = " + std::to_string(in.group.N) + " exceeds the enumeration bound " + std::to_string(bound));
    json out{{"group", encode(in.group)}, {"bound", bound}};
    const Census c = springer_census(in.group);
    out["pairs"] = c.pairs;
    json by = json::object();
    for (const auto& [d, n] : c.by_d) by["d=" + std::to_string(d)] = n;
    out["by_triple"] = by;
    if (in.group.family != Family::GL) {
        const auto params = enumerate_parameters(in.group, in.signature, bound, in.mode);
        long cuspidal = 0;
        long sgroup = 0;
        for (const auto& [p, eta] : params) {
            cuspidal += is_cuspidal(p, eta) ? 1 : 0;
            sgroup += sgroup_factors(p, eta) ? 1 : 0;
        }
        out["parameters"] = json{{"count", params.size()}, {"cuspidal", cuspidal}, {"sgroup_factors", sgroup}};
    }
    return {out, 0};
}

RunResult run_selfcheck(const SelfcheckInput& in, int bound) {
    const int effective = in.bound ? std::min(*in.bound, bound) : bound;
    json properties = json::array();
    bool all = true;
    for (const PropertyResult& r : cusp_atlas::run_selfcheck(effective)) {
        json entry{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
        if (!r.detail.empty()) entry["detail"] = r.detail;
        properties.push_back(std::move(entry));
        all = all && r.passed;
    }
    return {json{{"bound", effective}, {"properties", properties}, {"passed", all}}, all ? 0 : 4};
}

void render(const json& j, const std::string& prefix, std::ostringstream& os) {
    const bool scalar_array =
        j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return !x.is_structured(); });
    if (j.is_object()) {
        for (const auto& item : j.items()) render(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(), os);
    } else if (j.is_array() && !scalar_array) {
        for (std::size_t i = 0; i < j.size(); ++i) render(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

}  // namespace

std::string p_adic_group_name(const GroupKind& dual) {
    switch (dual.family) {
        case Family::Sp: return "SO_" + std::to_string(dual.N + 1);
        case Family::SOodd:
        case Family::Oodd: return "Sp_" + std::to_string(dual.N - 1);
        case Family::SOeven:
        case Family::Oeven: return "SO_" + std::to_string(dual.N);
        case Family::GL: return "GL_" + std::to_string(dual.N);
    }
    return "?";
}

RunResult run(const JobSpec& job, int bound) {
    switch (job.command) {
        case Command::Validate:
            if (const auto* orbit = std::get_if<OrbitInput>(&job.payload)) return run_validate_orbit(*orbit);
            return run_validate_parameter(std::get<ParameterInput>(job.payload));
        case Command::Springer:
            if (const auto* orbit = std::get_if<OrbitInput>(&job.payload)) return run_springer(*orbit);
            return run_product(std::get<ProductInput>(job.payload));
        case Command::Support: return run_support(std::get<ParameterInput>(job.payload));
        case Command::CuspidalTest: return run_cuspidal_test(std::get<ParameterInput>(job.payload));
        case Command::Reducibility: return run_reducibility(std::get<ReducibilityInput>(job.payload));
        case Command::Bernstein: return run_bernstein(std::get<TripleInput>(job.payload));
        case Command::Hecke: return run_hecke(std::get<TripleInput>(job.payload));
        case Command::Enumerate: return run_enumerate(std::get<EnumerateInput>(job.payload), bound);
        case Command::Selfcheck: return run_selfcheck(std::get<SelfcheckInput>(job.payload), bound);
    }
    throw InvariantError("unhandled command");
}

std::string render_text(const json& output) {
    std::ostringstream os;
    render(output, "", os);
    return os.str();
}

}  // namespace cusp_atlas::io
