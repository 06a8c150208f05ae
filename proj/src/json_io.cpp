#include "tspread/json_io.hpp"

namespace tspread {

json monomial_to_json(Mask m) { return json(indices_of(m)); }

Mask monomial_from_json(const json& j, int n) {
    std::vector<int> idx = j.get<std::vector<int>>();
    return mask_of(idx, n);
}

json spec_to_json(const LexsegmentSpec& s) {
    return json{{"n", s.n},
                {"d", s.d},
                {"t", s.t},
                {"kind", kind_name(s.kind)},
                {"u", monomial_to_json(s.u)},
                {"v", monomial_to_json(s.v)}};
}

LexsegmentSpec spec_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    return make_spec(n, j.at("d").get<int>(), j.at("t").get<int>(),
                     monomial_from_json(j.at("u"), n), monomial_from_json(j.at("v"), n),
                     kind_from_name(j.at("kind").get<std::string>()));
}

json ideal_to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (Mask g : I.gens) gens.push_back(monomial_to_json(g));
    return json{{"n", I.n}, {"generators", gens}};
}

json decomposition_to_json(const PrimeDecomposition& d) {
    json primes = json::array(), prov = json::array();
    for (const auto& p : d.primes) {
        primes.push_back(monomial_to_json(p.support));
        prov.push_back(tag_name(p.tag));
    }
    return json{{"n", d.n}, {"primes", primes}, {"provenance", prov}};
}

json betti_to_json(const BettiTable& b) {
    json rows = json::array();
    for (const auto& [k, v] : b.entries)
        rows.push_back(json{{"i", k.first}, {"j", k.second}, {"beta", v}});
    return json{{"rows", rows}};
}

json invariants_to_json(const InvariantReport& r) {
    return json{{"pd_ideal", r.pd_ideal}, {"pd_quotient", r.pd_quotient},
                {"depth", r.depth},       {"dim", r.dim},
                {"height", r.height},     {"is_cm", r.is_cm},
                {"source", r.source}};
}

json trace_to_json(const NormalizationTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back(json{
            {"type", s.type == NormalizationStep::Type::restrict_ambient ? "restrict-ambient"
                                                                         : "strip-leading"},
            {"offset", s.offset}});
    json out{{"original", spec_to_json(t.original)}, {"steps", steps}, {"shift", t.shift}};
    switch (t.terminal) {
        case NormalizationTrace::Terminal::principal:
            out["terminal"] = json{{"form", "principal"},
                                   {"generator", monomial_to_json(t.principal_support)}};
            break;
        case NormalizationTrace::Terminal::interval:
            out["terminal"] =
                json{{"form", "interval"}, {"lo", t.interval_lo}, {"hi", t.interval_hi}};
            break;
        case NormalizationTrace::Terminal::none:
            out["residual"] = spec_to_json(*t.residual);
            break;
    }
    if (!t.factored_vars.empty()) out["factored_vars"] = t.factored_vars;
    return out;
}

json verdict_to_json(const CmVerdict& v, const LexsegmentSpec& original) {
    return json{{"is_cm", v.is_cm},
                {"branch", branch_name(v.branch)},
                {"witness", v.witness},
                {"spec", spec_to_json(original)},
                {"trace", trace_to_json(v.trace)}};
}

}  // namespace tspread
