#include "tspread/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace tspread {

std::string branch_name(CmBranch b) {
    switch (b) {
        case CmBranch::principal: return "principal";
        case CmBranch::interval: return "interval";
        case CmBranch::veronese: return "veronese";
        case CmBranch::initial_non_veronese: return "initial-non-veronese";
        case CmBranch::final_non_veronese: return "final-non-veronese";
        case CmBranch::split_height_two: return "split-height-two";
        case CmBranch::complete_intersection: return "complete-intersection";
        case CmBranch::ladder_corner: return "ladder-corner";
        case CmBranch::ladder_spread_one: return "ladder-spread-one";
        case CmBranch::ladder: return "ladder";
        case CmBranch::small_ambient: return "small-ambient";
        case CmBranch::common_factor: return "common-factor";
    }
    return "principal";
}

Mask ladder_u(int n, int d, int t, int p) {
    if (p < 0 || p > d - 1) throw std::invalid_argument("ladder_u: p out of range");
    Mask m = with_index(Mask{0}, 1);
    for (int s = p; s <= d - 2; ++s) m = with_index(m, n - s * t - 1);
    for (int s = 0; s <= p - 1; ++s) m = with_index(m, n - s * t);
    return m;
}

Mask ladder_v(int n, int d, int t, int l) {
    if (l < 0 || l > d) throw std::invalid_argument("ladder_v: l out of range");
    Mask m = 0;
    for (int s = l; s <= d - 1; ++s) m = with_index(m, n - s * t - 1);
    for (int s = 0; s <= l - 1; ++s) m = with_index(m, n - s * t);
    return m;
}

namespace {

// pd of the ideal generated by the min-1 generators: x1 times a final
// segment of degree d-1, so the reversed-order resolution formula applies
int pd_min1_part(const MonomialIdeal& P, int n, int d, int t) {
    int pd = 0;
    for (Mask w : P.gens) {
        const int second = min_index(without_index(w, 1));
        pd = std::max(pd, n - second - (d - 2) * t);
    }
    return pd;
}

// pd of the ideal generated by the min-2 generators: x2 times an initial
// segment living in the variables from 2+t on
int pd_min2_part(const MonomialIdeal& Q, int d, int t) {
    int pd = 0;
    for (Mask w : Q.gens) pd = std::max(pd, max_index(w) - (d - 1) * t - 2);
    return pd;
}

}  // namespace

CmVerdict classify(const LexsegmentSpec& spec) {
    CmVerdict out;
    out.trace = normalize(spec);
    const NormalizationTrace& tr = out.trace;
    auto put = [&](const char* k, const std::string& v) { out.witness[k] = v; };

    if (tr.terminal == NormalizationTrace::Terminal::principal) {
        out.is_cm = true;
        out.branch = CmBranch::principal;
        put("generator", to_text(tr.principal_support));
        return out;
    }

    const bool stripped = !tr.factored_vars.empty();
    if (stripped) {
        // I = x1 * I' with I' non-principal: the height-one factor prime
        // coexists with higher ones, so S/I is never Cohen-Macaulay here
        out.is_cm = false;
        out.branch = is_initial(spec) ? CmBranch::initial_non_veronese : CmBranch::common_factor;
        std::string vars;
        for (int a : tr.factored_vars) vars += (vars.empty() ? "" : ",") + std::to_string(a);
        put("shared_factor_vars", vars);
        return out;
    }

    if (tr.terminal == NormalizationTrace::Terminal::interval) {
        out.is_cm = true;
        out.branch = CmBranch::interval;
        put("interval", "[" + std::to_string(tr.interval_lo) + "," + std::to_string(tr.interval_hi) + "]");
        return out;
    }

    const LexsegmentSpec r = *tr.residual;
    const int n = r.n, d = r.d, t = r.t;
    const int j1 = min_index(r.v);

    if (is_veronese(r)) {
        out.is_cm = true;
        out.branch = CmBranch::veronese;
        return out;
    }
    if (is_initial(r)) {
        out.is_cm = false;
        out.branch = CmBranch::initial_non_veronese;
        put("veronese_v", to_text(min_M(n, d, t)));
        return out;
    }
    if (n == 2 + (d - 1) * t) {
        // the only monomial with minimum 2 is min(M), so the segment is
        // final and non-Veronese
        out.is_cm = false;
        out.branch = CmBranch::small_ambient;
        return out;
    }
    if (is_final(r)) {
        out.is_cm = false;
        out.branch = CmBranch::final_non_veronese;
        put("veronese_u", to_text(max_M(n, d, t)));
        return out;
    }

    if (j1 == 2) {
        const Mask u_bottom = ladder_u(n, d, t, d - 1);  // x1 x_{n-(d-2)t} ... x_n
        Mask v_top = with_index(Mask{0}, 2);             // x2 x_{2+t} ... x_{2+(d-1)t}
        for (int s = 1; s <= d - 1; ++s) v_top = with_index(v_top, 2 + s * t);

        if (n <= 3 + (2 * d - 3) * t) {
            out.branch = CmBranch::split_height_two;
            const MonomialIdeal I = build_segment(r);
            const MonomialIdeal P = build_segment(make_spec(n, d, t, r.u, u_bottom, Kind::arbitrary));
            const MonomialIdeal Q = build_segment(make_spec(n, d, t, v_top, r.v, Kind::arbitrary));
            const MonomialIdeal PQ = intersect_ideals(P, Q);
            const Mask g = gcd_of_ideal(I);
            const int pd_p = pd_min1_part(P, n, d, t);
            const int pd_q = pd_min2_part(Q, d, t);
            out.is_cm = g == 0 && pd_p <= 1 && pd_q <= 1 && PQ.gens.size() == 1;
            put("gcd", to_text(g));
            put("pd_min1_part", std::to_string(pd_p));
            put("pd_min2_part", std::to_string(pd_q));
            std::string pq;
            for (Mask m : PQ.gens) pq += (pq.empty() ? "" : ",") + to_text(m);
            put("pq_generators", pq);
            return out;
        }

        out.branch = CmBranch::complete_intersection;
        out.is_cm = (r.u == u_bottom && r.v == v_top);
        put("required_u", to_text(u_bottom));
        put("required_v", to_text(v_top));
        return out;
    }

    // j1 > 2: v must sit on a rung, and u within the matching span
    int ell = -1;
    for (int l = 0; l <= d - 1; ++l)
        if (r.v == ladder_v(n, d, t, l)) {
            ell = l;
            break;
        }
    if (ell < 0) {
        out.branch = t == 1 ? CmBranch::ladder_spread_one : CmBranch::ladder;
        out.is_cm = false;
        put("reason", "v is not a rung monomial");
        return out;
    }
    put("ell", std::to_string(ell));
    put("v_ell", to_text(r.v));
    if (ell == d - 1) {
        out.branch = CmBranch::ladder_corner;
        const Mask want = ladder_u(n, d, t, d - 1);
        out.is_cm = (r.u == want);
        put("required_u", to_text(want));
        return out;
    }
    if (t == 1) {
        out.branch = CmBranch::ladder_spread_one;
        const Mask a = ladder_u(n, d, t, ell), b = ladder_u(n, d, t, ell + 1);
        out.is_cm = (r.u == a || r.u == b);
        put("allowed_u", to_text(a) + "," + to_text(b));
        return out;
    }
    out.branch = CmBranch::ladder;
    const Mask top = ladder_u(n, d, t, ell);
    out.is_cm = slex_geq(top, r.u);  // u >= ladder bottom holds since min(u)=1
    put("allowed_u_top", to_text(top));
    put("allowed_u_bottom", to_text(ladder_u(n, d, t, d - 1)));
    return out;
}

}  // namespace tspread
