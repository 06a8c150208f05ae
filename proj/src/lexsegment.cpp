#include "tspread/lexsegment.hpp"

#include <algorithm>
#include <stdexcept>

namespace tspread {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::initial: return "initial";
        case Kind::final: return "final";
        case Kind::arbitrary: return "arbitrary";
    }
    return "arbitrary";
}

Kind kind_from_name(const std::string& s) {
    if (s == "initial") return Kind::initial;
    if (s == "final") return Kind::final;
    if (s == "arbitrary") return Kind::arbitrary;
    throw std::invalid_argument("unknown segment kind: " + s);
}

void validate_spec(const LexsegmentSpec& s) {
    if (s.n < 1 || s.n > kMaxVars) throw std::invalid_argument("ambient n out of [1,32]");
    if (s.d < 1) throw std::invalid_argument("degree d must be positive");
    if (s.t < 1) throw std::invalid_argument("spread t must be positive");
    if (s.n < 1 + (s.d - 1) * s.t) throw std::invalid_argument("M_{n,d,t} is empty");
    for (Mask w : {s.u, s.v}) {
        if (degree(w) != s.d) throw std::invalid_argument("endpoint degree differs from d");
        if (max_index(w) > s.n) throw std::invalid_argument("endpoint exceeds ambient");
        if (!is_t_spread(w, s.t)) throw std::invalid_argument("endpoint is not t-spread");
    }
    if (!slex_geq(s.u, s.v)) throw std::invalid_argument("u < v in slex order");
    if (s.kind == Kind::initial && s.u != max_M(s.n, s.d, s.t))
        throw std::invalid_argument("initial kind requires u = max(M)");
    if (s.kind == Kind::final && s.v != min_M(s.n, s.d, s.t))
        throw std::invalid_argument("final kind requires v = min(M)");
}

LexsegmentSpec make_spec(int n, int d, int t, Mask u, Mask v, Kind kind) {
    LexsegmentSpec s{n, d, t, u, v, kind};
    validate_spec(s);
    return s;
}

bool is_initial(const LexsegmentSpec& s) { return s.u == max_M(s.n, s.d, s.t); }
bool is_final(const LexsegmentSpec& s) { return s.v == min_M(s.n, s.d, s.t); }
bool is_veronese(const LexsegmentSpec& s) { return is_initial(s) && is_final(s); }

MonomialIdeal build_segment(const LexsegmentSpec& s) {
    validate_spec(s);
    std::vector<Mask> gens;
    for (Mask w : enumerate_M(s.n, s.d, s.t)) {
        if (slex_greater(w, s.u)) continue;
        if (slex_greater(s.v, w)) break;
        gens.push_back(w);
    }
    // an equigenerated set is automatically an antichain
    return MonomialIdeal{s.n, std::move(gens)};
}

namespace {

// sorted index multiset of x_k * (w / x_s)
std::vector<int> swap_indices(Mask w, int s, int k) {
    std::vector<int> idx;
    for (int i : indices_of(w))
        if (i != s) idx.push_back(i);
    idx.push_back(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace

bool is_completely_by_intersection(const LexsegmentSpec& s) {
    validate_spec(s);
    const LexsegmentSpec ini{s.n, s.d, s.t, max_M(s.n, s.d, s.t), s.v, Kind::initial};
    const LexsegmentSpec fin{s.n, s.d, s.t, s.u, min_M(s.n, s.d, s.t), Kind::final};
    MonomialIdeal J = build_segment(ini), T = build_segment(fin);
    MonomialIdeal I = build_segment(s);
    MonomialIdeal JT = intersect_ideals(J, T);
    return JT.gens == I.gens;
}

namespace {

std::vector<char> membership_table(const MonomialIdeal& I) {
    const std::size_t size = std::size_t{1} << I.n;
    std::vector<char> in(size, 0);
    for (Mask g : I.gens) in[g] = 1;
    for (Mask mm = 1; mm < size; ++mm) {
        if (in[mm]) continue;
        for (Mask rest = mm; rest; rest &= rest - 1) {
            if (in[mm & ~(rest & (0u - rest))]) {
                in[mm] = 1;
                break;
            }
        }
    }
    return in;
}

// J cap T = I decided over every squarefree monomial at once
bool completely_by_membership(const LexsegmentSpec& s) {
    if (s.n > 20)
        throw std::out_of_range("is_completely: ambient too large for the direct route");
    const LexsegmentSpec ini{s.n, s.d, s.t, max_M(s.n, s.d, s.t), s.v, Kind::initial};
    const LexsegmentSpec fin{s.n, s.d, s.t, s.u, min_M(s.n, s.d, s.t), Kind::final};
    const auto inJ = membership_table(build_segment(ini));
    const auto inT = membership_table(build_segment(fin));
    const auto inI = membership_table(build_segment(s));
    for (std::size_t mm = 0; mm < inI.size(); ++mm)
        if ((inJ[mm] && inT[mm]) != static_cast<bool>(inI[mm])) return false;
    return true;
}

}  // namespace

bool is_completely(const LexsegmentSpec& s) {
    validate_spec(s);
    if (is_initial(s) || is_final(s)) return true;
    // the exchange criterion presumes the reduced position; completeness is
    // not invariant under restriction, so decide other shapes directly
    if (min_index(s.u) != 1 || min_index(s.v) < 2) return completely_by_membership(s);

    // exchange criterion: for every w < v there is s0 in supp(w), s0 > min(u),
    // with x_{min(u)} (w / x_{s0}) <=_lex u
    const int i1 = min_index(s.u);
    const std::vector<int> u_idx = indices_of(s.u);
    bool below_v = false;
    for (Mask w : enumerate_M(s.n, s.d, s.t)) {
        if (!below_v) {
            if (w == s.v) below_v = true;
            continue;
        }
        bool ok = false;
        for (int s0 : indices_of(w)) {
            if (s0 <= i1) continue;
            if (lex_compare_multiset(swap_indices(w, s0, i1), u_idx) <= 0) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

LinearResolution linear_resolution_completely(const LexsegmentSpec& s, std::string* reason) {
    validate_spec(s);
    auto fail = [&](LinearResolution r, const char* why) {
        if (reason) *reason = why;
        return r;
    };
    if (!is_completely(s)) return fail(LinearResolution::inapplicable, "segment is not completely");
    if (min_index(s.u) != 1 || min_index(s.v) <= min_index(s.u))
        return fail(LinearResolution::inapplicable, "criterion needs min(v) > min(u) = 1");

    const std::vector<int> u_idx = indices_of(s.u);
    const int i2 = u_idx[1];
    if (i2 == 1 + s.t) return LinearResolution::yes;

    // largest w in M strictly below v; none when v = min(M)
    const std::vector<Mask> M = enumerate_M(s.n, s.d, s.t);
    auto it = std::find(M.begin(), M.end(), s.v);
    if (it + 1 == M.end()) return LinearResolution::yes;
    const Mask w = *(it + 1);

    std::vector<int> lhs = swap_indices(w, max_index(w), 1);
    std::vector<int> rhs{1};
    for (std::size_t k = 1; k < u_idx.size(); ++k) rhs.push_back(u_idx[k] - s.t);
    if (lex_compare_multiset(lhs, rhs) <= 0) return LinearResolution::yes;
    return fail(LinearResolution::no, "shifted endpoint test fails for the successor of v");
}

NormalizationTrace normalize(const LexsegmentSpec& s0) {
    validate_spec(s0);
    NormalizationTrace tr;
    tr.original = s0;
    LexsegmentSpec cur = s0;

    while (true) {
        if (cur.u == cur.v) {
            tr.terminal = NormalizationTrace::Terminal::principal;
            tr.principal_support = static_cast<Mask>(cur.u) << tr.shift;
            tr.residual.reset();
            return tr;
        }
        if (cur.d == 1) {
            tr.terminal = NormalizationTrace::Terminal::interval;
            tr.interval_lo = min_index(cur.u) + tr.shift;
            tr.interval_hi = min_index(cur.v) + tr.shift;
            tr.residual.reset();
            return tr;
        }
        const int i1 = min_index(cur.u);
        if (i1 > 1) {
            const int off = i1 - 1;
            cur.u >>= off;
            cur.v >>= off;
            cur.n -= off;
            tr.shift += off;
            tr.steps.push_back({NormalizationStep::Type::restrict_ambient, off});
            continue;
        }
        if (min_index(cur.v) == 1) {
            // every generator is divisible by x1; residual lives in the
            // variables from 1+t on
            tr.factored_vars.push_back(1 + tr.shift);
            cur.u = (cur.u & ~Mask{1}) >> cur.t;
            cur.v = (cur.v & ~Mask{1}) >> cur.t;
            cur.n -= cur.t;
            cur.d -= 1;
            tr.shift += cur.t;
            tr.steps.push_back({NormalizationStep::Type::strip_leading, cur.t});
            continue;
        }
        break;
    }

    cur.kind = is_initial(cur) ? Kind::initial : (is_final(cur) ? Kind::final : Kind::arbitrary);
    validate_spec(cur);
    tr.residual = cur;
    return tr;
}

}  // namespace tspread
