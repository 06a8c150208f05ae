#include "tspread/primary_decomp.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "tspread/oracle.hpp"

namespace tspread {

std::string tag_name(PrimeTag t) {
    switch (t) {
        case PrimeTag::fp: return "Fp";
        case PrimeTag::fam_f: return "F";
        case PrimeTag::fam_g: return "G";
        case PrimeTag::fam_h: return "H";
        case PrimeTag::fam_ftilde: return "Ftilde";
        case PrimeTag::veronese: return "veronese-D";
        case PrimeTag::oracle: return "oracle";
        case PrimeTag::principal: return "principal";
        case PrimeTag::interval: return "interval";
        case PrimeTag::factor: return "factor";
    }
    return "oracle";
}

std::vector<Mask> PrimeDecomposition::supports() const {
    std::vector<Mask> out;
    out.reserve(primes.size());
    for (const auto& p : primes) out.push_back(p.support);
    return out;
}

void finalize_decomposition(PrimeDecomposition& dec, const char* who) {
    std::sort(dec.primes.begin(), dec.primes.end(), [](const TaggedPrime& a, const TaggedPrime& b) {
        int ha = degree(a.support), hb = degree(b.support);
        if (ha != hb) return ha < hb;
        if (a.support == b.support) return false;
        return slex_greater(a.support, b.support);
    });
    for (std::size_t i = 0; i < dec.primes.size(); ++i)
        for (std::size_t j = 0; j < dec.primes.size(); ++j)
            if (i != j && divides(dec.primes[i].support, dec.primes[j].support))
                throw std::logic_error(std::string(who) +
                                       ": produced a redundant prime, this is a bug");
}

bool decomposition_contains(const PrimeDecomposition& dec, Mask monomial) {
    for (const auto& p : dec.primes)
        if ((p.support & monomial) == 0) return false;
    return true;
}

PrimeDecomposition decompose_veronese(int n, int d, int t) {
    if (n < 1 + (d - 1) * t || d < 1) throw std::invalid_argument("empty Veronese");
    PrimeDecomposition dec{n, {}};
    const Mask full = full_mask(n);
    if (d == 1) {
        dec.primes.push_back({full, PrimeTag::veronese});
    } else {
        for (Mask w : enumerate_M(n + 1 - t, d - 1, t))
            dec.primes.push_back({static_cast<Mask>(full & ~supp_t(w, t, n)), PrimeTag::veronese});
    }
    finalize_decomposition(dec, "decompose_veronese");
    return dec;
}

PrimeDecomposition decompose_initial(Mask v, int n, int d, int t) {
    if (d < 2 || min_index(v) < 2)
        throw std::invalid_argument("decompose_initial: needs d >= 2 and min(v) >= 2");
    const std::vector<int> j = indices_of(v);
    PrimeDecomposition dec{n, {}};
    const Mask full = full_mask(n);

    Mask prefix = 0;
    for (int p = 1; p <= d; ++p) {
        // F_p = [j_p] minus the t-spread support of x_{j_1}...x_{j_{p-1}}
        Mask fp = interval_mask(1, j[static_cast<std::size_t>(p - 1)]) & ~supp_t(prefix, t, n);
        dec.primes.push_back({fp, PrimeTag::fp});
        prefix = with_index(prefix, j[static_cast<std::size_t>(p - 1)]);
    }
    const Mask v_head = without_index(v, max_index(v));
    for (Mask w : enumerate_M(n + 1 - t, d - 1, t)) {
        if (!slex_greater(w, v_head)) break;  // enumeration is descending
        dec.primes.push_back({static_cast<Mask>(full & ~supp_t(w, t, n)), PrimeTag::fam_f});
    }
    finalize_decomposition(dec, "decompose_initial");
    return dec;
}

namespace {

// union of [max(1, m_r-t+1), m_r] over the support
Mask truncated_cosupp(Mask m, int t) {
    Mask r = 0;
    for (int i : indices_of(m)) r |= interval_mask(std::max(1, i - t + 1), i);
    return r;
}

// slex-least t-spread degree-d subset of H: greedy top-down chain.
// Returns 0 when fewer than d indices can be extracted.
Mask least_extraction(Mask h, int t, int d) {
    Mask w = 0;
    int picked = 0;
    int ceil_idx = kMaxVars;  // next pick must be <= ceil_idx
    while (picked < d) {
        Mask avail = h & interval_mask(1, ceil_idx);
        if (!avail) return 0;
        const int i = max_index(avail);
        w = with_index(w, i);
        ceil_idx = i - t;
        if (ceil_idx < 1 && picked + 1 < d) return 0;
        ++picked;
    }
    return w;
}

}  // namespace

PrimeDecomposition decompose_final(Mask u, int n, int d, int t) {
    if (d < 2 || min_index(u) != 1)
        throw std::invalid_argument("decompose_final: needs d >= 2 and min(u) = 1");
    if (u == max_M(n, d, t))
        throw std::invalid_argument("decompose_final: Veronese input belongs elsewhere");
    PrimeDecomposition dec{n, {}};
    const Mask full = full_mask(n);
    const Mask u_tail = without_index(u, 1);
    for (Mask w : enumerate_M(n, d - 1, t)) {
        if (min_index(w) >= 1 + t && slex_greater(w, u_tail)) {
            // a face of the maximal cardinality 1+(d-1)t, hence a facet
            Mask g = with_index(cosupp_t(w, t), 1);
            dec.primes.push_back({static_cast<Mask>(full & ~g), PrimeTag::fam_g});
            continue;
        }
        // truncated-cosupport candidate; keep it when every extension
        // acquires a degree-d extraction inside the segment
        const Mask g = truncated_cosupp(w, t);
        bool maximal = true;
        for (int j = 1; j <= n && maximal; ++j) {
            if (contains(g, j)) continue;
            const Mask wmin = least_extraction(with_index(g, j), t, d);
            if (!wmin || slex_greater(wmin, u)) maximal = false;
        }
        if (maximal)
            dec.primes.push_back({static_cast<Mask>(full & ~g), PrimeTag::fam_h});
    }
    finalize_decomposition(dec, "decompose_final");
    return dec;
}

CompletelyDetail decompose_completely(Mask u, Mask v, int n, int d, int t) {
    if (d < 2 || min_index(u) != 1 || min_index(v) < 2)
        throw std::invalid_argument("decompose_completely: not in reduced position");
    LexsegmentSpec spec = make_spec(n, d, t, u, v, Kind::arbitrary);
    if (is_veronese(spec))
        throw std::invalid_argument("decompose_completely: Veronese input belongs elsewhere");
    if (!is_completely(spec))
        throw std::invalid_argument(
            "decompose_completely: segment is not completely; only the facet oracle applies");

    // the segment equals J cap T, so its complex is the union of the two
    // complexes: the minimal supports of both decompositions survive
    PrimeDecomposition from_initial = decompose_initial(v, n, d, t);
    PrimeDecomposition from_final = decompose_final(u, n, d, t);

    std::vector<TaggedPrime> pool;
    for (const auto& p : from_initial.primes) pool.push_back(p);
    for (const auto& p : from_final.primes) pool.push_back(p);

    CompletelyDetail out;
    out.dec.n = n;
    const Mask full = full_mask(n);
    std::unordered_set<Mask> seen;
    for (const auto& pr : pool) {
        bool minimal = true;
        for (const auto& q : pool)
            if (q.support != pr.support && divides(q.support, pr.support)) {
                minimal = false;
                break;
            }
        if (!minimal || !seen.insert(pr.support).second) continue;
        TaggedPrime kept = pr;
        if (kept.tag == PrimeTag::fam_f) kept.tag = PrimeTag::fam_ftilde;
        out.dec.primes.push_back(kept);
        if (kept.tag == PrimeTag::fam_ftilde) out.ftilde.push_back(full & ~kept.support);
    }

    // surviving [j_p]-indices, recovered from v's prefix supports
    const std::vector<int> jidx = indices_of(v);
    Mask prefix = 0;
    for (int p = 1; p <= d; ++p) {
        Mask fp = interval_mask(1, jidx[static_cast<std::size_t>(p - 1)]) & ~supp_t(prefix, t, n);
        for (const auto& pr : out.dec.primes)
            if (pr.support == fp && pr.tag == PrimeTag::fp) out.kept_fp.push_back(p);
        prefix = with_index(prefix, jidx[static_cast<std::size_t>(p - 1)]);
    }

    finalize_decomposition(out.dec, "decompose_completely");
    return out;
}

std::string route_name(DecompRoute r) {
    switch (r) {
        case DecompRoute::principal: return "principal";
        case DecompRoute::interval: return "interval";
        case DecompRoute::veronese: return "veronese";
        case DecompRoute::initial: return "initial";
        case DecompRoute::final: return "final";
        case DecompRoute::completely: return "completely";
        case DecompRoute::oracle_fallback: return "oracle";
    }
    return "oracle";
}

DecompositionResult decompose_spec(const LexsegmentSpec& spec, bool allow_oracle) {
    DecompositionResult res;
    res.trace = normalize(spec);
    const NormalizationTrace& tr = res.trace;

    if (tr.terminal == NormalizationTrace::Terminal::principal) {
        res.route = DecompRoute::principal;
        res.dec.n = spec.n;
        for (int i : indices_of(tr.principal_support))
            res.dec.primes.push_back({with_index(Mask{0}, i), PrimeTag::principal});
        finalize_decomposition(res.dec, "decompose_spec/principal");
        return res;
    }
    if (tr.terminal == NormalizationTrace::Terminal::interval) {
        res.route = DecompRoute::interval;
        res.dec.n = spec.n;
        PrimeDecomposition base{spec.n, {{interval_mask(tr.interval_lo, tr.interval_hi), PrimeTag::interval}}};
        res.dec = base;
        for (int a : tr.factored_vars)
            res.dec.primes.push_back({with_index(Mask{0}, a), PrimeTag::factor});
        finalize_decomposition(res.dec, "decompose_spec/interval");
        return res;
    }

    const LexsegmentSpec r = *tr.residual;
    PrimeDecomposition inner;
    if (is_veronese(r)) {
        res.route = DecompRoute::veronese;
        inner = decompose_veronese(r.n, r.d, r.t);
    } else if (is_initial(r)) {
        res.route = DecompRoute::initial;
        inner = decompose_initial(r.v, r.n, r.d, r.t);
    } else if (is_final(r)) {
        res.route = DecompRoute::final;
        inner = decompose_final(r.u, r.n, r.d, r.t);
    } else if (is_completely(r)) {
        res.route = DecompRoute::completely;
        CompletelyDetail det = decompose_completely(r.u, r.v, r.n, r.d, r.t);
        inner = det.dec;
        res.completely_detail = std::move(det);
    } else {
        if (!allow_oracle)
            throw std::invalid_argument(
                "no closed form for a non-completely segment; rerun with the oracle enabled");
        if (r.n > oracle_cap())
            throw std::out_of_range("non-completely segment beyond the oracle cap");
        res.route = DecompRoute::oracle_fallback;
        inner.n = r.n;
        for (Mask p : minimal_primes_bruteforce(build_segment(r)))
            inner.primes.push_back({p, PrimeTag::oracle});
    }

    res.dec.n = spec.n;
    for (const auto& p : inner.primes)
        res.dec.primes.push_back({static_cast<Mask>(p.support << tr.shift), p.tag});
    for (int a : tr.factored_vars)
        res.dec.primes.push_back({with_index(Mask{0}, a), PrimeTag::factor});
    finalize_decomposition(res.dec, "decompose_spec/replay");
    return res;
}

}  // namespace tspread
