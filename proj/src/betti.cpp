#include "tspread/betti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tspread/lexsegment.hpp"

namespace tspread {

int BettiTable::pd() const {
    int p = -1;
    for (const auto& [k, v] : entries)
        if (v) p = std::max(p, k.first);
    return p;
}

long long BettiTable::total(int i) const {
    long long s = 0;
    for (const auto& [k, v] : entries)
        if (k.first == i) s += v;
    return s;
}

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> out(static_cast<std::size_t>(std::max(pd() + 1, 0)), 0);
    for (const auto& [k, v] : entries) out[static_cast<std::size_t>(k.first)] += v;
    return out;
}

std::string betti_to_text(const BettiTable& b) {
    if (b.entries.empty()) return "(zero table)\n";
    int imax = 0, jlo = 1 << 30, jhi = 0;
    for (const auto& [k, v] : b.entries) {
        (void)v;
        imax = std::max(imax, k.first);
        jlo = std::min(jlo, k.second - k.first);
        jhi = std::max(jhi, k.second - k.first);
    }
    std::ostringstream os;
    os << "       ";
    for (int i = 0; i <= imax; ++i) os << i << (i < 10 ? "      " : "     ");
    os << "\n";
    for (int r = jlo; r <= jhi; ++r) {
        os << r << (r < 10 ? ":  " : ": ");
        for (int i = 0; i <= imax; ++i) {
            long long val = b.at(i, i + r);
            std::string cell = val ? std::to_string(val) : ".";
            os << cell << std::string(cell.size() < 7 ? 7 - cell.size() : 1, ' ');
        }
        os << "\n";
    }
    return os.str();
}

namespace {

bool exchange_holds(const MonomialIdeal& I, int t, bool reversed) {
    for (Mask g : I.gens) {
        for (int j : indices_of(g)) {
            const int lo = reversed ? j + 1 : 1;
            const int hi = reversed ? I.n : j - 1;
            for (int i = lo; i <= hi; ++i) {
                if (contains(g, i)) continue;
                Mask swapped = with_index(without_index(g, j), i);
                if (!is_t_spread(swapped, t)) continue;
                if (!ideal_contains(I, swapped)) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_t_spread_strongly_stable(const MonomialIdeal& I, int t) {
    return exchange_holds(I, t, false);
}

bool is_reverse_strongly_stable(const MonomialIdeal& I, int t) {
    return exchange_holds(I, t, true);
}

BettiTable betti_strongly_stable(const MonomialIdeal& I, int t) {
    if (!is_t_spread_strongly_stable(I, t))
        throw std::invalid_argument("betti_strongly_stable: exchange property fails");
    BettiTable b;
    for (Mask g : I.gens) {
        const int j = degree(g);
        const long long top = max_index(g) - static_cast<long long>(t) * (j - 1) - 1;
        for (int i = 0; i <= top; ++i) b.add(i, i + j, binom(top, i));
    }
    return b;
}

BettiTable betti_final(const MonomialIdeal& I, int t) {
    if (!is_reverse_strongly_stable(I, t))
        throw std::invalid_argument("betti_final: reversed exchange property fails");
    BettiTable b;
    for (Mask g : I.gens) {
        const int j = degree(g);
        const long long top = I.n - min_index(g) - static_cast<long long>(t) * (j - 1);
        for (int i = 0; i <= top; ++i) b.add(i, i + j, binom(top, i));
    }
    return b;
}

std::vector<long long> betti_completely_linear(const LexsegmentSpec& s) {
    std::string why;
    if (linear_resolution_completely(s, &why) != LinearResolution::yes)
        throw std::invalid_argument("betti_completely_linear: " + why);
    const long long td = static_cast<long long>(s.d - 1) * s.t;
    std::vector<long long> plus, minus;
    auto bump = [](std::vector<long long>& acc, long long top) {
        if (top + 1 > static_cast<long long>(acc.size())) acc.resize(top + 1, 0);
        for (long long i = 0; i <= top; ++i) acc[i] += binom(top, i);
    };
    for (Mask w : enumerate_M(s.n, s.d, s.t)) {
        if (slex_greater(w, s.u)) continue;  // final segment of u
        bump(plus, s.n - min_index(w) - td);
    }
    bool below = false;
    for (Mask w : enumerate_M(s.n, s.d, s.t)) {
        if (!below) {
            if (w == s.v) below = true;  // final segment of v, v itself excluded
            continue;
        }
        bump(minus, max_index(w) - td - 1);
    }
    std::vector<long long> out(std::max(plus.size(), minus.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        long long a = i < plus.size() ? plus[i] : 0;
        long long b = i < minus.size() ? minus[i] : 0;
        out[i] = a - b;
        if (out[i] < 0)
            throw std::logic_error("betti_completely_linear produced a negative value");
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

InvariantReport invariants_initial(const LexsegmentSpec& s) {
    validate_spec(s);
    if (!is_initial(s)) throw std::invalid_argument("invariants_initial: u != max(M)");
    if (s.d < 2 || min_index(s.v) < 2)
        throw std::invalid_argument("invariants_initial: needs d >= 2 and min(v) >= 2");
    const int j1 = min_index(s.v);
    InvariantReport r;
    r.pd_quotient = s.n - (s.d - 1) * s.t;
    r.pd_ideal = r.pd_quotient - 1;
    r.depth = (s.d - 1) * s.t;
    r.dim = s.n - j1;
    r.height = j1;
    r.is_cm = (r.dim == r.depth);
    r.source = {{"pd", "stable-resolution-formula"},
                {"depth", "auslander-buchsbaum"},
                {"dim", "facet-minimum"},
                {"height", "facet-minimum"},
                {"is_cm", "dim-equals-depth"}};
    return r;
}

InvariantReport invariants_final(const LexsegmentSpec& s) {
    validate_spec(s);
    if (!is_final(s)) throw std::invalid_argument("invariants_final: v != min(M)");
    if (s.d < 2 || min_index(s.u) != 1)
        throw std::invalid_argument("invariants_final: needs d >= 2 and min(u) = 1");
    InvariantReport r;
    r.pd_quotient = s.n - (s.d - 1) * s.t;
    r.pd_ideal = r.pd_quotient - 1;
    r.depth = (s.d - 1) * s.t;
    const bool veronese = is_initial(s);
    r.dim = veronese ? (s.d - 1) * s.t : 1 + (s.d - 1) * s.t;
    r.height = s.n - r.dim;
    r.is_cm = veronese;
    r.source = {{"pd", "reverse-stable-resolution-formula"},
                {"depth", "auslander-buchsbaum"},
                {"dim", "facet-cardinalities"},
                {"height", "facet-cardinalities"},
                {"is_cm", "veronese-equivalence"}};
    return r;
}

SplittingReport betti_splitting_check(const MonomialIdeal& I, const MonomialIdeal& P,
                                      const MonomialIdeal& Q, const BettiTable& bI,
                                      const BettiTable& bP, const BettiTable& bQ,
                                      const BettiTable& bPQ) {
    SplittingReport rep;
    std::vector<Mask> merged = P.gens;
    merged.insert(merged.end(), Q.gens.begin(), Q.gens.end());
    std::sort(merged.begin(), merged.end());
    std::vector<Mask> igens = I.gens;
    std::sort(igens.begin(), igens.end());
    rep.partition_ok =
        merged == igens && merged.size() == P.gens.size() + Q.gens.size();
    if (!rep.partition_ok) {
        rep.detail = "generator sets do not split I";
        return rep;
    }

    rep.additivity = true;
    std::ostringstream bad;
    auto keys = bI.entries;
    for (const auto& [k, v] : bP.entries) (void)v, keys[k];
    for (const auto& [k, v] : bQ.entries) (void)v, keys[k];
    for (const auto& [k, v] : bPQ.entries) (void)v, keys[{k.first + 1, k.second}];
    for (const auto& [k, v] : keys) {
        (void)v;
        const auto [i, j] = k;
        long long want = bP.at(i, j) + bQ.at(i, j) + bPQ.at(i - 1, j);
        if (bI.at(i, j) != want) {
            rep.additivity = false;
            bad << " (" << i << "," << j << "): " << bI.at(i, j) << " vs " << want << ";";
        }
    }
    const int lhs = bI.pd();
    const int rhs = std::max({bP.pd(), bQ.pd(), bPQ.pd() + 1});
    rep.pd_identity = (lhs == rhs);
    if (!rep.additivity) rep.detail = "additivity fails at" + bad.str();
    else if (!rep.pd_identity) rep.detail = "pd identity fails";
    return rep;
}

}  // namespace tspread
