#include "tspread/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace tspread {

std::vector<Mask> minimalize(std::vector<Mask> monomials) {
    std::sort(monomials.begin(), monomials.end(), [](Mask a, Mask b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        if (a == b) return false;
        return slex_greater(a, b);
    });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    std::vector<Mask> out;
    for (Mask m : monomials) {
        bool dominated = false;
        for (Mask g : out) {
            if (divides(g, m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(m);
    }
    // the degree-major scan above can reorder equal-degree survivors; resort
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        if (a == b) return false;
        return slex_greater(a, b);
    });
    return out;
}

MonomialIdeal make_ideal(int n, std::vector<Mask> gens) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("ambient out of range");
    for (Mask g : gens)
        if (g && max_index(g) > n) throw std::invalid_argument("generator exceeds ambient");
    return MonomialIdeal{n, minimalize(std::move(gens))};
}

bool ideal_contains(const MonomialIdeal& I, Mask m) {
    for (Mask g : I.gens)
        if (divides(g, m)) return true;
    return false;
}

MonomialIdeal intersect_ideals(const MonomialIdeal& A, const MonomialIdeal& B) {
    if (A.n != B.n) throw std::invalid_argument("intersect_ideals: ambient mismatch");
    std::vector<Mask> lcms;
    lcms.reserve(A.gens.size() * B.gens.size());
    for (Mask a : A.gens)
        for (Mask b : B.gens) lcms.push_back(a | b);
    return MonomialIdeal{A.n, minimalize(std::move(lcms))};
}

Mask gcd_of_ideal(const MonomialIdeal& I) {
    if (I.is_zero()) throw std::invalid_argument("gcd of the zero ideal");
    Mask g = ~Mask{0};
    for (Mask m : I.gens) g &= m;
    return g & full_mask(I.n);
}

std::vector<Mask> gens_of_degree(const MonomialIdeal& I, int j) {
    std::vector<Mask> out;
    for (Mask g : I.gens)
        if (degree(g) == j) out.push_back(g);
    return out;
}

}  // namespace tspread
