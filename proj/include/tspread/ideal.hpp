#pragma once

#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

/// A squarefree monomial ideal given by its minimal generating set.
/// Generators are kept slex-descending within each degree block and
/// form an antichain under divisibility.
struct MonomialIdeal {
    int n = 0;
    std::vector<Mask> gens;

    bool is_zero() const { return gens.empty(); }
};

/// Drops non-minimal elements and duplicates; orders the survivors by
/// (degree, slex-descending).
std::vector<Mask> minimalize(std::vector<Mask> monomials);

MonomialIdeal make_ideal(int n, std::vector<Mask> gens);

/// Membership: some generator divides m.
bool ideal_contains(const MonomialIdeal& I, Mask m);

/// Minimal generators of A cap B via pairwise lcm + minimalization.
MonomialIdeal intersect_ideals(const MonomialIdeal& A, const MonomialIdeal& B);

/// gcd of all generators (intersection of supports). Rejects the zero ideal.
Mask gcd_of_ideal(const MonomialIdeal& I);

/// Generators of degree j.
std::vector<Mask> gens_of_degree(const MonomialIdeal& I, int j);

}  // namespace tspread
