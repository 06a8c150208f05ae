#pragma once

#include <vector>

#include "tspread/betti.hpp"
#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// Facet description of a simplicial complex on [1, n]. Facets form an
/// antichain under inclusion. Vertices missing from every facet are the
/// excluded ones (their variables generate the ideal).
struct SimplicialComplex {
    int n = 0;
    std::vector<Mask> facets;

    Mask excluded_vertices() const {
        Mask used = 0;
        for (Mask f : facets) used |= f;
        return full_mask(n) & ~used;
    }
};

/// Hard cap for the facet scan; TSPREAD_ORACLE_CAP lowers/raises it but the
/// value is always clamped to <= 20.
int oracle_cap();
int hochster_cap();  // min(oracle_cap, 14)

/// Faces = complements of the ideal; facets by full 2^n scan.
/// Requires a proper ideal and n <= oracle_cap().
SimplicialComplex stanley_reisner(const MonomialIdeal& I);

/// Complements of facets: the ground-truth minimal primes.
std::vector<Mask> minimal_primes_bruteforce(const MonomialIdeal& I);

/// dim(S/I) = max facet cardinality.
int krull_dim_oracle(const MonomialIdeal& I);

/// Reduced rational Betti numbers; betti[k] = dim H~_{k-1}, k = 0..dim+1,
/// so index 0 holds H~_{-1}.
struct HomologyProfile {
    std::vector<long long> betti;

    long long reduced(int dim) const {
        int k = dim + 1;
        if (k < 0 || k >= static_cast<int>(betti.size())) return 0;
        return betti[k];
    }
};

/// Exact ranks of boundary maps over the rationals (fraction-free integer
/// elimination, arbitrary precision fallback). Memoized on the facet set.
HomologyProfile reduced_homology(const SimplicialComplex& c);

/// Full graded Betti table of the ideal I over the rationals via the
/// subset-restriction homology sums. Self-checks beta_{0,j} = |G(I)_j|.
BettiTable hochster_betti(const MonomialIdeal& I);

struct CmOracleResult {
    bool is_cm = false;
    bool is_pure = false;
};

/// Ground-truth Cohen-Macaulay verdict over the rationals: every face link
/// has vanishing reduced homology below its dimension.
CmOracleResult reisner_cm_check(const MonomialIdeal& I);

/// Depth read from the oracle Betti table via depth = n - 1 - pd(I).
int depth_oracle(const MonomialIdeal& I);

/// Clears the global homology/CM memo tables (mostly for benchmarks).
void oracle_clear_cache();

}  // namespace tspread
