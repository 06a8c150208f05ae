#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tspread/ideal.hpp"

namespace tspread {

/// Graded Betti numbers of an ideal: (homological index i, internal degree j)
/// -> beta_{i,j}(I). Finitely supported; zero entries are absent.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    void add(int i, int j, long long v) {
        if (v) entries[{i, j}] += v;
    }
    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    /// pd(I) = max homological index with a nonzero entry; -1 for the
    /// zero table.
    int pd() const;
    long long total(int i) const;
    std::vector<long long> totals() const;
    bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

/// Render in the style of a Macaulay2 betti grid.
std::string betti_to_text(const BettiTable& b);

/// Exchange property of t-spread strong stability, checked on generators.
bool is_t_spread_strongly_stable(const MonomialIdeal& I, int t);
/// Same with the variable order reversed.
bool is_reverse_strongly_stable(const MonomialIdeal& I, int t);

/// beta_{i,i+j}(I) = sum_{u in G(I)_j} binom(max(u) - t(j-1) - 1, i).
/// Requires the strong-stability guard to pass.
BettiTable betti_strongly_stable(const MonomialIdeal& I, int t);

/// beta_{i,i+j}(I) = sum_{u in G(I)_j} binom(n - min(u) - t(j-1), i).
/// Requires reverse strong stability.
BettiTable betti_final(const MonomialIdeal& I, int t);

struct LexsegmentSpec;

/// Total Betti numbers of a completely segment with linear resolution:
/// difference of the two one-sided binomial sums. Throws when the
/// hypotheses fail or a value would be negative.
std::vector<long long> betti_completely_linear(const LexsegmentSpec& s);

/// pd/depth/dim/height and the CM verdict with a per-field provenance tag.
struct InvariantReport {
    int pd_ideal = 0;     // pd(I)
    int pd_quotient = 0;  // pd(S/I) = pd(I) + 1
    int depth = 0;        // depth(S/I)
    int dim = 0;          // dim(S/I)
    int height = 0;
    bool is_cm = false;
    std::map<std::string, std::string> source;
};

/// Closed-form invariants of an initial segment (needs min(v) >= 2, d >= 2).
InvariantReport invariants_initial(const LexsegmentSpec& s);

/// Closed-form invariants of a final segment (needs min(u) = 1, d >= 2).
InvariantReport invariants_final(const LexsegmentSpec& s);

/// Betti-splitting verdict for I = P + Q computed from the four tables.
struct SplittingReport {
    bool partition_ok = false;   // G(I) = G(P) disjoint-union G(Q)
    bool additivity = false;     // beta_{i,j}(I) = beta(P) + beta(Q) + beta_{i-1,j}(P cap Q)
    bool pd_identity = false;    // pd(I) = max{pd P, pd Q, pd(P cap Q) + 1}
    std::string detail;
};

SplittingReport betti_splitting_check(const MonomialIdeal& I, const MonomialIdeal& P,
                                      const MonomialIdeal& Q, const BettiTable& bI,
                                      const BettiTable& bP, const BettiTable& bQ,
                                      const BettiTable& bPQ);

}  // namespace tspread
