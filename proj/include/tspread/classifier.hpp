#pragma once

#include <map>
#include <string>

#include "tspread/ideal.hpp"
#include "tspread/lexsegment.hpp"

namespace tspread {

enum class CmBranch {
    principal,
    interval,
    veronese,
    initial_non_veronese,
    final_non_veronese,
    split_height_two,      // j1 = 2, small ambient window: gcd + splitting test
    complete_intersection, // j1 = 2, wide ambient: two disjoint generators
    ladder_corner,         // j1 > 2, v at the bottom rung
    ladder_spread_one,     // j1 > 2, t = 1 rungs
    ladder,                // j1 > 2, t > 1 rungs
    small_ambient,         // n = 2+(d-1)t forces a final segment
    common_factor          // all generators share x1
};

std::string branch_name(CmBranch b);

struct CmVerdict {
    bool is_cm = false;
    CmBranch branch = CmBranch::principal;
    std::map<std::string, std::string> witness;
    NormalizationTrace trace;
};

/// Decides Cohen-Macaulayness of any t-spread lexsegment spec via the
/// closed-form case analysis; every spec lands in exactly one branch.
CmVerdict classify(const LexsegmentSpec& spec);

/// Rung monomials of the j1 > 2 classification, in residual labels.
/// ladder_u(p): x1 x_{n-(d-2)t-1} ... with p indices bumped from the top;
/// ladder_v(l): the degree-d analogue without the x1 factor.
Mask ladder_u(int n, int d, int t, int p);
Mask ladder_v(int n, int d, int t, int l);

}  // namespace tspread
