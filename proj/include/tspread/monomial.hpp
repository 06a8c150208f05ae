#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tspread {

/// A squarefree monomial (or an index set) over an ambient [1, n],
/// stored as a bitmask: bit i-1 set  <=>  x_i divides the monomial.
/// The empty mask is the monomial 1. Ambient is carried by context.
using Mask = std::uint32_t;

constexpr int kMaxVars = 32;

inline int degree(Mask m) { return std::popcount(m); }

/// Smallest index in the support; 0 for the monomial 1.
inline int min_index(Mask m) { return m ? std::countr_zero(m) + 1 : 0; }

/// Largest index in the support; 0 for the monomial 1.
inline int max_index(Mask m) { return m ? kMaxVars - std::countl_zero(m) : 0; }

inline bool contains(Mask m, int i) { return (m >> (i - 1)) & 1u; }

inline Mask with_index(Mask m, int i) { return m | (Mask{1} << (i - 1)); }
inline Mask without_index(Mask m, int i) { return m & ~(Mask{1} << (i - 1)); }

/// Mask of the interval [lo, hi]; empty when lo > hi.
inline Mask interval_mask(int lo, int hi) {
    if (lo > hi) return 0;
    Mask all = hi >= 32 ? ~Mask{0} : ((Mask{1} << hi) - 1);
    return all & ~((Mask{1} << (lo - 1)) - 1);
}

inline Mask full_mask(int n) { return interval_mask(1, n); }

inline bool divides(Mask a, Mask b) { return (a & ~b) == 0; }

std::vector<int> indices_of(Mask m);
Mask mask_of(const std::vector<int>& indices, int n);

/// "x1*x3*x5", or "1" for the empty support.
std::string to_text(Mask m);

/// i -> n+1-i on every support index.
Mask reflect(Mask m, int n);

/// Consecutive support gaps all >= t. Degree <= 1 is vacuously t-spread.
bool is_t_spread(Mask m, int t);

/// Squarefree lex: first differing index decides, smaller index wins.
/// Requires equal degree (throws otherwise).
/// Returns +1 when a > b, 0 when equal, -1 when a < b.
int slex_compare(Mask a, Mask b);

inline bool slex_greater(Mask a, Mask b) { return slex_compare(a, b) > 0; }
inline bool slex_geq(Mask a, Mask b) { return slex_compare(a, b) >= 0; }

/// Full lexicographic order on equal-degree monomials that may have
/// repeated indices (sorted index multisets).
int lex_compare_multiset(const std::vector<int>& a, const std::vector<int>& b);

/// binom(a, b); 0 when a < b or b < 0 or a < 0.
long long binom(long long a, long long b);

/// |M_{n,d,t}| = binom(n-(t-1)(d-1), d), zero when infeasible.
long long count_M(int n, int d, int t);

/// All t-spread monomials of degree d in [1, n], strictly slex-descending.
/// Empty when n < 1+(d-1)t.
std::vector<Mask> enumerate_M(int n, int d, int t);

Mask max_M(int n, int d, int t);  // x1 x_{1+t} ... x_{1+(d-1)t}
Mask min_M(int n, int d, int t);  // x_{n-(d-1)t} ... x_n

/// Union of [l_r, l_r+(t-1)] over the support. Requires max(m) <= n+1-t.
Mask supp_t(Mask m, int t, int n);

/// Union of [l_r-(t-1), l_r] over the support. Requires min(m) >= t.
Mask cosupp_t(Mask m, int t);

}  // namespace tspread
