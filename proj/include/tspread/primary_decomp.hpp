#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tspread/lexsegment.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

enum class PrimeTag {
    fp,          // the [j_p]-type supports of the initial decomposition
    fam_f,       // complements of t-spread supports (initial family)
    fam_g,       // complements of cosupports-with-1 (final family)
    fam_h,       // complements of plain cosupports (final family)
    fam_ftilde,  // surviving members of the initial family in the mixed case
    veronese,    // Veronese closed form
    oracle,      // brute-force facet complement
    principal,   // singleton factors of a principal ideal
    interval,    // a single consecutive-variables prime
    factor       // (x_a) split off during normalization
};

std::string tag_name(PrimeTag t);

struct TaggedPrime {
    Mask support = 0;
    PrimeTag tag = PrimeTag::oracle;
};

/// Irredundant set of monomial primes, canonically ordered by
/// (height, then support sequence).
struct PrimeDecomposition {
    int n = 0;
    std::vector<TaggedPrime> primes;

    std::vector<Mask> supports() const;
};

/// Sorts into canonical order and throws std::logic_error if one support
/// contains another (the closed forms promise irredundancy).
void finalize_decomposition(PrimeDecomposition& dec, const char* who);

/// Membership in the intersection: every prime meets the support.
bool decomposition_contains(const PrimeDecomposition& dec, Mask monomial);

PrimeDecomposition decompose_veronese(int n, int d, int t);

/// Initial segment ending at v; needs d >= 2 and min(v) >= 2.
PrimeDecomposition decompose_initial(Mask v, int n, int d, int t);

/// Final segment starting at u; needs d >= 2, min(u) = 1 and u != max(M).
PrimeDecomposition decompose_final(Mask u, int n, int d, int t);

struct CompletelyDetail {
    PrimeDecomposition dec;
    std::vector<int> kept_fp;          // 1-based p with F_p surviving
    std::vector<Mask> ftilde;          // surviving F supports
};

/// Mixed case; needs a completely segment with min(u)=1, min(v)>=2, d>=2,
/// not the Veronese. Throws std::invalid_argument for non-completely input.
CompletelyDetail decompose_completely(Mask u, Mask v, int n, int d, int t);

enum class DecompRoute { principal, interval, veronese, initial, final, completely, oracle_fallback };

std::string route_name(DecompRoute r);

struct DecompositionResult {
    PrimeDecomposition dec;  // original variable labels
    DecompRoute route = DecompRoute::oracle_fallback;
    NormalizationTrace trace;
    std::optional<CompletelyDetail> completely_detail;  // residual labels
};

/// Normalizes, dispatches to the closed forms, and replays the trace so the
/// answer lives in the original labels. Non-completely residuals fall back
/// to the facet oracle when allow_oracle is set (and the ambient fits), and
/// are rejected otherwise.
DecompositionResult decompose_spec(const LexsegmentSpec& spec, bool allow_oracle);

}  // namespace tspread
