#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

enum class Kind { initial, final, arbitrary };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& s);

/// (n, d, t, u, v, kind) describing a t-spread lexsegment ideal before
/// materialization. u >= v in slex; initial forces u = max(M_{n,d,t}),
/// final forces v = min(M_{n,d,t}).
struct LexsegmentSpec {
    int n = 0, d = 0, t = 1;
    Mask u = 0, v = 0;
    Kind kind = Kind::arbitrary;
};

/// Throws std::invalid_argument on any violated invariant.
void validate_spec(const LexsegmentSpec& s);

LexsegmentSpec make_spec(int n, int d, int t, Mask u, Mask v, Kind kind);

bool is_initial(const LexsegmentSpec& s);   // u = max(M)
bool is_final(const LexsegmentSpec& s);     // v = min(M)
bool is_veronese(const LexsegmentSpec& s);  // both

/// Generators: all w in M_{n,d,t} with u >= w >= v, slex-descending.
MonomialIdeal build_segment(const LexsegmentSpec& s);

/// Whether the segment ideal equals the intersection of its initial and
/// final extensions. Uses the exchange criterion when min(v) >= 2 and the
/// direct intersection comparison otherwise; initial/final are always true.
bool is_completely(const LexsegmentSpec& s);

/// Direct route: build J cap T and compare generator sets with the segment.
bool is_completely_by_intersection(const LexsegmentSpec& s);

enum class LinearResolution { yes, no, inapplicable };

/// Linear-resolution criterion for completely segments with
/// min(v) > min(u) = 1; anything else is reported inapplicable.
/// reason receives a short explanation for no/inapplicable.
LinearResolution linear_resolution_completely(const LexsegmentSpec& s, std::string* reason = nullptr);

/// One reduction step applied by normalize().
struct NormalizationStep {
    enum class Type {
        restrict_ambient,  // drop unused leading variables, shift indices down
        strip_leading      // factor out x1 shared by all generators
    } type;
    int offset = 0;  // index shift introduced by this step
};

/// Result of the reduction cascade. Terminal forms keep their data in the
/// ORIGINAL variable labels; the residual spec lives in its own (shifted)
/// ambient, with residual index i meaning original index i + shift.
struct NormalizationTrace {
    LexsegmentSpec original;
    std::vector<NormalizationStep> steps;

    enum class Terminal { none, principal, interval } terminal = Terminal::none;
    Mask principal_support = 0;          // original labels
    int interval_lo = 0, interval_hi = 0;  // original labels

    std::optional<LexsegmentSpec> residual;
    int shift = 0;                    // total index shift original <- residual
    std::vector<int> factored_vars;   // original indices of stripped variables
};

/// Applies, in order and repeatedly: principal terminal (u = v), degree-one
/// terminal, ambient restriction (min(u) > 1), leading-variable strip
/// (min(v) = 1). The residual, when present, satisfies min(u)=1, min(v)>=2,
/// d >= 2, u > v.
NormalizationTrace normalize(const LexsegmentSpec& s);

}  // namespace tspread
