#include "tspread/invariants.hpp"

#include <stdexcept>

#include "tspread/oracle.hpp"
#include "tspread/primary_decomp.hpp"

namespace tspread {

InvariantReport invariant_report_for(const LexsegmentSpec& spec) {
    const NormalizationTrace tr = normalize(spec);
    const int n = spec.n;

    if (tr.terminal == NormalizationTrace::Terminal::principal) {
        InvariantReport r;
        r.pd_ideal = 0;
        r.pd_quotient = 1;
        r.depth = n - 1;
        r.dim = n - 1;
        r.height = 1;
        r.is_cm = true;
        r.source = {{"all", "principal-hypersurface"}};
        return r;
    }

    // pd(S/I) and the residual dim/height in residual labels
    InvariantReport r;
    if (tr.terminal == NormalizationTrace::Terminal::interval) {
        const int h = tr.interval_hi - tr.interval_lo + 1;
        r.pd_quotient = h;
        r.dim = (n - tr.shift) - h;  // residual-label dim of the interval prime
        r.height = h;
        r.source = {{"pd", "variable-interval-prime"}, {"dim", "variable-interval-prime"}};
    } else {
        const LexsegmentSpec res = *tr.residual;
        if (is_initial(res)) {
            InvariantReport base = invariants_initial(res);
            r.pd_quotient = base.pd_quotient;
            r.dim = base.dim;
            r.height = base.height;
            r.source = base.source;
        } else if (is_final(res)) {
            InvariantReport base = invariants_final(res);
            r.pd_quotient = base.pd_quotient;
            r.dim = base.dim;
            r.height = base.height;
            r.source = base.source;
        } else if (is_completely(res) &&
                   linear_resolution_completely(res) == LinearResolution::yes) {
            const std::vector<long long> betti = betti_completely_linear(res);
            int pd = 0;
            for (std::size_t i = 0; i < betti.size(); ++i)
                if (betti[i]) pd = static_cast<int>(i);
            r.pd_quotient = pd + 1;
            DecompositionResult dec = decompose_spec(res, /*allow_oracle=*/false);
            int minh = res.n;
            for (const auto& p : dec.dec.primes) minh = std::min(minh, degree(p.support));
            r.dim = res.n - minh;
            r.height = minh;
            r.source = {{"pd", "linear-total-formula"}, {"dim", "closed-form-decomposition"}};
        } else if (res.n <= hochster_cap()) {
            const MonomialIdeal I = build_segment(res);
            r.pd_quotient = hochster_betti(I).pd() + 1;
            r.dim = krull_dim_oracle(I);
            r.height = res.n - r.dim;
            r.source = {{"pd", "oracle"}, {"dim", "oracle"}};
        } else {
            throw std::out_of_range(
                "no closed form for this shape and the ambient exceeds the oracle cap");
        }
    }

    if (!tr.factored_vars.empty()) {
        // I = (shared monomial factor) * I'': the factor contributes the
        // height-one prime, pd is untouched
        r.dim = n - 1;
        r.height = 1;
        r.source["dim"] = "shared-factor-prime";
    } else {
        r.dim += tr.shift;  // dropped leading variables are free
    }
    r.pd_ideal = r.pd_quotient - 1;
    r.depth = n - r.pd_quotient;
    r.is_cm = (r.dim == r.depth);
    r.source["depth"] = "auslander-buchsbaum";
    return r;
}

}  // namespace tspread
