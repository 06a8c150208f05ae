#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tspread/classifier.hpp"
#include "tspread/lexsegment.hpp"

namespace tspread {

/// Which endpoint families a sweep walks. "completely" restricts arbitrary
/// pairs to those passing the completeness test.
enum class SweepKind { initial, final, arbitrary, completely };

SweepKind sweep_kind_from_name(const std::string& s);
std::string sweep_kind_name(SweepKind k);

struct SweepConfig {
    int n_min = 1, n_max = 8;
    int d_min = 2, d_max = 3;
    int t_min = 1, t_max = 2;
    std::set<SweepKind> kinds = {SweepKind::initial, SweepKind::final, SweepKind::completely};
    bool with_oracle = true;
    bool check_decomposition = true;
    bool check_betti = true;
    bool check_cm = true;
    int jobs = 2;
    std::string out_path;  // JSON-lines report; empty = no file
};

/// Per-spec verification outcome. A check that did not apply stays at
/// "skipped"; "mismatch" anywhere makes the whole sweep fail.
struct SpecReport {
    LexsegmentSpec spec;
    SweepKind family = SweepKind::arbitrary;
    std::string route;  // decomposition route taken

    enum class Check { skipped, match, mismatch };
    Check decomp = Check::skipped;
    Check betti = Check::match;   // set to skipped when not applicable
    Check cm = Check::skipped;

    bool classify_cm = false, oracle_cm = false;
    std::string classify_branch;
    int dim_oracle = -1;
    bool conjecture_holds = true;  // dim(S/I) >= (d-1)t
    bool completely = false;
    std::string detail;  // human-readable mismatch dump
};

struct SweepSummary {
    long long total = 0;
    long long decomp_checked = 0, decomp_mismatch = 0;
    long long betti_checked = 0, betti_mismatch = 0;
    long long cm_checked = 0, cm_mismatch = 0;
    long long conjecture_checked = 0, conjecture_violations = 0;
    std::vector<SpecReport> mismatches;        // full reports for failures
    std::vector<SpecReport> conjecture_flags;  // bound violations (reported, not failed)

    bool clean() const { return decomp_mismatch + betti_mismatch + cm_mismatch == 0; }
};

/// Enumerates every spec the config selects, in a deterministic order.
std::vector<std::pair<LexsegmentSpec, SweepKind>> enumerate_sweep(const SweepConfig& cfg);

/// Runs one spec against the oracle set chosen by the config.
SpecReport check_spec(const LexsegmentSpec& spec, SweepKind family, const SweepConfig& cfg);

/// Full sweep with a bounded worker pool; emitter (when set) receives one
/// JSON line per spec in enumeration order.
SweepSummary run_sweep(const SweepConfig& cfg,
                       const std::function<void(const std::string&)>& emit = nullptr);

std::string report_to_json_line(const SpecReport& r);

}  // namespace tspread
