#include "tspread/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tspread/json_io.hpp"
#include "tspread/oracle.hpp"
#include "tspread/primary_decomp.hpp"

namespace tspread {

SweepKind sweep_kind_from_name(const std::string& s) {
    if (s == "initial") return SweepKind::initial;
    if (s == "final") return SweepKind::final;
    if (s == "arbitrary") return SweepKind::arbitrary;
    if (s == "completely") return SweepKind::completely;
    throw std::invalid_argument("unknown sweep kind: " + s);
}

std::string sweep_kind_name(SweepKind k) {
    switch (k) {
        case SweepKind::initial: return "initial";
        case SweepKind::final: return "final";
        case SweepKind::arbitrary: return "arbitrary";
        case SweepKind::completely: return "completely";
    }
    return "arbitrary";
}

std::vector<std::pair<LexsegmentSpec, SweepKind>> enumerate_sweep(const SweepConfig& cfg) {
    std::vector<std::pair<LexsegmentSpec, SweepKind>> out;
    const bool want_arb = cfg.kinds.count(SweepKind::arbitrary) != 0;
    const bool want_comp = cfg.kinds.count(SweepKind::completely) != 0;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
            for (int t = cfg.t_min; t <= cfg.t_max; ++t) {
                if (n < 1 + (d - 1) * t || n > kMaxVars) continue;
                const std::vector<Mask> M = enumerate_M(n, d, t);
                if (cfg.kinds.count(SweepKind::initial)) {
                    for (Mask v : M)
                        out.push_back({make_spec(n, d, t, M.front(), v, Kind::initial),
                                       SweepKind::initial});
                }
                if (cfg.kinds.count(SweepKind::final)) {
                    for (Mask u : M)
                        out.push_back(
                            {make_spec(n, d, t, u, M.back(), Kind::final), SweepKind::final});
                }
                if (want_arb || want_comp) {
                    for (std::size_t a = 0; a < M.size(); ++a) {
                        for (std::size_t b = a; b < M.size(); ++b) {
                            LexsegmentSpec s =
                                make_spec(n, d, t, M[a], M[b], Kind::arbitrary);
                            if (want_arb) {
                                out.push_back({s, SweepKind::arbitrary});
                            } else if (is_completely(s)) {
                                out.push_back({s, SweepKind::completely});
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

namespace {

std::string masks_to_text(const std::vector<Mask>& ms) {
    std::string s;
    for (Mask m : ms) s += (s.empty() ? "" : " ") + to_text(m);
    return s;
}

}  // namespace

SpecReport check_spec(const LexsegmentSpec& spec, SweepKind family, const SweepConfig& cfg) {
    SpecReport rep;
    rep.spec = spec;
    rep.family = family;
    rep.completely = is_completely(spec);
    std::ostringstream detail;

    DecompositionResult dr = decompose_spec(spec, /*allow_oracle=*/true);
    rep.route = route_name(dr.route);

    const bool oracle_ok = cfg.with_oracle && spec.n <= oracle_cap();
    if (oracle_ok) {
        const MonomialIdeal I = build_segment(spec);

        if (cfg.check_decomposition && dr.route != DecompRoute::oracle_fallback) {
            std::vector<Mask> got = dr.dec.supports();
            std::vector<Mask> want = minimal_primes_bruteforce(I);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            rep.decomp = got == want ? SpecReport::Check::match : SpecReport::Check::mismatch;
            if (rep.decomp == SpecReport::Check::mismatch)
                detail << "decomposition: closed-form {" << masks_to_text(got) << "} vs oracle {"
                       << masks_to_text(want) << "}\n";
        }

        rep.dim_oracle = krull_dim_oracle(I);
        rep.conjecture_holds = rep.dim_oracle >= (spec.d - 1) * spec.t;

        if (cfg.check_betti && spec.n <= hochster_cap()) {
            rep.betti = SpecReport::Check::skipped;
            const BettiTable* want = nullptr;
            BettiTable oracle_table;
            BettiTable formula;
            bool have_formula = false;
            if (is_initial(spec)) {
                formula = betti_strongly_stable(I, spec.t);
                have_formula = true;
            } else if (is_final(spec)) {
                formula = betti_final(I, spec.t);
                have_formula = true;
            }
            if (have_formula) {
                oracle_table = hochster_betti(I);
                want = &oracle_table;
                rep.betti = formula == *want ? SpecReport::Check::match
                                             : SpecReport::Check::mismatch;
                if (rep.betti == SpecReport::Check::mismatch)
                    detail << "betti: formula table differs from the homology table\n";
            } else if (rep.completely &&
                       linear_resolution_completely(spec) == LinearResolution::yes &&
                       min_index(spec.u) == 1 && min_index(spec.v) >= 2) {
                std::vector<long long> totals = betti_completely_linear(spec);
                oracle_table = hochster_betti(I);
                std::vector<long long> oracle_totals = oracle_table.totals();
                while (oracle_totals.size() < totals.size()) oracle_totals.push_back(0);
                while (totals.size() < oracle_totals.size()) totals.push_back(0);
                rep.betti = totals == oracle_totals ? SpecReport::Check::match
                                                    : SpecReport::Check::mismatch;
                if (rep.betti == SpecReport::Check::mismatch)
                    detail << "betti: linear-resolution totals differ from homology totals\n";
            }
        } else {
            rep.betti = SpecReport::Check::skipped;
        }

        if (cfg.check_cm) {
            CmVerdict verdict = classify(spec);
            CmOracleResult oracle = reisner_cm_check(I);
            rep.classify_cm = verdict.is_cm;
            rep.oracle_cm = oracle.is_cm;
            rep.classify_branch = branch_name(verdict.branch);
            rep.cm = verdict.is_cm == oracle.is_cm ? SpecReport::Check::match
                                                   : SpecReport::Check::mismatch;
            if (rep.cm == SpecReport::Check::mismatch)
                detail << "cm: classify(" << rep.classify_branch << ")="
                       << (verdict.is_cm ? "true" : "false")
                       << " vs reisner=" << (oracle.is_cm ? "true" : "false") << "\n";
        }
    } else {
        rep.betti = SpecReport::Check::skipped;
    }

    rep.detail = detail.str();
    return rep;
}

std::string report_to_json_line(const SpecReport& r) {
    auto check_name = [](SpecReport::Check c) {
        switch (c) {
            case SpecReport::Check::skipped: return "skipped";
            case SpecReport::Check::match: return "match";
            case SpecReport::Check::mismatch: return "mismatch";
        }
        return "skipped";
    };
    json j{{"spec", spec_to_json(r.spec)},
           {"family", sweep_kind_name(r.family)},
           {"route", r.route},
           {"completely", r.completely},
           {"checks",
            {{"decomposition", check_name(r.decomp)},
             {"betti", check_name(r.betti)},
             {"cm", check_name(r.cm)}}},
           {"dim", r.dim_oracle},
           {"dim_bound_holds", r.conjecture_holds}};
    if (r.cm != SpecReport::Check::skipped) {
        j["cm_classify"] = r.classify_cm;
        j["cm_oracle"] = r.oracle_cm;
        j["branch"] = r.classify_branch;
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j.dump();
}

SweepSummary run_sweep(const SweepConfig& cfg,
                       const std::function<void(const std::string&)>& emit) {
    const auto specs = enumerate_sweep(cfg);
    SweepSummary sum;
    sum.total = static_cast<long long>(specs.size());

    const int jobs = std::max(1, cfg.jobs);
    constexpr std::size_t kChunk = 512;  // emitted in order, so long runs stream
    std::vector<SpecReport> reports;
    for (std::size_t base = 0; base < specs.size(); base += kChunk) {
        const std::size_t end = std::min(base + kChunk, specs.size());
        reports.assign(end - base, SpecReport{});
        std::atomic<std::size_t> next{base};
        auto worker = [&]() {
            while (true) {
                const std::size_t k = next.fetch_add(1);
                if (k >= end) return;
                try {
                    reports[k - base] = check_spec(specs[k].first, specs[k].second, cfg);
                } catch (const std::exception& e) {
                    SpecReport bad;
                    bad.spec = specs[k].first;
                    bad.family = specs[k].second;
                    bad.decomp = SpecReport::Check::mismatch;
                    bad.detail = std::string("exception: ") + e.what();
                    reports[k - base] = bad;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        for (const SpecReport& r : reports) {
            if (emit) emit(report_to_json_line(r));
            if (r.decomp != SpecReport::Check::skipped) {
                ++sum.decomp_checked;
                if (r.decomp == SpecReport::Check::mismatch) ++sum.decomp_mismatch;
            }
            if (r.betti != SpecReport::Check::skipped) {
                ++sum.betti_checked;
                if (r.betti == SpecReport::Check::mismatch) ++sum.betti_mismatch;
            }
            if (r.cm != SpecReport::Check::skipped) {
                ++sum.cm_checked;
                if (r.cm == SpecReport::Check::mismatch) ++sum.cm_mismatch;
            }
            if (r.dim_oracle >= 0) {
                ++sum.conjecture_checked;
                if (!r.conjecture_holds) {
                    ++sum.conjecture_violations;
                    sum.conjecture_flags.push_back(r);
                }
            }
            if (r.decomp == SpecReport::Check::mismatch ||
                r.betti == SpecReport::Check::mismatch || r.cm == SpecReport::Check::mismatch)
                sum.mismatches.push_back(r);
        }
    }
    return sum;
}

}  // namespace tspread
