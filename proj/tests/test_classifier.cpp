#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tspread/classifier.hpp"
#include "tspread/oracle.hpp"

using namespace tspread;

namespace {

Mask m(std::initializer_list<int> idx) { return mask_of(std::vector<int>(idx), kMaxVars); }

CmVerdict go(int n, int d, int t, Mask u, Mask v) {
    return classify(make_spec(n, d, t, u, v, Kind::arbitrary));
}

}  // namespace

TEST_CASE("ideal intersection and gcd") {
    auto A = make_ideal(3, {m({1, 2})});
    auto B = make_ideal(3, {m({2, 3})});
    CHECK(intersect_ideals(A, B).gens == std::vector<Mask>{m({1, 2, 3})});

    auto J = build_segment(make_spec(7, 3, 2, max_M(7, 3, 2), m({2, 5, 7}), Kind::initial));
    auto T = build_segment(make_spec(7, 3, 2, m({1, 4, 6}), min_M(7, 3, 2), Kind::final));
    auto I = build_segment(make_spec(7, 3, 2, m({1, 4, 6}), m({2, 5, 7}), Kind::arbitrary));
    CHECK(intersect_ideals(J, T).gens == I.gens);

    CHECK(gcd_of_ideal(I) == 0);
    CHECK(gcd_of_ideal(make_ideal(7, {m({1, 4, 6})})) == m({1, 4, 6}));
    CHECK(gcd_of_ideal(make_ideal(5, {m({1, 3}), m({1, 5})})) == m({1}));
    CHECK_THROWS(gcd_of_ideal(MonomialIdeal{5, {}}));

    // random pairs against membership over all squarefree monomials
    const auto M = enumerate_M(8, 2, 2);
    for (std::size_t a = 0; a < M.size(); a += 3)
        for (std::size_t b = 0; b < M.size(); b += 4) {
            auto X = make_ideal(8, {M[a], M[(a + 5) % M.size()]});
            auto Y = make_ideal(8, {M[b], M[(b + 7) % M.size()]});
            auto Z = intersect_ideals(X, Y);
            for (Mask s = 0; s < (Mask{1} << 8); ++s)
                REQUIRE(ideal_contains(Z, s) == (ideal_contains(X, s) && ideal_contains(Y, s)));
        }
}

TEST_CASE("ladder rungs") {
    CHECK(ladder_u(7, 3, 2, 0) == m({1, 4, 6}));
    CHECK(ladder_u(7, 3, 2, 1) == m({1, 4, 7}));
    CHECK(ladder_u(7, 3, 2, 2) == m({1, 5, 7}));
    CHECK(ladder_v(7, 3, 2, 3) == min_M(7, 3, 2));
    CHECK(ladder_v(8, 3, 2, 2) == m({3, 6, 8}));
}

TEST_CASE("classification: worked and hand-checked instances") {
    auto ci = go(9, 2, 2, m({1, 9}), m({2, 4}));
    CHECK(ci.is_cm);
    CHECK(ci.branch == CmBranch::complete_intersection);

    auto corner = go(8, 3, 2, m({1, 6, 8}), m({3, 6, 8}));
    CHECK(corner.is_cm);
    CHECK(corner.branch == CmBranch::ladder_corner);

    auto mixed = go(7, 3, 2, m({1, 4, 6}), m({2, 5, 7}));
    CHECK_FALSE(mixed.is_cm);
    CHECK(mixed.branch == CmBranch::split_height_two);

    // unit-spread ladder, hand-verified complexes
    CHECK(go(5, 2, 1, m({1, 4}), m({3, 4})).is_cm);
    CHECK(go(5, 2, 1, m({1, 5}), m({3, 4})).is_cm);
    CHECK(go(5, 2, 1, m({1, 5}), m({3, 5})).is_cm);
    CHECK_FALSE(go(5, 2, 1, m({1, 3}), m({3, 4})).is_cm);
    CHECK_FALSE(go(5, 2, 1, m({1, 4}), m({3, 5})).is_cm);
    CHECK(go(6, 3, 1, m({1, 4, 5}), m({3, 4, 5})).is_cm);
    CHECK(go(6, 3, 1, m({1, 4, 6}), m({3, 4, 5})).is_cm);
    CHECK_FALSE(go(6, 3, 1, m({1, 5, 6}), m({3, 4, 5})).is_cm);
    CHECK_FALSE(go(6, 3, 1, m({1, 3, 6}), m({3, 4, 5})).is_cm);
    CHECK(go(6, 3, 1, m({1, 4, 6}), m({3, 4, 6})).is_cm);
    CHECK(go(6, 3, 1, m({1, 5, 6}), m({3, 4, 6})).is_cm);
    CHECK_FALSE(go(6, 3, 1, m({1, 4, 5}), m({3, 4, 6})).is_cm);

    // wider-spread ladder, hand-verified
    CHECK(go(6, 2, 2, m({1, 5}), m({3, 5})).is_cm);
    CHECK(go(6, 2, 2, m({1, 6}), m({3, 5})).is_cm);
    CHECK_FALSE(go(6, 2, 2, m({1, 4}), m({3, 5})).is_cm);

    // regression: principality alone is not enough in the height-two window
    auto deep = go(9, 3, 2, m({1, 7, 9}), m({2, 4, 8}));
    CHECK_FALSE(deep.is_cm);
    CHECK(deep.branch == CmBranch::split_height_two);
    CHECK(deep.witness.at("pq_generators").find(',') == std::string::npos);

    // the height-two window accepts a genuinely mixed pair
    auto win = go(7, 3, 2, m({1, 4, 7}), m({2, 4, 6}));
    CHECK(win.is_cm);
    CHECK(win.branch == CmBranch::split_height_two);
}

TEST_CASE("classification: terminal and degenerate branches") {
    auto p = go(7, 3, 2, m({2, 5, 7}), m({2, 5, 7}));
    CHECK(p.is_cm);
    CHECK(p.branch == CmBranch::principal);

    auto iv = go(7, 1, 2, m({2}), m({5}));
    CHECK(iv.is_cm);
    CHECK(iv.branch == CmBranch::interval);

    auto ver = go(7, 3, 2, max_M(7, 3, 2), min_M(7, 3, 2));
    CHECK(ver.is_cm);
    CHECK(ver.branch == CmBranch::veronese);

    auto ini = go(7, 3, 2, max_M(7, 3, 2), m({2, 5, 7}));
    CHECK_FALSE(ini.is_cm);
    CHECK(ini.branch == CmBranch::initial_non_veronese);

    auto fin = go(7, 3, 2, m({1, 4, 6}), min_M(7, 3, 2));
    CHECK_FALSE(fin.is_cm);
    CHECK(fin.branch == CmBranch::final_non_veronese);

    // all generators share x1
    auto cf = go(6, 2, 2, m({1, 4}), m({1, 6}));
    CHECK_FALSE(cf.is_cm);
    CHECK(cf.branch == CmBranch::common_factor);

    // n = 2+(d-1)t forces the final segment
    auto sm = go(4, 2, 2, m({1, 4}), m({2, 4}));
    CHECK_FALSE(sm.is_cm);
    CHECK(sm.branch == CmBranch::small_ambient);

    // initial whose endpoint keeps x1: still governed by the Veronese rule
    auto strip_ini = go(7, 3, 2, max_M(7, 3, 2), m({1, 5, 7}));
    CHECK_FALSE(strip_ini.is_cm);
    CHECK(strip_ini.branch == CmBranch::initial_non_veronese);
}

TEST_CASE("every verdict in a window agrees with the homology oracle") {
    for (int n = 3; n <= 7; ++n)
        for (int d = 2; d <= 4; ++d)
            for (int t = 1; t <= 3; ++t) {
                if (n < 1 + (d - 1) * t) continue;
                const auto M = enumerate_M(n, d, t);
                for (Mask u : M)
                    for (Mask v : M) {
                        if (!slex_geq(u, v)) continue;
                        auto sp = make_spec(n, d, t, u, v, Kind::arbitrary);
                        auto verdict = classify(sp);
                        auto oracle = reisner_cm_check(build_segment(sp));
                        REQUIRE(verdict.is_cm == oracle.is_cm);
                    }
            }
}

TEST_CASE("structural consequences of positive verdicts") {
    // the corner pair has dim = depth = 1+(d-1)t
    auto I = build_segment(make_spec(8, 3, 2, m({1, 6, 8}), m({3, 6, 8}), Kind::arbitrary));
    CHECK(krull_dim_oracle(I) == 5);
    CHECK(depth_oracle(I) == 5);

    // the wide-window positives are two disjoint generators
    auto ciI = build_segment(make_spec(9, 2, 2, m({1, 9}), m({2, 4}), Kind::arbitrary));
    REQUIRE(ciI.gens.size() == 2);
    CHECK((ciI.gens[0] & ciI.gens[1]) == 0);

    // CM implies unmixed for initial, final, and wide-window segments;
    // and every positive verdict respects the dimension lower bound
    for (int n = 4; n <= 8; ++n)
        for (int t = 1; t <= 2; ++t) {
            if (n < 1 + t) continue;
            const auto M = enumerate_M(n, 2, t);
            for (Mask u : M)
                for (Mask v : M) {
                    if (!slex_geq(u, v)) continue;
                    auto sp = make_spec(n, 2, t, u, v, Kind::arbitrary);
                    auto verdict = classify(sp);
                    auto I2 = build_segment(sp);
                    auto rr = reisner_cm_check(I2);
                    if (is_initial(sp) || is_final(sp) || (min_index(v) == 2 && n >= 4 + t))
                        REQUIRE(rr.is_cm == rr.is_pure);
                    if (verdict.is_cm)
                        REQUIRE(krull_dim_oracle(I2) >= (sp.d - 1) * sp.t);
                }
        }
}
