#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/bounds.hpp"
#include "lrc/lab.hpp"

using namespace lrc::bounds;

TEST_CASE("rational parsing and reduction") {
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("3") == Rational(3, 1));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x/y"), std::domain_error);
    CHECK(Rational(1, 2).text() == "1/2");
}

TEST_CASE("classical (r,delta) Singleton-type bound") {
    CHECK(bound_kamath(10, 4, 4, 3) == 7);
    CHECK(bound_kamath(15, 6, 6, 2) == 15 - 6 + 1);  // r=k, delta=2: plain Singleton
    CHECK(bound_kamath(50, 10, 5, 3) == 39);
    CHECK_THROWS_AS(bound_kamath(10, 11, 4, 3), std::domain_error);
    CHECK_THROWS_AS(bound_kamath(10, 4, 0, 3), std::domain_error);
    CHECK_THROWS_AS(bound_kamath(10, 4, 4, 1), std::domain_error);
}

TEST_CASE("rank-parameter Singleton-type bound") {
    CHECK(bound_ell_singleton(10, 4, 3, 3) == 4);
    CHECK(bound_ell_singleton(20, 7, 7, 3) == 13);  // ell = k kills the correction
    CHECK(bound_ell_singleton(20, 7, 3, 3) == 9);
}

TEST_CASE("alpha-refined bound with exact rational ceilings") {
    CHECK(bound_alpha(10, 4, 3, 3, Rational(0, 1)) == 4);
    CHECK(bound_alpha(10, 4, 3, 3, Rational(0, 1)) == bound_ell_singleton(10, 4, 3, 3));
    CHECK(bound_alpha(10, 4, 3, 3, Rational(1, 1)) == 2);
    CHECK(bound_alpha(10, 4, 3, 3, Rational(1, 2)) == 5);
    CHECK_THROWS_AS(bound_alpha(10, 4, 3, 3, Rational(3, 2)), std::domain_error);
}

TEST_CASE("alpha bound is not monotone; the detector reports it") {
    auto violations = alpha_monotonicity_violations(10, 4, 3, 3, 4);
    CHECK_FALSE(violations.empty());  // 4 at alpha=0 but 5 at alpha=1/2
    bool found = false;
    for (const auto& v : violations) found |= v.v2 > v.v1;
    CHECK(found);
}

TEST_CASE("optimized-alpha bound") {
    CHECK(bound_noalpha(10, 4, 3, 3) == 5);
    CHECK(bound_noalpha(20, 5, 3, 3) == 13);
    CHECK(bound_noalpha(20, 7, 3, 3) == 9);
}

TEST_CASE("combined bound with the corrected indicator") {
    CHECK(bound_ldelta(10, 4, 3, 3) == 4);  // ell+1 = k suppresses the +1
    CHECK(bound_ldelta(20, 7, 3, 3) == 9);
    CHECK(bound_ldelta(20, 5, 3, 3) == 13);
}

TEST_CASE("combined bound is the pointwise minimum of its two parents") {
    for (int delta : {3, 4, 5})
        for (int k = 3; k <= 30; ++k)
            for (int ell = 2; ell < k; ++ell) {
                int n = k + 30;
                CHECK(bound_ldelta(n, k, ell, delta) ==
                      std::min(bound_ell_singleton(n, k, ell, delta), bound_noalpha(n, k, ell, delta)));
            }
}

TEST_CASE("parameter-only corollary bound") {
    CHECK(bound_best_corollary(10, 4, 4, 3) == 4);
    CHECK(bound_best_corollary(50, 10, 5, 3) == 35);
    for (int n : {12, 20, 33})
        for (int k = 2; k < n; ++k)
            CHECK(bound_best_corollary(n, k, k, 3) == bound_ell_singleton(n, k, k - 1, 3));
    CHECK_THROWS_AS(bound_best_corollary(10, 4, 1, 3), std::domain_error);
}

TEST_CASE("dimension estimator from the Plotkin count") {
    CHECK(kopt_plotkin(7, 4) == 3);
    CHECK(kopt_plotkin(4, 4) == 1);
    CHECK(kopt_plotkin(10, 4) == 6);
    for (int n = 1; n <= 30; ++n) CHECK(kopt_plotkin(n, 1) == n);
    CHECK_THROWS_AS(kopt_plotkin(3, 4), std::domain_error);
}

TEST_CASE("estimator never undercuts the exhaustive oracle on tiny lengths") {
    auto table = lrc::lab::kopt_exhaustive_table(6);
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= n; ++d) CHECK(lrc::lab::kopt_exhaustive(n, d) <= kopt_plotkin(n, d));
    CHECK(lrc::lab::kopt_exhaustive(4, 4) == 1);
    CHECK(lrc::lab::kopt_exhaustive(3, 2) == 2);
    CHECK(table[5][3] == 2);
}

TEST_CASE("dimension bound over shortening groups") {
    auto cm = bound_cm_delta(10, 4, 4, 3);
    CHECK(cm.k_max == 5);
    CHECK(cm.best_t == 1);
    REQUIRE(cm.table.size() == 2);  // t = 0 and t = 1 are feasible
    CHECK(cm.table[0].value == 6);
    CHECK(cm.table[1].value == 5);
    CHECK_THROWS_AS(bound_cm_delta(3, 4, 2, 3), std::domain_error);
}

TEST_CASE("comparison of the two dimension-side bounds") {
    auto rep = compare_cm_vs_new(10, 4, 4, 3, 3, 4);
    CHECK(rep.lhs == 10);
    CHECK(rep.rhs_singleton == 10);
    CHECK(rep.equality_singleton);
    CHECK(rep.k_max == 5);
    CHECK(rep.rhs_cm == 11);
    CHECK(rep.singleton_tighter);
    CHECK_FALSE(rep.cm_tighter);
}

TEST_CASE("bound report computes values with applicability flags") {
    auto rep = evaluate_bounds(10, 4, 4, 3, 3, Rational(1, 2), 4);
    bool saw_achieved = false;
    for (const auto& e : rep.entries) {
        CHECK(e.applicable);
        if (e.name == "best_corollary") {
            CHECK(e.value == 4);
            CHECK(e.achieved.has_value());
            CHECK(*e.achieved);
            saw_achieved = true;
        }
    }
    CHECK(saw_achieved);

    auto delta2 = evaluate_bounds(10, 4, 4, 2, 3, std::nullopt, std::nullopt);
    for (const auto& e : delta2.entries)
        if (e.name != "kamath") CHECK_FALSE(e.applicable);
}

TEST_CASE("sweep grid and CSV schema") {
    auto rows = sweep(50, 3, {3, 4, 5, 6, 7, 8, 9, 10}, 2, 49);
    CHECK(rows.size() == 8 * 48);
    for (const auto& row : rows) CHECK(row.new_bound <= row.old_bound);
    bool spot = false;
    for (const auto& row : rows)
        if (row.r == 5 && row.k == 10) {
            CHECK(row.old_bound == 39);
            CHECK(row.new_bound == 35);
            spot = true;
        }
    CHECK(spot);

    auto csv = sweep_csv(sweep(50, 3, {3}, 1, 2));
    CHECK(csv.rfind("r,k,old_bound,new_bound\n", 0) == 0);
    // k=1 keeps both formulas in the plain Singleton family
    CHECK(csv.find("3,1,50,51\n") != std::string::npos);
}
