// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero if any of them fails. Runtime limits are part of the
// criteria and enforced.

#include <chrono>
#include <cstdio>
#include <random>

#include "common.hpp"
#include "lrc/lab.hpp"
#include "lrc/reports.hpp"

using namespace lrc;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Timer {
    Clock::time_point t0 = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }
};

void report(int criterion, bool pass, const std::string& detail, double elapsed) {
    std::printf("criterion %d: %s — %s (%.2fs)\n", criterion, pass ? "PASS" : "FAIL", detail.c_str(), elapsed);
    if (!pass) ++g_failures;
}

// ---- criterion 1: the worked (10,4,4) code end to end ---------------------

void criterion1() {
    Timer t;
    bool ok = true;
    std::string why;
    try {
        auto g = testdata::example1();
        auto m = Matroid::from_matrix(g);
        ok &= g.cols() == 10 && gf2::rank(g, g.column_set()) == 4 && gf2::min_distance(g) == 4;
        auto profile = verify_locality(m, testdata::example1_sets(), 4, 3);
        ok &= profile.valid();
        for (const auto& s : profile.repair_sets)
            ok &= gf2::popcount(s.elems) == 6 && s.rank == 3 && s.local_distance == 3;
        ok &= bounds::bound_best_corollary(10, 4, 4, 3) == 4;
        auto rep = bounds::evaluate_bounds(10, 4, 4, 3, profile.ell, std::nullopt, 4);
        bool achieved = false;
        for (const auto& e : rep.entries)
            if (e.name == "best_corollary") achieved = e.achieved.value_or(false) && e.value == 4;
        ok &= achieved;
        why = "(n,k,d)=(10,4,4), |Z|=6 rho=3 d_Z=3, corollary bound 4 ACHIEVED";
    } catch (const std::exception& e) {
        ok = false;
        why = e.what();
    }
    double el = t.seconds();
    ok &= el < 1.0;
    report(1, ok, why, el);
}

// ---- criteria 2+3: oracle equivalence and the structural theorems ---------

void criteria23() {
    Timer t;
    lab::InstanceSpec exhaustive;
    exhaustive.mode = lab::InstanceSpec::Mode::Exhaustive;
    exhaustive.max_n = 7;
    exhaustive.max_k = 4;
    auto rep_a = lab::verify_structure_suite(exhaustive);

    lab::InstanceSpec random;
    random.mode = lab::InstanceSpec::Mode::Random;
    random.max_n = 14;
    random.max_k = 8;
    random.count = 10000;
    random.seed = 42;
    auto rep_b = lab::verify_structure_suite(random);
    double el = t.seconds();

    long d_fail = rep_a.failures_in("distance_formula") + rep_b.failures_in("distance_formula");
    bool ok2 = d_fail == 0 && rep_b.instances == 10000 && el < 300.0;
    report(2, ok2,
           "distance formula == enumeration on " + std::to_string(rep_a.instances) + " exhaustive + " +
               std::to_string(rep_b.instances) + " random codes, " + std::to_string(d_fail) + " mismatches",
           el);

    long other_fail = static_cast<long>(rep_a.failures.size() + rep_b.failures.size()) - d_fail;
    bool ok3 = other_fail == 0;
    report(3, ok3,
           "atomicity/union, trichotomy, atom<->eta=1, element-in-atom, delta2 locality: " +
               std::to_string(other_fail) + " failures",
           el);
}

// ---- criterion 4: figure sweep dominance -----------------------------------

void criterion4() {
    Timer t;
    std::vector<int> rs;
    for (int r = 3; r <= 10; ++r) rs.push_back(r);
    auto rows = bounds::sweep(50, 3, rs, 2, 49);
    long bad = 0;
    bool spot = false;
    for (const auto& row : rows) {
        if (row.new_bound > row.old_bound) ++bad;
        if (row.r == 5 && row.k == 10) spot = row.old_bound == 39 && row.new_bound == 35;
    }
    double el = t.seconds();
    bool ok = bad == 0 && spot && rows.size() == 8 * 48 && el < 1.0;
    report(4, ok,
           "new <= old on all " + std::to_string(rows.size()) + " cells, spot (r=5,k=10) = (39,35), " +
               std::to_string(bad) + " violations",
           el);
}

// ---- criterion 5: combined bound is the pointwise minimum ------------------

void criterion5() {
    Timer t;
    long cells = 0, bad = 0;
    for (int delta : {3, 4, 5})
        for (int k = 3; k <= 30; ++k)
            for (int ell = 2; ell < k; ++ell) {
                int n = k + 30;
                ++cells;
                if (bounds::bound_ldelta(n, k, ell, delta) !=
                    std::min(bounds::bound_ell_singleton(n, k, ell, delta), bounds::bound_noalpha(n, k, ell, delta)))
                    ++bad;
            }
    report(5, bad == 0, "ldelta == min(ell_singleton, noalpha) on " + std::to_string(cells) + " cells",
           t.seconds());
}

// ---- criterion 6: dimension-side comparison at the fixture parameters ------

void criterion6() {
    Timer t;
    auto rep = bounds::compare_cm_vs_new(10, 4, 4, 3, 3, 4);
    bool ok = rep.lhs == 10 && rep.rhs_singleton == 10 && rep.rhs_cm == 11 && rep.k_max == 5;
    report(6, ok,
           "lhs=" + std::to_string(rep.lhs) + " rhs_singleton=" + std::to_string(rep.rhs_singleton) +
               " rhs_cm=" + std::to_string(rep.rhs_cm) + " (t >= 0, shortening estimator)",
           t.seconds());
}

// ---- criterion 7: estimator soundness against the exhaustive oracle --------

void criterion7() {
    Timer t;
    auto table = lab::kopt_exhaustive_table(8);
    long bad = 0, cells = 0;
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= n; ++d) {
            ++cells;
            if (table[n][d] > bounds::kopt_plotkin(n, d)) ++bad;
        }
    double el = t.seconds();
    bool ok = bad == 0 && el < 600.0;
    report(7, ok,
           "no binary linear code beats the estimator on " + std::to_string(cells) + " (n,d) cells, n <= 8",
           el);
}

// ---- criterion 8: chain lemmas under random-picker fuzzing -----------------

void criterion8() {
    Timer t;
    auto rep = lab::verify_chain_suite(100, 10, 20260809);
    bool ok = rep.ok() && rep.instances == 100 && rep.checks == 1000;
    report(8, ok,
           std::to_string(rep.checks) + " chains over " + std::to_string(rep.instances) +
               " random delta=3 instances, " + std::to_string(rep.failures.size()) + " violations",
           t.seconds());
}

// ---- criterion 9: repair hierarchy on the fixture ---------------------------

void criterion9() {
    Timer t;
    bool ok = true;
    std::string why;
    try {
        auto g = testdata::example1();
        auto m = Matroid::from_matrix(g);
        auto profile = verify_locality(m, testdata::example1_sets(), 4, 3);
        struct Scenario {
            Mask erased;
            RepairTier tier;
        };
        std::vector<Scenario> scenarios = {
            {gf2::parse_mask_1based("1", 10), RepairTier::Atom},
            {gf2::parse_mask_1based("1,2", 10), RepairTier::LocalSet},
            {gf2::parse_mask_1based("1,2,5", 10), RepairTier::Global},
        };
        std::mt19937_64 rng(99);
        for (const auto& sc : scenarios) {
            auto plan = plan_repair(g, profile, sc.erased);
            ok &= plan.tier == sc.tier;
            for (int trial = 0; trial < 1000; ++trial) {
                std::uint64_t word = g.encode(rng() & gf2::full_mask(4));
                ok &= apply_repair(plan, word, sc.erased) == word;
            }
        }
        why = "tiers Atom/LocalSet/Global, 1000 codewords each reconstructed bit-exactly";
    } catch (const std::exception& e) {
        ok = false;
        why = e.what();
    }
    report(9, ok, why, t.seconds());
}

}  // namespace

int main() {
    criterion1();
    criteria23();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
