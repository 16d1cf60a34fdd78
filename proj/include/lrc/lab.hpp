#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/locality.hpp"

namespace lrc {
namespace lab {

// Generation plan for small binary codes (= simple binary matroids, one
// column multiset per instance). Columns are distinct and nonzero, which
// already forces simplicity; co-loop-free instances are kept and the rest
// are counted as exclusions.
struct InstanceSpec {
    enum class Mode { Exhaustive, Random };
    Mode mode = Mode::Exhaustive;
    int max_n = 7;  // exhaustive mode requires max_n <= 9
    int max_k = 4;
    long count = 0;  // random mode: accepted instances to produce
    std::uint64_t seed = 0;
    // distinct nonzero columns already force simplicity / no replication;
    // co-loop-free is a filter and can be released for edge-case studies
    bool require_no_coloops = true;
};

struct Counterexample {
    long instance = -1;
    std::string check;
    std::string detail;
    std::string matrix_text;
    Mask subset = 0;
};

struct SuiteReport {
    std::string suite;
    long instances = 0;
    long excluded = 0;
    long checks = 0;
    std::vector<Counterexample> failures;
    double elapsed_sec = 0;

    bool ok() const { return failures.empty(); }
    long failures_in(const std::string& check) const;
};

/// Uniform random code with n distinct nonzero columns over F_2^k.
gf2::BitMatrix random_code(std::mt19937_64& rng, int n, int k);

/// All column combinations for every (k <= max_k, n <= max_n); the count of
/// generated instances for fixed (n,k) is C(2^k-1, n).
std::vector<gf2::BitMatrix> exhaustive_codes(int max_n, int max_k);

/// Structural theorem sweep: distance formula vs enumeration, edge
/// trichotomy, atom<->nullity 1, element-in-atom, atomicity with the union
/// property, and (r',2)-locality through atoms. Zero failures expected.
SuiteReport verify_structure_suite(const InstanceSpec& spec);

/// Covering-relation sweep for codes admitting (r,delta)-locality: bottom
/// and top of the lattice are the empty set and E, edges into the top are
/// nullity edges labeled >= d-1, and for delta>2 each repair-set flat has
/// only nullity edges >= delta-1 below it, with lower ranks <= r-2.
SuiteReport verify_cover_relation_suite(const InstanceSpec& spec, int r, int delta);

/// Chain fuzzing: random delta=3 instances, random-picker chains, both
/// per-step lemma inequalities and alpha*m integrality on every chain.
SuiteReport verify_chain_suite(long instances, int chains_per_instance, std::uint64_t seed);

struct Achiever {
    gf2::BitMatrix g;
    int n, k, d, r, delta, ell;
    std::vector<Mask> repair_sets;
    int bound;
};

struct SearchResult {
    std::vector<Achiever> achievers;
    long scanned = 0;
    long rejected_precheck = 0;
    std::string note;
    double elapsed_sec = 0;
};

/// Scan random candidate generator matrices (seed candidates first) for
/// codes with d = d_target = bound_best_corollary(n,k,r,delta) and a
/// discoverable (r,delta)-locality. Deterministic for a fixed seed.
SearchResult search_achievers(int n, int k, int d_target, int r, int delta, long budget,
                              std::uint64_t seed, const std::vector<gf2::BitMatrix>& seed_candidates = {});

/// Exact k_opt oracle: table[n][d] = the largest dimension of a binary
/// linear [n, k] code with minimum distance >= d, for all n <= max_n <= 8,
/// by enumerating every subspace through its reduced row echelon form.
std::vector<std::vector<int>> kopt_exhaustive_table(int max_n);
int kopt_exhaustive(int n, int d);

}  // namespace lab
}  // namespace lrc
