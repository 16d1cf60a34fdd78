#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrc/cyclic_flats.hpp"
#include "lrc/matroid.hpp"

namespace lrc {

class UnrepairableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RepairSetInfo {
    Mask elems = 0;
    int rank = 0;
    int nullity = 0;
    int local_distance = 0;  // 0 when the punctured code has dimension 0
};

struct LocalityViolation {
    int set_index = -1;  // -1 for whole-profile problems
    std::string reason;
};

struct LocalityProfile {
    int n = 0, k = 0, d = 0;
    int r = 0, delta = 0;
    int ell = 0;  // max rank over the declared repair sets
    std::vector<RepairSetInfo> repair_sets;
    Mask coverage_gap = 0;  // symbols in no repair set
    std::vector<LocalityViolation> violations;

    // (r',2)-locality through atoms; present when the matroid is simple
    // with no co-loops.
    std::optional<int> r_prime;
    std::vector<Mask> atom_cover;  // per symbol (0-based), empty if r_prime unset

    bool valid() const { return violations.empty() && coverage_gap == 0; }
};

/// Check the declared repair sets against (r,delta): sizes, punctured
/// distances, coverage. For delta > 2 the rank/nullity consequences
/// (rank <= r-1, nullity >= delta) are asserted as well; a breach is
/// reported as a violation since it would contradict the theory.
/// Requires a matrix-backed matroid (punctured distances are enumerated).
LocalityProfile verify_locality(const Matroid& m, const std::vector<Mask>& sets, int r, int delta);

/// Every non-degenerate binary code without replication carries an
/// (r',2)-locality through the atoms of its cyclic-flat lattice: each
/// symbol's minimum circuit is closed, hence an atom with nullity 1.
/// Returns (r', per-symbol atom). Throws CoLoopError when a co-loop exists.
std::pair<int, std::vector<Mask>> discover_delta2_locality(const Matroid& m, const CyclicFlatLattice& lat);

/// All cyclic flats Z with d_Z >= delta and |Z| <= r+delta-1, greedily
/// covering every symbol, preferring smaller rank. r < 0 disables the size
/// cap (proper flats only). Throws std::runtime_error when no cover exists.
std::vector<Mask> discover_repair_sets(const Matroid& m, const CyclicFlatLattice& lat, int r, int delta);

struct ChainStep {
    Mask y = 0;          // Y_i
    int chosen_x = -1;   // 0-based symbol picked at this step
    int chosen_set = -1; // index into the repair set list
    int delta_rank = 0;
    int delta_nullity = 0;
    bool coatom_hit = false;  // Y_{i-1} & Z_i is a coatom of the restriction lattice
};

struct RepairChain {
    std::vector<ChainStep> steps;
    int length() const { return static_cast<int>(steps.size()); }
    int coatom_hits() const;
    // alpha = hits / m, kept exact
    long long alpha_num() const { return coatom_hits(); }
    long long alpha_den() const { return length(); }
};

enum class PickPolicy { First, Random };

/// Join repair sets along uncovered symbols until the chain reaches E.
/// Each Y_i = cl(Y_{i-1} | Z_i); repair sets must be cyclic flats covering
/// the ground set. The coatom test at step 1 is structurally false.
RepairChain build_rps_chain(const Matroid& m, const std::vector<Mask>& repair_sets, PickPolicy policy,
                            std::uint64_t seed = 0);

struct ChainLemmaReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Per-step inequalities every chain of a binary delta>2 LRC must satisfy:
/// rank step <= ell - (ell-1)*hit and nullity step >= delta - hit for
/// i >= 2, plus rank step <= ell at i = 1. A violation signals a bug or a
/// breached hypothesis.
ChainLemmaReport check_chain_lemmas(const RepairChain& chain, int ell, int delta);

enum class RepairTier { Atom, LocalSet, Global };

std::string tier_name(RepairTier t);  // "AtomRepair" / "LocalSetRepair" / "GlobalRepair"

struct RepairEquation {
    int symbol = -1;  // 0-based erased column
    Mask xor_of = 0;  // surviving columns whose XOR reproduces it
};

struct RepairPlan {
    RepairTier tier = RepairTier::Global;
    std::vector<RepairEquation> equations;
};

/// Tier selection: a single erasure is repaired inside its atom; erasures
/// confined to one repair set Z with fewer than d_Z of them are repaired
/// from surviving Z columns (minimum-size XOR identities); anything else
/// falls back to solving against an information set of the survivors.
/// All XOR identities are verified before returning.
/// Throws UnrepairableError when the erased columns leave the span.
RepairPlan plan_repair(const BitMatrix& code, const LocalityProfile& profile, Mask erased);

/// Apply the plan to a codeword with the erased positions zeroed out;
/// returns the reconstructed codeword bits.
std::uint64_t apply_repair(const RepairPlan& plan, std::uint64_t codeword, Mask erased);

/// Repair-set declaration file: one set per line, "name: 1,2,3" (1-based).
std::vector<Mask> parse_repair_sets(std::string_view text, int n);

}  // namespace lrc
