#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/matroid.hpp"

namespace lrc {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TrichotomyViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EdgeLabel {
    enum class Kind { Elementary, Rank, Nullity };
    Kind kind = Kind::Elementary;
    int delta_rank = 1;
    int delta_nullity = 1;

    std::string text() const;  // "ρ=l", "η=l" or "1,1"
};

struct HasseEdge {
    int lower = 0;  // indices into CyclicFlatLattice::flats
    int upper = 0;
    EdgeLabel label;
};

// The lattice of cyclic flats: all Z with cl(Z)=Z and cyc(Z)=Z, the
// covering relations of set inclusion, and the atom/coatom levels.
// Atoms are the covers of the bottom element, coatoms the flats covered
// by the top element.
struct CyclicFlatLattice {
    std::vector<Mask> flats;  // sorted by (cardinality, mask)
    std::vector<int> flat_rank;
    std::vector<int> flat_nullity;
    int bottom = 0;  // index of cl(empty)
    int top = 0;     // index of cyc(E)
    std::vector<HasseEdge> edges;
    std::vector<int> atoms;
    std::vector<int> coatoms;

    int index_of(Mask z) const;  // -1 when z is not a cyclic flat
    bool contains(Mask z) const { return index_of(z) >= 0; }

    /// Index of the smallest cyclic flat containing x (the join of all
    /// cyclic flats inside x's span); -1 if none contains x.
    int smallest_flat_containing(Mask x) const;

    std::vector<int> covers_of(int flat) const;      // upper neighbours
    std::vector<int> covered_by(int flat) const;     // lower neighbours
};

/// Enumerate every cyclic flat of m. Ground sets are limited to 24 elements
/// and the enumeration aborts after 2^20 closure computations.
CyclicFlatLattice enumerate_cyclic_flats(const Matroid& m);

/// Recompute the edge labels from the matroid ranks. Throws
/// TrichotomyViolation if some covering step has both rank and nullity
/// jumps > 1, which is impossible for binary matroids.
void classify_edges(CyclicFlatLattice& lat, const Matroid& m);

std::pair<std::vector<int>, std::vector<int>> atoms_coatoms(const CyclicFlatLattice& lat);

struct AtomicityReport {
    bool atomic = true;          // every flat is the join of the atoms below it
    bool union_property = true;  // every flat is even the union of those atoms
    std::optional<Mask> counterexample;
};

AtomicityReport is_atomic(const CyclicFlatLattice& lat);

/// d = eta(E) + 1 - max{ eta(Z) : Z proper cyclic flat }.
/// Throws std::domain_error when E is not a cyclic flat (degenerate input).
int distance_via_flats(const Matroid& m, const CyclicFlatLattice& lat);

/// Deterministic DOT rendering of the lattice (bottom-up layout).
std::string to_dot(const CyclicFlatLattice& lat, Mask ground);

}  // namespace lrc
