#include "lrc/cyclic_flats.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace lrc {

namespace {
constexpr long kClosureBudget = 1L << 20;
}

std::string EdgeLabel::text() const {
    switch (kind) {
        case Kind::Rank:
            return "ρ=" + std::to_string(delta_rank);
        case Kind::Nullity:
            return "η=" + std::to_string(delta_nullity);
        default:
            return "1,1";
    }
}

int CyclicFlatLattice::index_of(Mask z) const {
    auto it = std::lower_bound(flats.begin(), flats.end(), z, [](Mask a, Mask b) {
        return std::make_pair(gf2::popcount(a), a) < std::make_pair(gf2::popcount(b), b);
    });
    if (it != flats.end() && *it == z) return static_cast<int>(it - flats.begin());
    return -1;
}

int CyclicFlatLattice::smallest_flat_containing(Mask x) const {
    for (size_t i = 0; i < flats.size(); ++i)
        if ((x & ~flats[i]) == 0) return static_cast<int>(i);
    return -1;
}

std::vector<int> CyclicFlatLattice::covers_of(int flat) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.lower == flat) out.push_back(e.upper);
    return out;
}

std::vector<int> CyclicFlatLattice::covered_by(int flat) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.upper == flat) out.push_back(e.lower);
    return out;
}

CyclicFlatLattice enumerate_cyclic_flats(const Matroid& m) {
    if (m.size() > 24) throw BudgetExceeded("cyclic flat enumeration limited to ground sets of 24 elements");
    long closures = 0;
    auto closure = [&](Mask x) {
        if (++closures > kClosureBudget) throw BudgetExceeded("closure budget (2^20) exceeded");
        return m.closure(x);
    };

    // All flats are closures of independent sets; grow them one element at a
    // time starting from cl(empty), deduplicating as we go.
    std::unordered_set<Mask> seen;
    std::deque<Mask> queue;
    Mask bottom_flat = closure(0);
    seen.insert(bottom_flat);
    queue.push_back(bottom_flat);
    std::vector<Mask> all_flats;
    while (!queue.empty()) {
        Mask f = queue.front();
        queue.pop_front();
        all_flats.push_back(f);
        for (Mask t = m.ground() & ~f; t; t &= t - 1) {
            Mask e = t & (~t + 1);
            Mask g = closure(f | e);
            if (seen.insert(g).second) queue.push_back(g);
        }
    }

    CyclicFlatLattice lat;
    for (Mask f : all_flats)
        if (m.cyc(f) == f) lat.flats.push_back(f);
    std::sort(lat.flats.begin(), lat.flats.end(), [](Mask a, Mask b) {
        return std::make_pair(gf2::popcount(a), a) < std::make_pair(gf2::popcount(b), b);
    });

    lat.flat_rank.reserve(lat.flats.size());
    lat.flat_nullity.reserve(lat.flats.size());
    for (Mask f : lat.flats) {
        lat.flat_rank.push_back(m.rank(f));
        lat.flat_nullity.push_back(m.nullity(f));
    }

    Mask top_flat = m.cyc(m.ground());
    lat.bottom = lat.index_of(bottom_flat);
    lat.top = lat.index_of(top_flat);
    if (lat.bottom < 0 || lat.top < 0)
        throw std::logic_error("lattice bounds missing from enumeration");

    // Hasse edges: for each flat take the inclusion-maximal proper subsets.
    const int nf = static_cast<int>(lat.flats.size());
    for (int y = 0; y < nf; ++y) {
        std::vector<int> below;
        for (int x = 0; x < nf; ++x)
            if (x != y && (lat.flats[x] & ~lat.flats[y]) == 0) below.push_back(x);
        std::sort(below.begin(), below.end(), [&](int a, int b) {
            return gf2::popcount(lat.flats[a]) > gf2::popcount(lat.flats[b]);
        });
        std::vector<int> covers;
        for (int x : below) {
            bool dominated = false;
            for (int z : covers)
                if ((lat.flats[x] & ~lat.flats[z]) == 0) {
                    dominated = true;
                    break;
                }
            if (!dominated) covers.push_back(x);
        }
        for (int x : covers) lat.edges.push_back({x, y, {}});
    }
    std::sort(lat.edges.begin(), lat.edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
        return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
    });

    classify_edges(lat, m);

    for (const auto& e : lat.edges) {
        if (e.lower == lat.bottom) lat.atoms.push_back(e.upper);
        if (e.upper == lat.top) lat.coatoms.push_back(e.lower);
    }
    std::sort(lat.atoms.begin(), lat.atoms.end());
    std::sort(lat.coatoms.begin(), lat.coatoms.end());
    return lat;
}

void classify_edges(CyclicFlatLattice& lat, const Matroid& m) {
    for (auto& e : lat.edges) {
        int dr = m.rank(lat.flats[e.upper]) - m.rank(lat.flats[e.lower]);
        int dn = m.nullity(lat.flats[e.upper]) - m.nullity(lat.flats[e.lower]);
        if (dr < 1 || dn < 1)
            throw std::logic_error("covering relation without strict rank/nullity increase");
        EdgeLabel lab;
        lab.delta_rank = dr;
        lab.delta_nullity = dn;
        if (dr == 1 && dn == 1) {
            lab.kind = EdgeLabel::Kind::Elementary;
        } else if (dr > 1 && dn == 1) {
            lab.kind = EdgeLabel::Kind::Rank;
        } else if (dr == 1 && dn > 1) {
            lab.kind = EdgeLabel::Kind::Nullity;
        } else {
            throw TrichotomyViolation("edge " + gf2::format_mask_1based(lat.flats[e.lower]) + " -> " +
                                      gf2::format_mask_1based(lat.flats[e.upper]) + " has rank jump " +
                                      std::to_string(dr) + " and nullity jump " + std::to_string(dn) +
                                      " (input not binary, or internal error)");
        }
        e.label = lab;
    }
}

std::pair<std::vector<int>, std::vector<int>> atoms_coatoms(const CyclicFlatLattice& lat) {
    return {lat.atoms, lat.coatoms};
}

AtomicityReport is_atomic(const CyclicFlatLattice& lat) {
    AtomicityReport rep;
    for (size_t i = 0; i < lat.flats.size(); ++i) {
        if (static_cast<int>(i) == lat.bottom) continue;
        Mask z = lat.flats[i];
        Mask u = 0;
        for (int a : lat.atoms)
            if ((lat.flats[a] & ~z) == 0) u |= lat.flats[a];
        int join = lat.smallest_flat_containing(u);
        bool join_ok = join == static_cast<int>(i);
        bool union_ok = u == z;
        if (!join_ok || !union_ok) {
            if (!join_ok) rep.atomic = false;
            if (!union_ok) rep.union_property = false;
            if (!rep.counterexample) rep.counterexample = z;
        }
    }
    return rep;
}

int distance_via_flats(const Matroid& m, const CyclicFlatLattice& lat) {
    if (lat.flats[lat.top] != m.ground())
        throw std::domain_error("ground set is not a cyclic flat (code has a co-loop)");
    int best = -1;
    for (size_t i = 0; i < lat.flats.size(); ++i) {
        if (static_cast<int>(i) == lat.top) continue;
        best = std::max(best, lat.flat_nullity[i]);
    }
    if (best < 0) throw std::domain_error("no proper cyclic flat (degenerate code)");
    return m.nullity(m.ground()) + 1 - best;
}

std::string to_dot(const CyclicFlatLattice& lat, Mask ground) {
    std::string out = "digraph cyclic_flats {\n  rankdir=BT;\n  node [shape=box];\n";
    auto name = [&](Mask f) -> std::string {
        if (f == 0) return "∅";
        if (f == ground) return "E";
        return gf2::format_mask_1based(f);
    };
    for (size_t i = 0; i < lat.flats.size(); ++i) {
        out += "  z" + std::to_string(i) + " [label=\"" + name(lat.flats[i]) +
               " ρ=" + std::to_string(lat.flat_rank[i]) +
               " η=" + std::to_string(lat.flat_nullity[i]) + "\"];\n";
    }
    for (const auto& e : lat.edges) {
        out += "  z" + std::to_string(e.lower) + " -> z" + std::to_string(e.upper) +
               " [label=\"" + e.label.text() + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace lrc
