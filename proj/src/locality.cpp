#include "lrc/locality.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lrc {

namespace {

const BitMatrix& require_matrix(const Matroid& m, const char* op) {
    const BitMatrix* g = m.matrix();
    if (!g) throw std::logic_error(std::string(op) + " requires a matrix-backed matroid");
    return *g;
}

// Punctured minimum distance, 0 when the selection spans nothing.
int local_distance(const BitMatrix& g, Mask cols) {
    if (gf2::rank(g, cols) == 0) return 0;
    return gf2::min_distance(g, cols);
}

}  // namespace

LocalityProfile verify_locality(const Matroid& m, const std::vector<Mask>& sets, int r, int delta) {
    const BitMatrix& g = require_matrix(m, "verify_locality");
    if (r < 1 || delta < 2) throw std::domain_error("locality needs r >= 1 and delta >= 2");

    auto validation = gf2::validate_storage_code(g);
    if (!validation.non_degenerate()) throw std::domain_error("verify_locality requires a non-degenerate code");

    LocalityProfile p;
    p.n = m.size();
    p.k = m.rank();
    p.d = gf2::min_distance(g, m.ground());
    p.r = r;
    p.delta = delta;

    Mask covered = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
        Mask z = sets[i];
        if (z & ~m.ground()) throw std::invalid_argument("repair set outside ground set");
        RepairSetInfo info;
        info.elems = z;
        info.rank = m.rank(z);
        info.nullity = m.nullity(z);
        info.local_distance = local_distance(g, z);
        const int size = gf2::popcount(z);
        if (size > r + delta - 1)
            p.violations.push_back({static_cast<int>(i), "size " + std::to_string(size) + " exceeds r+delta-1 = " +
                                                             std::to_string(r + delta - 1)});
        if (info.local_distance < delta)
            p.violations.push_back({static_cast<int>(i), "local distance " + std::to_string(info.local_distance) +
                                                             " below delta = " + std::to_string(delta)});
        covered |= z;
        p.ell = std::max(p.ell, info.rank);
        p.repair_sets.push_back(info);
    }
    p.coverage_gap = m.ground() & ~covered;
    if (p.coverage_gap)
        p.violations.push_back({-1, "symbols " + gf2::format_mask_1based(p.coverage_gap) + " lie in no repair set"});

    // For delta > 2 without replication, valid repair sets must have
    // rank <= r-1 and nullity >= delta; a breach would contradict the
    // structure theory for binary codes, so it is surfaced loudly.
    if (delta > 2 && !validation.replicated() && p.valid()) {
        for (size_t i = 0; i < p.repair_sets.size(); ++i) {
            const auto& info = p.repair_sets[i];
            if (info.rank > r - 1)
                p.violations.push_back({static_cast<int>(i), "rank " + std::to_string(info.rank) +
                                                                 " exceeds r-1 (structural inconsistency)"});
            if (info.nullity < delta)
                p.violations.push_back({static_cast<int>(i), "nullity " + std::to_string(info.nullity) +
                                                                 " below delta (structural inconsistency)"});
        }
    }

    if (m.is_simple_no_coloops()) {
        int r_prime = 0;
        std::vector<Mask> cover(p.n);
        for (int e = 0; e < p.n; ++e) {
            Mask circuit = m.min_circuit_through(e);
            Mask atom = m.closure(circuit);
            cover[e] = atom;
            r_prime = std::max(r_prime, m.rank(atom));
        }
        p.r_prime = r_prime;
        p.atom_cover = std::move(cover);
    }
    return p;
}

std::pair<int, std::vector<Mask>> discover_delta2_locality(const Matroid& m, const CyclicFlatLattice& lat) {
    if (!m.is_simple_no_coloops())
        throw CoLoopError("delta=2 locality needs a simple matroid without co-loops");
    int r_prime = 0;
    std::vector<Mask> cover;
    for (Mask t = m.ground(); t; t &= t - 1) {
        int e = gf2::lowest_bit(t);
        Mask circuit = m.min_circuit_through(e);
        Mask atom = m.closure(circuit);
        if (atom != circuit)
            throw std::logic_error("minimum circuit is not closed (input not a simple binary matroid?)");
        int idx = lat.index_of(atom);
        if (idx < 0 || std::find(lat.atoms.begin(), lat.atoms.end(), idx) == lat.atoms.end())
            throw std::logic_error("closed minimum circuit is not an atom of the lattice");
        cover.push_back(atom);
        r_prime = std::max(r_prime, m.rank(atom));
    }
    return {r_prime, cover};
}

std::vector<Mask> discover_repair_sets(const Matroid& m, const CyclicFlatLattice& lat, int r, int delta) {
    const BitMatrix& g = require_matrix(m, "discover_repair_sets");
    struct Candidate {
        Mask z;
        int rank;
        int size;
    };
    std::vector<Candidate> cands;
    for (size_t i = 0; i < lat.flats.size(); ++i) {
        Mask z = lat.flats[i];
        if (z == 0 || z == m.ground()) continue;
        int size = gf2::popcount(z);
        if (r >= 0 && size > r + delta - 1) continue;
        if (local_distance(g, z) < delta) continue;
        cands.push_back({z, lat.flat_rank[i], size});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.rank, a.size, a.z) < std::tie(b.rank, b.size, b.z);
    });

    std::vector<Mask> chosen;
    Mask covered = 0;
    while (covered != m.ground()) {
        int e = gf2::lowest_bit(m.ground() & ~covered);
        bool found = false;
        for (const auto& c : cands) {
            if (c.z & (Mask{1} << e)) {
                chosen.push_back(c.z);
                covered |= c.z;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error("no repair set with the requested locality covers symbol " +
                                     std::to_string(e + 1));
    }
    return chosen;
}

int RepairChain::coatom_hits() const {
    int h = 0;
    for (const auto& s : steps) h += s.coatom_hit ? 1 : 0;
    return h;
}

RepairChain build_rps_chain(const Matroid& m, const std::vector<Mask>& repair_sets, PickPolicy policy,
                            std::uint64_t seed) {
    if (repair_sets.empty()) throw std::invalid_argument("no repair sets");
    Mask covered = 0;
    for (size_t i = 0; i < repair_sets.size(); ++i) {
        Mask z = repair_sets[i];
        if (m.closure(z) != z || m.cyc(z) != z)
            throw std::invalid_argument("repair set " + gf2::format_mask_1based(z) + " is not a cyclic flat");
        covered |= z;
    }
    if (covered != m.ground()) throw std::invalid_argument("repair sets do not cover the ground set");

    std::mt19937_64 rng(seed);
    // restriction lattices are needed once per distinct repair set
    std::map<Mask, CyclicFlatLattice> restriction;
    auto coatoms_of = [&](Mask z) -> const CyclicFlatLattice& {
        auto it = restriction.find(z);
        if (it == restriction.end()) it = restriction.emplace(z, enumerate_cyclic_flats(m.restrict(z))).first;
        return it->second;
    };

    RepairChain chain;
    Mask y = 0;
    while (y != m.ground()) {
        Mask uncovered = m.ground() & ~y;
        int x;
        if (policy == PickPolicy::First) {
            x = gf2::lowest_bit(uncovered);
        } else {
            auto opts = gf2::mask_elements_1based(uncovered);
            x = opts[rng() % opts.size()] - 1;
        }
        std::vector<int> containing;
        for (size_t i = 0; i < repair_sets.size(); ++i)
            if (repair_sets[i] & (Mask{1} << x)) containing.push_back(static_cast<int>(i));
        if (containing.empty())
            throw std::invalid_argument("symbol " + std::to_string(x + 1) + " is in no repair set");
        int zi = policy == PickPolicy::First ? containing.front()
                                             : containing[rng() % containing.size()];
        Mask z = repair_sets[zi];

        ChainStep step;
        step.chosen_x = x;
        step.chosen_set = zi;
        Mask y_next = m.closure(y | z);
        step.y = y_next;
        step.delta_rank = m.rank(y_next) - m.rank(y);
        step.delta_nullity = m.nullity(y_next) - m.nullity(y);
        if (!chain.steps.empty()) {
            const CyclicFlatLattice& rl = coatoms_of(z);
            Mask inter = y & z;
            int idx = rl.index_of(inter);
            step.coatom_hit =
                idx >= 0 && std::find(rl.coatoms.begin(), rl.coatoms.end(), idx) != rl.coatoms.end();
        }
        chain.steps.push_back(step);
        y = y_next;
    }
    return chain;
}

ChainLemmaReport check_chain_lemmas(const RepairChain& chain, int ell, int delta) {
    ChainLemmaReport rep;
    for (size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& s = chain.steps[i];
        if (i == 0) {
            if (s.delta_rank > ell)
                rep.violations.push_back("step 1: rank step " + std::to_string(s.delta_rank) +
                                         " exceeds ell = " + std::to_string(ell));
            continue;
        }
        int hit = s.coatom_hit ? 1 : 0;
        int rank_cap = ell - (ell - 1) * hit;
        if (s.delta_rank > rank_cap)
            rep.violations.push_back("step " + std::to_string(i + 1) + ": rank step " +
                                     std::to_string(s.delta_rank) + " exceeds " + std::to_string(rank_cap));
        int nullity_floor = delta - hit;
        if (s.delta_nullity < nullity_floor)
            rep.violations.push_back("step " + std::to_string(i + 1) + ": nullity step " +
                                     std::to_string(s.delta_nullity) + " below " + std::to_string(nullity_floor));
    }
    return rep;
}

std::string tier_name(RepairTier t) {
    switch (t) {
        case RepairTier::Atom:
            return "AtomRepair";
        case RepairTier::LocalSet:
            return "LocalSetRepair";
        default:
            return "GlobalRepair";
    }
}

namespace {

bool xor_identity_holds(const BitMatrix& g, int symbol, Mask xor_of) {
    std::uint64_t v = 0;
    for (Mask t = xor_of; t; t &= t - 1) v ^= g.col_bits(gf2::lowest_bit(t));
    return v == g.col_bits(symbol);
}

// Smallest subset of `pool` whose columns XOR to the target column,
// lexicographically first among ties; nullopt when the target is not in
// the span of the pool.
std::optional<Mask> min_xor_representation(const BitMatrix& g, Mask pool, int target) {
    if (gf2::rank(g, pool) != gf2::rank(g, pool | (Mask{1} << target))) return std::nullopt;
    std::vector<int> cand = gf2::mask_elements_1based(pool);
    const int ncand = static_cast<int>(cand.size());
    const std::uint64_t want = g.col_bits(target);
    for (int s = 1; s <= ncand; ++s) {
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::uint64_t v = 0;
            Mask sub = 0;
            for (int i : idx) {
                int c = cand[i] - 1;
                v ^= g.col_bits(c);
                sub |= Mask{1} << c;
            }
            if (v == want) return sub;
            int i = s - 1;
            while (i >= 0 && idx[i] == ncand - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// Lowest-index independent columns spanning the pool.
Mask greedy_basis(const BitMatrix& g, Mask pool) {
    Mask basis = 0;
    int r = 0;
    for (Mask t = pool; t; t &= t - 1) {
        Mask e = t & (~t + 1);
        if (gf2::rank(g, basis | e) > r) {
            basis |= e;
            ++r;
        }
    }
    return basis;
}

std::optional<RepairPlan> try_atom_repair(const BitMatrix& g, const LocalityProfile& profile, Mask erased) {
    if (gf2::popcount(erased) != 1 || profile.atom_cover.empty()) return std::nullopt;
    int e = gf2::lowest_bit(erased);
    Mask atom = profile.atom_cover[e];
    if (!(atom & erased)) return std::nullopt;
    RepairPlan plan;
    plan.tier = RepairTier::Atom;
    Mask rest = atom & ~erased;
    if (!xor_identity_holds(g, e, rest)) return std::nullopt;
    plan.equations.push_back({e, rest});
    return plan;
}

std::optional<RepairPlan> try_local_set_repair(const BitMatrix& g, const LocalityProfile& profile,
                                               Mask erased) {
    for (const auto& info : profile.repair_sets) {
        if (erased & ~info.elems) continue;  // not confined to this set
        int lost = gf2::popcount(erased);
        if (lost > profile.delta - 1) continue;
        if (info.local_distance <= lost) continue;
        Mask survivors = info.elems & ~erased;
        RepairPlan plan;
        plan.tier = RepairTier::LocalSet;
        bool ok = true;
        for (Mask t = erased; t; t &= t - 1) {
            int e = gf2::lowest_bit(t);
            auto rep = min_xor_representation(g, survivors, e);
            if (!rep || !xor_identity_holds(g, e, *rep)) {
                ok = false;
                break;
            }
            plan.equations.push_back({e, *rep});
        }
        if (ok) return plan;
    }
    return std::nullopt;
}

}  // namespace

RepairPlan plan_repair(const BitMatrix& code, const LocalityProfile& profile, Mask erased) {
    const Mask full = code.column_set();
    if (erased == 0) throw std::invalid_argument("no erased symbols");
    if (erased & ~full) throw std::invalid_argument("erased symbols outside the code");
    if (erased == full) throw UnrepairableError("all symbols erased");

    if (auto plan = try_atom_repair(code, profile, erased)) return *plan;
    if (auto plan = try_local_set_repair(code, profile, erased)) return *plan;

    Mask survivors = full & ~erased;
    if (gf2::rank(code, survivors) < gf2::rank(code, full))
        throw UnrepairableError("erased columns are not in the span of the survivors");
    Mask basis = greedy_basis(code, survivors);
    RepairPlan plan;
    plan.tier = RepairTier::Global;
    for (Mask t = erased; t; t &= t - 1) {
        int e = gf2::lowest_bit(t);
        auto sol = gf2::solve_in_span(code, basis, e);
        if (!sol || !xor_identity_holds(code, e, *sol))
            throw UnrepairableError("column " + std::to_string(e + 1) + " cannot be recovered");
        plan.equations.push_back({e, *sol});
    }
    return plan;
}

std::uint64_t apply_repair(const RepairPlan& plan, std::uint64_t codeword, Mask erased) {
    std::uint64_t received = codeword & ~erased;
    std::uint64_t repaired = received;
    for (const auto& eq : plan.equations) {
        if (eq.xor_of & erased) throw std::logic_error("repair equation uses an erased symbol");
        int bit = gf2::popcount(received & eq.xor_of) & 1;
        if (bit) repaired |= std::uint64_t{1} << eq.symbol;
    }
    return repaired;
}

std::vector<Mask> parse_repair_sets(std::string_view text, int n) {
    std::vector<Mask> sets;
    std::string line;
    std::stringstream ss{std::string(text)};
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        if (line[a] == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw gf2::ParseError("line " + std::to_string(lineno) + ": expected 'name: 1,2,3'");
        Mask z = gf2::parse_mask_1based(line.substr(colon + 1), n);
        if (z == 0) throw gf2::ParseError("line " + std::to_string(lineno) + ": empty repair set");
        sets.push_back(z);
    }
    if (sets.empty()) throw gf2::ParseError("no repair sets found");
    return sets;
}

}  // namespace lrc
