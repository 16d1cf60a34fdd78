#include "lrc/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace lrc {

namespace {

class MatrixOracle final : public detail::RankOracle {
public:
    explicit MatrixOracle(BitMatrix g) : g_(std::move(g)) {}
    int rank(Mask x) const override { return gf2::rank(g_, x); }
    const BitMatrix* matrix() const override { return &g_; }

private:
    BitMatrix g_;
};

class TableOracle final : public detail::RankOracle {
public:
    TableOracle(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {}
    int rank(Mask x) const override { return table_[x]; }

private:
    int n_;
    std::vector<int> table_;
};

void validate_rank_table(int n, std::span<const int> table) {
    if (n < 0 || n > 16) throw std::invalid_argument("rank table ground set limited to 16 elements");
    if (table.size() != (size_t{1} << n)) throw std::invalid_argument("rank table must cover all 2^n subsets");
    if (table[0] != 0) throw std::invalid_argument("rank axiom violation: rank(empty) != 0");
    const Mask all = gf2::full_mask(n);
    for (Mask x = 0; x <= all; ++x) {
        Mask rest = all & ~x;
        for (Mask t = rest; t; t &= t - 1) {
            int e = gf2::lowest_bit(t);
            int de = table[x | (Mask{1} << e)] - table[x];
            if (de < 0 || de > 1)
                throw std::invalid_argument("rank axiom violation: unit increase fails at X=" +
                                            gf2::format_mask_1based(x) + " e=" + std::to_string(e + 1));
            for (Mask u = t & (t - 1); u; u &= u - 1) {
                int f = gf2::lowest_bit(u);
                Mask xe = x | (Mask{1} << e);
                Mask xf = x | (Mask{1} << f);
                if (table[xe | xf] + table[x] > table[xe] + table[xf])
                    throw std::invalid_argument("rank axiom violation: submodularity fails at X=" +
                                                gf2::format_mask_1based(x) + " e=" + std::to_string(e + 1) +
                                                " f=" + std::to_string(f + 1));
            }
        }
        if (x == all) break;
    }
}

}  // namespace

Matroid Matroid::from_matrix(BitMatrix g) {
    Mask ground = g.column_set();
    return Matroid(ground, std::make_shared<MatrixOracle>(std::move(g)),
                   std::make_shared<detail::RankMemo>());
}

Matroid Matroid::from_rank_table(int n, std::span<const int> table) {
    validate_rank_table(n, table);
    return Matroid(gf2::full_mask(n),
                   std::make_shared<TableOracle>(n, std::vector<int>(table.begin(), table.end())),
                   std::make_shared<detail::RankMemo>());
}

void Matroid::check_subset(Mask x) const {
    if (x & ~ground_) throw std::invalid_argument("subset outside ground set");
}

int Matroid::rank(Mask x) const {
    check_subset(x);
    {
        std::shared_lock lk(memo_->mu);
        auto it = memo_->values.find(x);
        if (it != memo_->values.end()) return it->second;
    }
    int r = oracle_->rank(x);
    {
        std::unique_lock lk(memo_->mu);
        memo_->values.emplace(x, r);
    }
    return r;
}

Mask Matroid::closure(Mask x) const {
    check_subset(x);
    const int rx = rank(x);
    Mask out = x;
    for (Mask t = ground_ & ~x; t; t &= t - 1) {
        Mask e = t & (~t + 1);
        if (rank(x | e) == rx) out |= e;
    }
    return out;
}

Mask Matroid::cyc(Mask x) const {
    check_subset(x);
    const int rx = rank(x);
    Mask out = 0;
    for (Mask t = x; t; t &= t - 1) {
        Mask e = t & (~t + 1);
        if (rank(x & ~e) == rx) out |= e;
    }
    return out;
}

bool Matroid::is_loop(int e) const { return rank(Mask{1} << e) == 0; }

bool Matroid::is_coloop(int e) const {
    Mask bit = Mask{1} << e;
    check_subset(bit);
    return rank(ground_ & ~bit) < rank(ground_);
}

bool Matroid::is_simple_no_coloops() const {
    std::vector<int> elems;
    for (Mask t = ground_; t; t &= t - 1) elems.push_back(gf2::lowest_bit(t));
    for (int e : elems)
        if (is_loop(e) || is_coloop(e)) return false;
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j) {
            Mask pair = (Mask{1} << elems[i]) | (Mask{1} << elems[j]);
            if (rank(pair) < 2) return false;
        }
    return true;
}

Mask Matroid::min_circuit_through(int e) const {
    Mask ebit = Mask{1} << e;
    check_subset(ebit);
    if (is_loop(e)) return ebit;  // a loop is itself a circuit
    if (is_coloop(e)) throw CoLoopError("element " + std::to_string(e + 1) + " is a co-loop");

    std::vector<int> cand;
    for (Mask t = ground_ & ~ebit; t; t &= t - 1) cand.push_back(gf2::lowest_bit(t));
    const int ncand = static_cast<int>(cand.size());

    // Breadth-first by support size: the first independent S with e in cl(S)
    // gives the (size-minimal, lexicographically first) circuit S + e.
    for (int s = 1; s <= ncand; ++s) {
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            Mask sub = 0;
            for (int i : idx) sub |= Mask{1} << cand[i];
            if (rank(sub) == s && rank(sub | ebit) == s) return sub | ebit;
            int i = s - 1;
            while (i >= 0 && idx[i] == ncand - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw CoLoopError("no circuit through element " + std::to_string(e + 1));
}

Matroid Matroid::restrict(Mask x) const {
    check_subset(x);
    return Matroid(x, oracle_, memo_);
}

}  // namespace lrc
