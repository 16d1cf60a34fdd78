#pragma once

#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>

#include "lrc/gf2.hpp"

namespace lrc {

class CoLoopError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

class RankOracle {
public:
    virtual ~RankOracle() = default;
    virtual int rank(Mask x) const = 0;
    virtual const BitMatrix* matrix() const { return nullptr; }
};

// Fill-once rank cache. Concurrent readers may race to compute the same
// subset; both arrive at the same value, so last-write-wins is consistent.
struct RankMemo {
    mutable std::shared_mutex mu;
    mutable std::unordered_map<Mask, int> values;
};

}  // namespace detail

// A matroid given by a ground set and a rank oracle (a generator matrix or
// an explicit rank table). Restrictions share the oracle and the memo.
class Matroid {
public:
    static Matroid from_matrix(BitMatrix g);

    /// Explicit table over all subsets of {0..n-1}; n <= 16. Construction
    /// verifies the rank axioms on every subset (via the local exchange
    /// conditions, which are equivalent to R.1-R.3) and throws on violation.
    static Matroid from_rank_table(int n, std::span<const int> table);

    Mask ground() const { return ground_; }
    int size() const { return gf2::popcount(ground_); }

    int rank(Mask x) const;
    int rank() const { return rank(ground_); }
    int nullity(Mask x) const { return gf2::popcount(x) - rank(x); }

    /// cl(X) = X + { e outside X : adding e keeps the rank }.
    Mask closure(Mask x) const;
    /// cyc(X) = { e in X : removing e keeps the rank }.
    Mask cyc(Mask x) const;

    bool is_loop(int e) const;
    bool is_coloop(int e) const;
    bool is_simple_no_coloops() const;

    /// A minimum-cardinality circuit containing e (lexicographically first
    /// among smallest). Throws CoLoopError when e is a co-loop.
    Mask min_circuit_through(int e) const;

    Matroid restrict(Mask x) const;

    /// Backing generator matrix, or nullptr for table-backed matroids.
    const BitMatrix* matrix() const { return oracle_->matrix(); }

private:
    Matroid(Mask ground, std::shared_ptr<const detail::RankOracle> oracle,
            std::shared_ptr<detail::RankMemo> memo)
        : ground_(ground), oracle_(std::move(oracle)), memo_(std::move(memo)) {}

    void check_subset(Mask x) const;

    Mask ground_;
    std::shared_ptr<const detail::RankOracle> oracle_;
    std::shared_ptr<detail::RankMemo> memo_;
};

}  // namespace lrc
