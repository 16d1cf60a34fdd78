#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {
namespace bounds {

// Exact rational in [0,1] for the alpha parameter; no floating point is
// used anywhere in bound evaluation.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational parse(const std::string& text);  // "p/q" or "p"
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string text() const;
    bool operator==(const Rational&) const = default;
};

/// ceil(a/b) for a >= 0, b > 0.
long long ceil_div(long long a, long long b);

// d <= n-k+1 - (ceil(k/r)-1)(delta-1)
int bound_kamath(int n, int k, int r, int delta);

// d <= n-k - (ceil(k/ell)-1)(delta-1)
int bound_ell_singleton(int n, int k, int ell, int delta);

// d <= n-k+1+delta - ceil( ceil(k/(ell-(ell-1)a)) * (delta-a) )
int bound_alpha(int n, int k, int ell, int delta, const Rational& alpha);

// d <= n-k+1 - (ceil(k/ell)-1)delta + [ell | k-1]
int bound_noalpha(int n, int k, int ell, int delta);

// d <= n-k+1 - (ceil(k/ell)-1)delta + [ell | k-1 and ell+1 != k]
int bound_ldelta(int n, int k, int ell, int delta);

// bound_ldelta at ell = r-1 with indicator [(r-1) | k-1 and r != k]
int bound_best_corollary(int n, int k, int r, int delta);

/// Upper bound on the dimension of a binary linear code of length n and
/// minimum distance >= d. Odd d is extended to (n+1, d+1); lengths >= 2d
/// are shortened one column at a time; the base case applies the Plotkin
/// count |C| <= 2*floor(d/(2d-n)).
int kopt_plotkin(int n, int d);

struct CmRow {
    int t = 0;
    int n_eff = 0;  // n - t(r+delta-1)
    int kopt = 0;
    int value = 0;  // t*r + kopt
};

struct CmBound {
    int k_max = 0;
    int best_t = 0;
    std::string estimator = "plotkin_shortening";
    std::vector<CmRow> table;  // one row per feasible t, ascending
};

// k <= min over t >= 0 with n - t(r+delta-1) >= d of t*r + kopt(n-t(r+delta-1), d).
// The dimension estimator is pluggable (Singleton, Griesmer, ...) for
// sensitivity analysis; the default is kopt_plotkin.
using KoptEstimator = int (*)(int, int);
CmBound bound_cm_delta(int n, int d, int r, int delta, KoptEstimator kopt = kopt_plotkin);

/// k <= n - d + 1, the trivial estimator alternative.
int kopt_singleton(int n, int d);
/// Largest k whose Griesmer sum fits in n.
int kopt_griesmer(int n, int d);

struct ComparisonReport {
    long long lhs = 0;            // k + ceil(k/ell)*delta - indicator(k)
    long long rhs_cm = 0;         // same expression evaluated at k_max
    long long rhs_singleton = 0;  // n - d + 1 + delta
    int k_max = 0;
    bool cm_tighter = false;
    bool singleton_tighter = false;
    bool equality_singleton = false;
};

ComparisonReport compare_cm_vs_new(int n, int d, int r, int delta, int ell, int k);

struct BoundReport {
    int n = 0, k = 0, r = 0, delta = 0;
    std::optional<int> ell;
    std::optional<Rational> alpha;
    std::optional<int> actual_d;
    struct Entry {
        std::string name;
        int value = 0;
        bool applicable = true;
        std::string note;
        std::optional<bool> achieved;
    };
    std::vector<Entry> entries;
};

/// Evaluate every bound whose inputs are available. Values are computed even
/// when the applicability hypotheses (delta > 2, binary, no replication) do
/// not hold; the flag is recorded instead.
BoundReport evaluate_bounds(int n, int k, int r, int delta, std::optional<int> ell,
                            std::optional<Rational> alpha, std::optional<int> actual_d);

struct SweepRow {
    int r = 0, k = 0;
    int old_bound = 0;  // bound_kamath
    int new_bound = 0;  // bound_best_corollary
};

std::vector<SweepRow> sweep(int n, int delta, const std::vector<int>& r_values, int k_lo, int k_hi);
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct AlphaViolation {
    Rational a1, a2;  // a1 < a2 but bound(a1) < bound(a2)
    int v1 = 0, v2 = 0;
};

/// Sample alpha = i/samples for i = 0..samples and report every adjacent pair
/// where the bound increases. The alpha bound is not monotone in general;
/// this reports the exceptions instead of asserting their absence.
std::vector<AlphaViolation> alpha_monotonicity_violations(int n, int k, int ell, int delta, int samples);

}  // namespace bounds
}  // namespace lrc
