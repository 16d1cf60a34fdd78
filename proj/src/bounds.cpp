#include "lrc/bounds.hpp"

#include <numeric>

namespace lrc {
namespace bounds {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

void check_common(int n, int k) {
    require(n >= 1, "n must be positive");
    require(k >= 1 && k <= n, "k must satisfy 1 <= k <= n");
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    require(d > 0, "rational denominator must be positive");
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text), 1);
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::domain_error("cannot parse rational '" + text + "'");
    }
}

std::string Rational::text() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

long long ceil_div(long long a, long long b) {
    require(b > 0 && a >= 0, "ceil_div expects nonnegative numerator, positive denominator");
    return (a + b - 1) / b;
}

int bound_kamath(int n, int k, int r, int delta) {
    check_common(n, k);
    require(r >= 1, "r must be >= 1");
    require(delta >= 2, "delta must be >= 2");
    return static_cast<int>(n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1));
}

int bound_ell_singleton(int n, int k, int ell, int delta) {
    check_common(n, k);
    require(ell >= 1, "ell must be >= 1");
    require(delta >= 2, "delta must be >= 2");
    return static_cast<int>(n - k - (ceil_div(k, ell) - 1) * (delta - 1));
}

int bound_alpha(int n, int k, int ell, int delta, const Rational& alpha) {
    check_common(n, k);
    require(ell >= 1, "ell must be >= 1");
    require(delta >= 2, "delta must be >= 2");
    require(alpha.num >= 0 && alpha.num <= alpha.den, "alpha must lie in [0,1]");
    const long long p = alpha.num, q = alpha.den;
    // ell - (ell-1)*alpha = (ell*q - (ell-1)*p) / q  > 0 since alpha <= 1
    const long long denom = static_cast<long long>(ell) * q - static_cast<long long>(ell - 1) * p;
    const long long h = ceil_div(static_cast<long long>(k) * q, denom);
    // ceil( h * (delta - alpha) ) = ceil( h * (delta*q - p) / q )
    const long long inner = ceil_div(h * (static_cast<long long>(delta) * q - p), q);
    return static_cast<int>(n - k + 1 + delta - inner);
}

int bound_noalpha(int n, int k, int ell, int delta) {
    check_common(n, k);
    require(ell >= 1, "ell must be >= 1");
    require(delta >= 2, "delta must be >= 2");
    int indicator = ((k - 1) % ell == 0) ? 1 : 0;
    return static_cast<int>(n - k + 1 - (ceil_div(k, ell) - 1) * delta + indicator);
}

int bound_ldelta(int n, int k, int ell, int delta) {
    check_common(n, k);
    require(ell >= 1, "ell must be >= 1");
    require(delta >= 2, "delta must be >= 2");
    int indicator = ((k - 1) % ell == 0 && ell + 1 != k) ? 1 : 0;
    return static_cast<int>(n - k + 1 - (ceil_div(k, ell) - 1) * delta + indicator);
}

int bound_best_corollary(int n, int k, int r, int delta) {
    check_common(n, k);
    require(r >= 2, "r must be >= 2");
    require(delta >= 2, "delta must be >= 2");
    int ell = r - 1;
    int indicator = ((k - 1) % ell == 0 && r != k) ? 1 : 0;
    return static_cast<int>(n - k + 1 - (ceil_div(k, ell) - 1) * delta + indicator);
}

int kopt_plotkin(int n, int d) {
    require(n >= 1, "n must be positive");
    require(d >= 1 && d <= n, "d must satisfy 1 <= d <= n");
    if (d % 2 == 1) {
        n += 1;
        d += 1;
    }
    int k = 0;
    while (n >= 2 * d) {
        ++k;
        --n;
    }
    // now d <= n < 2d: |C| <= 2*floor(d/(2d-n))
    long long count = 2LL * (d / (2 * d - n));
    int log2 = 0;
    while ((1LL << (log2 + 1)) <= count) ++log2;
    k += log2;
    return k > 0 ? k : 0;
}

int kopt_singleton(int n, int d) {
    require(d >= 1 && d <= n, "d must satisfy 1 <= d <= n");
    return n - d + 1;
}

int kopt_griesmer(int n, int d) {
    require(d >= 1 && d <= n, "d must satisfy 1 <= d <= n");
    int best = 0;
    for (int k = 1; k <= n; ++k) {
        long long sum = 0;
        for (int i = 0; i < k; ++i) sum += ceil_div(d, 1LL << i);
        if (sum <= n)
            best = k;
        else
            break;
    }
    return best;
}

CmBound bound_cm_delta(int n, int d, int r, int delta, KoptEstimator kopt) {
    require(n >= 1 && d >= 1, "n and d must be positive");
    require(r >= 1, "r must be >= 1");
    require(delta >= 2, "delta must be >= 2");
    CmBound out;
    const int group = r + delta - 1;
    bool any = false;
    for (int t = 0;; ++t) {
        int n_eff = n - t * group;
        if (n_eff < d) break;
        CmRow row{t, n_eff, kopt(n_eff, d), 0};
        row.value = t * r + row.kopt;
        if (!any || row.value < out.k_max) {
            out.k_max = row.value;
            out.best_t = t;
        }
        any = true;
        out.table.push_back(row);
    }
    require(any, "no feasible t: n < d");
    return out;
}

namespace {

long long comparison_lhs(int k, int ell, int delta) {
    int indicator = ((k - 1) % ell == 0 && ell != k - 1) ? 1 : 0;
    return k + ceil_div(k, ell) * delta - indicator;
}

}  // namespace

ComparisonReport compare_cm_vs_new(int n, int d, int r, int delta, int ell, int k) {
    check_common(n, k);
    require(ell >= 1, "ell must be >= 1");
    require(delta >= 2, "delta must be >= 2");
    ComparisonReport rep;
    rep.k_max = bound_cm_delta(n, d, r, delta).k_max;
    rep.lhs = comparison_lhs(k, ell, delta);
    rep.rhs_cm = comparison_lhs(rep.k_max, ell, delta);
    rep.rhs_singleton = n - d + 1 + delta;
    rep.cm_tighter = rep.rhs_cm < rep.rhs_singleton;
    rep.singleton_tighter = rep.rhs_singleton < rep.rhs_cm;
    rep.equality_singleton = rep.lhs == rep.rhs_singleton;
    return rep;
}

BoundReport evaluate_bounds(int n, int k, int r, int delta, std::optional<int> ell,
                            std::optional<Rational> alpha, std::optional<int> actual_d) {
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.delta = delta;
    rep.ell = ell;
    rep.alpha = alpha;
    rep.actual_d = actual_d;
    const bool delta_gt2 = delta > 2;
    const std::string delta_note = delta_gt2 ? "" : "requires delta > 2";
    auto add = [&](const std::string& name, int value, bool applicable, const std::string& note) {
        BoundReport::Entry e{name, value, applicable, note, std::nullopt};
        if (actual_d) e.achieved = (*actual_d == value);
        rep.entries.push_back(std::move(e));
    };

    add("kamath", bound_kamath(n, k, r, delta), true, "");
    if (r >= 2) add("best_corollary", bound_best_corollary(n, k, r, delta), delta_gt2, delta_note);
    if (ell) {
        add("ell_singleton", bound_ell_singleton(n, k, *ell, delta), delta_gt2, delta_note);
        add("noalpha", bound_noalpha(n, k, *ell, delta), delta_gt2, delta_note);
        add("ldelta", bound_ldelta(n, k, *ell, delta), delta_gt2, delta_note);
        if (alpha) add("alpha", bound_alpha(n, k, *ell, delta, *alpha), delta_gt2, delta_note);
    }
    return rep;
}

std::vector<SweepRow> sweep(int n, int delta, const std::vector<int>& r_values, int k_lo, int k_hi) {
    require(k_lo >= 1 && k_hi <= n && k_lo <= k_hi, "sweep k range invalid");
    std::vector<SweepRow> rows;
    for (int r : r_values) {
        require(r >= 2, "sweep requires r >= 2");
        for (int k = k_lo; k <= k_hi; ++k)
            rows.push_back({r, k, bound_kamath(n, k, r, delta), bound_best_corollary(n, k, r, delta)});
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "r,k,old_bound,new_bound\n";
    for (const auto& row : rows)
        out += std::to_string(row.r) + "," + std::to_string(row.k) + "," + std::to_string(row.old_bound) +
               "," + std::to_string(row.new_bound) + "\n";
    return out;
}

std::vector<AlphaViolation> alpha_monotonicity_violations(int n, int k, int ell, int delta, int samples) {
    require(samples >= 1, "need at least one sample step");
    std::vector<AlphaViolation> out;
    Rational prev(0, 1);
    int prev_v = bound_alpha(n, k, ell, delta, prev);
    for (int i = 1; i <= samples; ++i) {
        Rational a(i, samples);
        int v = bound_alpha(n, k, ell, delta, a);
        if (v > prev_v) out.push_back({prev, a, prev_v, v});
        prev = a;
        prev_v = v;
    }
    return out;
}

}  // namespace bounds
}  // namespace lrc
