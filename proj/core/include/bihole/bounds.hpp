#ifndef BIHOLE_BOUNDS_HPP
#define BIHOLE_BOUNDS_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace bihole {

/// The unique root in (0,1) of xi^delta + xi = 1, by bisection.
/// Monotone increasing in delta; xi(1) = 1/2.
double xi_of_delta(int delta, double tol = 1e-9);

/// Asymptotic lower-bound constant for f(n,delta)/n: L(2) = 1/2 and
/// L(delta) = L(delta-1) * xi(delta), carried at the 5-decimal precision of
/// the published table (each step truncated downward, which keeps every
/// intermediate value a certified bound; the published column is exactly
/// this chain).
double lower_constant(int delta);

/// Smallest beta in (0, 1/2) at which the pairing-model first-moment
/// expression drops below 1, i.e. the root of
///   G(b) = 2 d (1-b) ln(1-b) - 2 b ln b - 2 (1-b) ln(1-b) - d (1-2b) ln(1-2b),
/// solved on the logarithm because the raw expression under/overflows.
/// Every beta above the root (still below 1/2) certifies f*(n,delta) < beta n.
double beta_threshold(int delta, double tol = 1e-9);

struct HEvaluation {
    double x = 0.0;
    long long n = 0;
    int delta = 0;
    mpq_class h;        // exact rational value
    double h_double = 0.0;
    double rhs = 0.0;   // 2x + 2/n
    bool holds = false; // h >= 2x + 2/n, decided in exact arithmetic
};

/// h(x,n,delta) = C(delta,2) C(n-delta, m-delta) / C(n, m-2) with
/// m = floor((1-2x) n), the floored sizes bihole_random_subset actually
/// uses. Exact integer arithmetic; invalid binomial arguments are rejected
/// naming the offending parameter.
mpq_class h_value(double x, long long n, int delta);

/// Same expression through log-gamma, as an independent evaluation path.
double h_value_loggamma(double x, long long n, int delta);

/// The Theorem-1.1 check at x = log(delta)/(2 delta).
HEvaluation check_h_inequality(long long n, int delta);

/// Smallest delta in [3, delta_max] for which the h-inequality holds at
/// n = ceil(5 delta log delta); nullopt if none does.
std::optional<int> empirical_delta0(int delta_max = 128);

enum class ChernoffSide { upper, lower };

/// Chernoff envelopes for Bin(N, p): exp(-eps^2 Np / 3) for the upper tail,
/// exp(-eps^2 Np / 2) for the lower tail.
double chernoff_tail(long long n_trials, double p, double eps, ChernoffSide side);

struct DeltaTBounds {
    int t = 0;
    long long n = 0;
    double c_const = 0.0;
    double lower = 0.0;  // n - C n^{1-1/t}
    double upper = 0.0;  // n - C n^{1-2/(t+1)}
    /// Main term of the sharp forms known for t = 2 and t = 3
    /// (n - n^{1/2} resp. n - n^{2/3}); the 1+o(1) factor is unresolved.
    std::optional<double> sharp;
};

/// Degree-threshold envelopes for a guaranteed bi-hole of constant size t.
DeltaTBounds delta_t_bounds(int t, long long n, double c_const);

/// Zarankiewicz upper bound z(n,t) <= C n^{2-1/t}.
double kst_bound(long long n, int t, double c_const);

struct BoundsTableRow {
    int delta = 0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Regenerates the small-delta table: lower column from the truncating
/// constant chain, upper column as the beta root rounded up at the table's
/// four decimals (the smallest printed value that still certifies).
std::vector<BoundsTableRow> bounds_table(int delta_min = 3, int delta_max = 10);

/// The eight published rows (delta = 3..10).
const std::vector<BoundsTableRow>& published_small_delta_table();

}  // namespace bihole

#endif
