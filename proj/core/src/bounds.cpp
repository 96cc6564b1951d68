#include "bihole/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bihole {

double xi_of_delta(int delta, double tol) {
    if (delta < 1) throw std::invalid_argument("xi_of_delta: delta must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("xi_of_delta: tol must be positive");
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (std::pow(mid, delta) + mid < 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double truncate5(double v) { return std::floor(v * 1e5 + 1e-12) / 1e5; }
double round_up4(double v) { return std::ceil(v * 1e4 - 1e-9) / 1e4; }

}  // namespace

double lower_constant(int delta) {
    if (delta < 2) throw std::invalid_argument("lower_constant: delta must be >= 2");
    double value = 0.5;
    for (int d = 3; d <= delta; ++d) value = truncate5(value * xi_of_delta(d, 1e-12));
    return value;
}

namespace {

double beta_log_expression(double b, int delta) {
    return 2.0 * delta * (1.0 - b) * std::log(1.0 - b) - 2.0 * b * std::log(b) -
           2.0 * (1.0 - b) * std::log(1.0 - b) -
           delta * (1.0 - 2.0 * b) * std::log(1.0 - 2.0 * b);
}

}  // namespace

double beta_threshold(int delta, double tol) {
    if (delta < 3) throw std::invalid_argument("beta_threshold: delta must be >= 3");
    if (!(tol > 0.0)) throw std::invalid_argument("beta_threshold: tol must be positive");
    double lo = 1e-9, hi = 0.5 - 1e-12;
    if (!(beta_log_expression(lo, delta) > 0.0 && beta_log_expression(hi, delta) < 0.0))
        throw std::runtime_error("beta_threshold: no sign change for delta = " +
                                 std::to_string(delta));
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (beta_log_expression(mid, delta) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

long long floored_subset_size(double x, long long n) {
    return static_cast<long long>(std::floor((1.0 - 2.0 * x) * static_cast<double>(n)));
}

void require_binomial_arg(long long top, long long bottom, const char* name) {
    if (bottom < 0 || bottom > top)
        throw std::invalid_argument(std::string("h_value: invalid binomial argument ") + name +
                                    " = C(" + std::to_string(top) + "," + std::to_string(bottom) +
                                    ")");
}

mpz_class binomial_mpz(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

double log_choose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

mpq_class h_value(double x, long long n, int delta) {
    if (delta < 2) throw std::invalid_argument("h_value: delta must be >= 2");
    if (n < 1) throw std::invalid_argument("h_value: n must be >= 1");
    if (!(x >= 0.0 && x < 0.5)) throw std::invalid_argument("h_value: x must lie in [0, 1/2)");
    const long long m = floored_subset_size(x, n);
    require_binomial_arg(n - delta, m - delta, "C(n-delta, m-delta)");
    require_binomial_arg(n, m - 2, "C(n, m-2)");

    const mpz_class numerator = binomial_mpz(static_cast<unsigned long>(delta), 2) *
                                binomial_mpz(static_cast<unsigned long>(n - delta),
                                             static_cast<unsigned long>(m - delta));
    const mpz_class denominator =
        binomial_mpz(static_cast<unsigned long>(n), static_cast<unsigned long>(m - 2));
    mpq_class h(numerator, denominator);
    h.canonicalize();
    return h;
}

double h_value_loggamma(double x, long long n, int delta) {
    const long long m = floored_subset_size(x, n);
    require_binomial_arg(n - delta, m - delta, "C(n-delta, m-delta)");
    require_binomial_arg(n, m - 2, "C(n, m-2)");
    const double num = log_choose(delta, 2) +
                       log_choose(static_cast<double>(n - delta), static_cast<double>(m - delta));
    const double den = log_choose(static_cast<double>(n), static_cast<double>(m - 2));
    return std::exp(num - den);
}

HEvaluation check_h_inequality(long long n, int delta) {
    HEvaluation eval;
    eval.n = n;
    eval.delta = delta;
    eval.x = 0.5 * std::log(static_cast<double>(delta)) / static_cast<double>(delta);
    eval.h = h_value(eval.x, n, delta);
    eval.h_double = eval.h.get_d();
    eval.rhs = 2.0 * eval.x + 2.0 / static_cast<double>(n);
    // Doubles are rationals, so the comparison itself is exact.
    const mpq_class rhs_exact = mpq_class(2.0 * eval.x) + mpq_class(2, static_cast<long>(n));
    eval.holds = eval.h >= rhs_exact;
    return eval;
}

std::optional<int> empirical_delta0(int delta_max) {
    for (int delta = 3; delta <= delta_max; ++delta) {
        const long long n = static_cast<long long>(
            std::ceil(5.0 * delta * std::log(static_cast<double>(delta))));
        try {
            if (check_h_inequality(n, delta).holds) return delta;
        } catch (const std::invalid_argument&) {
            continue;  // degenerate floored sizes at tiny delta
        }
    }
    return std::nullopt;
}

double chernoff_tail(long long n_trials, double p, double eps, ChernoffSide side) {
    if (!(eps >= 0.0 && eps < 1.0))
        throw std::invalid_argument("chernoff_tail: eps must lie in [0,1)");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("chernoff_tail: p outside [0,1]");
    const double mean = static_cast<double>(n_trials) * p;
    const double divisor = side == ChernoffSide::upper ? 3.0 : 2.0;
    return std::exp(-eps * eps * mean / divisor);
}

DeltaTBounds delta_t_bounds(int t, long long n, double c_const) {
    if (t < 2) throw std::invalid_argument("delta_t_bounds: t must be >= 2");
    if (n < 1) throw std::invalid_argument("delta_t_bounds: n must be >= 1");
    DeltaTBounds b;
    b.t = t;
    b.n = n;
    b.c_const = c_const;
    const double nd = static_cast<double>(n);
    b.lower = nd - c_const * std::pow(nd, 1.0 - 1.0 / t);
    b.upper = nd - c_const * std::pow(nd, 1.0 - 2.0 / (t + 1.0));
    if (t == 2) b.sharp = nd - std::sqrt(nd);
    if (t == 3) b.sharp = nd - std::pow(nd, 2.0 / 3.0);
    return b;
}

double kst_bound(long long n, int t, double c_const) {
    if (t < 2) throw std::invalid_argument("kst_bound: t must be >= 2");
    return c_const * std::pow(static_cast<double>(n), 2.0 - 1.0 / t);
}

std::vector<BoundsTableRow> bounds_table(int delta_min, int delta_max) {
    if (delta_min < 3 || delta_max < delta_min)
        throw std::invalid_argument("bounds_table: need 3 <= delta_min <= delta_max");
    std::vector<BoundsTableRow> rows;
    rows.reserve(static_cast<std::size_t>(delta_max - delta_min + 1));
    for (int d = delta_min; d <= delta_max; ++d)
        rows.push_back({d, lower_constant(d), round_up4(beta_threshold(d))});
    return rows;
}

const std::vector<BoundsTableRow>& published_small_delta_table() {
    static const std::vector<BoundsTableRow> table = {
        {3, 0.34116, 0.4591}, {4, 0.24716, 0.4212}, {5, 0.18657, 0.3887},
        {6, 0.14516, 0.3621}, {7, 0.11562, 0.3395}, {8, 0.09384, 0.3201},
        {9, 0.07735, 0.3031}, {10, 0.06459, 0.2882},
    };
    return table;
}

}  // namespace bihole
