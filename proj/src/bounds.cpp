#include "pacsc/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "pacsc/info.hpp"

namespace pacsc::bounds {

BoundValue BoundValue::from_log2(double log2_raw) {
    BoundValue b;
    b.log2_raw = log2_raw;
    b.raw = std::exp2(log2_raw);
    b.clamped = std::min(b.raw, 1.0);
    return b;
}

BoundValue nayak_bound(double n, double m) {
    if (n < 1.0 || m < 0.0) throw DomainError("nayak_bound: need n >= 1, m >= 0");
    return BoundValue::from_log2(m - n);
}

BoundValue pac_nayak_bound(double n, double m, double beta) {
    if (n < 1.0 || m < 0.0) throw DomainError("pac_nayak_bound: need n >= 1, m >= 0");
    if (!(beta >= 0.0 && beta <= 0.5))
        throw DomainError("pac_nayak_bound: beta outside [0, 1/2]");
    const double h = info::binary_entropy(beta);
    return BoundValue::from_log2(m - n * (1.0 - beta - h));
}

double binom_entropy_bound(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw DomainError("binom_entropy_bound: k > n");
    if (n == 0) return 0.0;
    return static_cast<double>(n) *
           info::binary_entropy(static_cast<double>(k) / static_cast<double>(n));
}

double binom_sum_entropy_bound(std::uint64_t n, std::uint64_t t) {
    if (2 * t > n) throw DomainError("binom_sum_entropy_bound: t > n/2");
    return binom_entropy_bound(n, t);
}

std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw DomainError("binomial_exact: k > n");
    if (n > 64) throw DomainError("binomial_exact: n > 64");
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return static_cast<std::uint64_t>(c);
}

std::uint64_t binomial_partial_sum_exact(std::uint64_t n, std::uint64_t t) {
    if (2 * t > n) throw DomainError("binomial_partial_sum_exact: t > n/2");
    std::uint64_t s = 0;
    for (std::uint64_t i = 0; i <= t; ++i) s += binomial_exact(n, i);
    return s;
}

double log2_binomial(double n, double k) {
    if (k < 0.0 || k > n) throw DomainError("log2_binomial: k outside [0, n]");
    constexpr double ln2 = 0.6931471805599453;
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / ln2;
}

double qpsc_lhs(double n, double eps, double delta) {
    if (!(eps >= 0.0 && eps < 0.5)) throw DomainError("qpsc_lhs: eps outside [0, 1/2)");
    if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("qpsc_lhs: delta outside [0, 1]");
    if (n < 1.0) throw DomainError("qpsc_lhs: n >= 1 required");
    return (1.0 - delta) * (1.0 - info::binary_entropy(eps)) * n -
           info::binary_entropy(delta);
}

double pac_holevo_min_samples(double n, double l, double eps, double delta) {
    if (l < 1.0) throw DomainError("pac_holevo_min_samples: l >= 1 required");
    return qpsc_lhs(n, eps, delta) / l;
}

double zipf_sample_lower_bound(double n, double beta, double delta) {
    if (!(beta >= 0.0 && beta <= 0.5))
        throw DomainError("zipf_sample_lower_bound: beta outside [0, 1/2]");
    if (!(delta >= 0.0 && delta <= 1.0))
        throw DomainError("zipf_sample_lower_bound: delta outside [0, 1]");
    if (n < 1.0) throw DomainError("zipf_sample_lower_bound: n >= 1 required");
    const double N = std::exp2(n);
    return ((1.0 - delta) * (1.0 - info::binary_entropy(beta)) * N -
            info::binary_entropy(delta)) /
           n;
}

std::uint64_t memorization_sample_count(std::uint64_t N, double eps, double delta) {
    if (N < 1) throw DomainError("memorization_sample_count: N >= 1 required");
    if (!(eps > 0.0 && eps <= 1.0))
        throw DomainError("memorization_sample_count: eps outside (0, 1]");
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("memorization_sample_count: delta outside (0, 1)");
    const double m = (static_cast<double>(N) / eps) *
                     std::log(static_cast<double>(N) / delta);
    return static_cast<std::uint64_t>(std::ceil(std::max(m, 1.0)));
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw NoSignChange("bisect_root: f(lo) and f(hi) same sign");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (fm * flo < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace pacsc::bounds
