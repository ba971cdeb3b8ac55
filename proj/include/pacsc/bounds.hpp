#pragma once

#include <cstdint>
#include <functional>

#include "pacsc/errors.hpp"

namespace pacsc::bounds {

/// A probability upper bound carried in log2 space. raw may exceed 1 (and may
/// overflow to inf for huge exponents); clamped is what success probabilities
/// are compared against.
struct BoundValue {
    double log2_raw;
    double raw;
    double clamped;

    static BoundValue from_log2(double log2_raw);
};

/// P[X=Z] <= 2^{m-n} for an n-bit message carried by m qubits.
BoundValue nayak_bound(double n, double m);

/// P[d_H(X,Z) <= beta n] <= 2^m / 2^{n(1-beta-H(beta))}, beta in [0, 1/2].
BoundValue pac_nayak_bound(double n, double m, double beta);

/// n H(k/n): log2 upper bound on C(n,k).
double binom_entropy_bound(std::uint64_t n, std::uint64_t k);

/// n H(t/n): log2 upper bound on sum_{i<=t} C(n,i), valid for t <= n/2.
double binom_sum_entropy_bound(std::uint64_t n, std::uint64_t t);

/// Exact C(n,k) for n <= 64 (fits in 64 bits up to the partial half-sums used
/// by the dominance tests).
std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k);

/// Exact sum_{i<=t} C(n,i) for n <= 64, t <= n/2.
std::uint64_t binomial_partial_sum_exact(std::uint64_t n, std::uint64_t t);

/// log2 C(n,k) via lgamma, for n beyond the exact range.
double log2_binomial(double n, double k);

/// (1-delta)(1-H(eps)) n - H(delta): the accessible-information floor forced
/// by approximate decoding success.
double qpsc_lhs(double n, double eps, double delta);

/// Lower bound on the number of l-qubit state copies needed to decode an
/// n-bit string within eps n Hamming error, failure probability delta.
double pac_holevo_min_samples(double n, double l, double eps, double delta);

/// ((1-delta)(1-H(beta)) 2^n - H(delta)) / n: quantum sample floor for
/// learning arbitrary n-bit functions under the Zipf distribution.
double zipf_sample_lower_bound(double n, double beta, double delta);

/// ceil((N/eps) ln(N/delta)): sample count used by the memorization learner.
std::uint64_t memorization_sample_count(std::uint64_t N, double eps, double delta);

/// Bisection on a monotone bracketing interval.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol = 1e-12);

} // namespace pacsc::bounds
