#include "pacsc/delegation.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "pacsc/info.hpp"

namespace pacsc::delegation {

namespace {

constexpr double kBitsPerQubit = 3.388; // description bits per pattern qubit
constexpr double kSentRatio = 0.591;    // communicated fraction of T
constexpr double kQuotedExponent = 0.41;

} // namespace

CdbqcParams CdbqcParams::from_qubits(int n) {
    if (n < 1) throw DomainError("CdbqcParams: n >= 1 required");
    CdbqcParams p;
    p.n = n;
    p.T = kBitsPerQubit * n;
    p.sent = 2.0 * n;
    p.ratio = p.sent / p.T;
    return p;
}

int CdbqcParams::string_bits() const { return static_cast<int>(std::ceil(T)); }

int CdbqcParams::leaked_bits() const { return static_cast<int>(std::floor(kSentRatio * T)); }

GuessBound server_guess_bound(double T, double eps) {
    if (T <= 0.0) throw DomainError("server_guess_bound: T > 0 required");
    if (!(eps >= 0.0 && eps <= 0.5))
        throw DomainError("server_guess_bound: eps outside [0, 1/2]");
    const double h = info::binary_entropy(eps);
    GuessBound g;
    g.quoted = bounds::BoundValue::from_log2((-kQuotedExponent + eps + h) * T);
    // integer-size reading of the game: ceil(T)-bit string, floor(0.591 T)
    // leaked bits; never looser than the quoted form by more than 0.01 T
    g.internal = bounds::pac_nayak_bound(std::ceil(T), std::floor(kSentRatio * T), eps);
    return g;
}

double guess_threshold() {
    const double root = bounds::bisect_root(
        [](double e) { return e + info::binary_entropy(e) - kQuotedExponent; }, 0.01, 0.2);
    if (!(root > 0.06 && root < 0.07))
        throw DomainError("guess_threshold: root outside the expected bracket");
    return root;
}

double perfect_decoder_epsilon_floor(double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw DomainError("perfect_decoder_epsilon_floor: ratio outside (0, 1)");
    return bounds::bisect_root(
        [ratio](double e) { return info::binary_entropy(e) - (1.0 - ratio); }, 1e-9,
        0.5);
}

std::vector<GamePoint> guessing_game_prefix_exact(int total_bits, int leaked_bits,
                                                  double T_real,
                                                  const std::vector<double>& eps_grid) {
    if (total_bits < 1 || leaked_bits < 0 || leaked_bits > total_bits)
        throw DomainError("guessing_game_prefix_exact: bad bit counts");
    if (total_bits > 64) throw TooLarge("guessing_game_prefix_exact: total_bits > 64");
    const int suffix = total_bits - leaked_bits;

    std::vector<GamePoint> curve;
    curve.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        const int allowed = static_cast<int>(std::floor(eps * T_real));
        double p;
        if (suffix == 0) {
            p = 1.0;
        } else {
            const int k = std::min(allowed, suffix);
            double tail = 0.0;
            for (int i = 0; i <= k; ++i)
                tail += static_cast<double>(bounds::binomial_exact(suffix, i));
            p = tail * std::exp2(-static_cast<double>(suffix));
        }
        const double bound =
            eps <= 0.5 ? server_guess_bound(T_real, eps).quoted.clamped : 1.0;
        curve.push_back(GamePoint{eps, std::min(p, 1.0), bound});
    }
    return curve;
}

std::vector<GamePoint> guessing_game_monte_carlo(int total_bits, int leaked_bits,
                                                 double T_real, PadStrategy strategy,
                                                 int trials, std::uint64_t seed,
                                                 const std::vector<double>& eps_grid) {
    if (total_bits < 1 || total_bits > 64 || leaked_bits < 0 || leaked_bits > total_bits)
        throw DomainError("guessing_game_monte_carlo: bad bit counts");
    if (trials < 1) throw DomainError("guessing_game_monte_carlo: trials >= 1");
    const int suffix = total_bits - leaked_bits;
    const std::uint64_t suffix_mask =
        suffix >= 64 ? ~0ULL : ((1ULL << suffix) - 1ULL);

    std::mt19937_64 rng(seed);
    std::vector<int> distance_hist(total_bits + 1, 0);
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t secret =
            total_bits >= 64 ? rng() : (rng() & ((1ULL << total_bits) - 1ULL));
        std::uint64_t pad = 0;
        switch (strategy) {
            case PadStrategy::zero_pad:
                pad = 0;
                break;
            case PadStrategy::random_pad:
                pad = rng() & suffix_mask;
                break;
            case PadStrategy::majority_pad:
                // uniform prior: both suffix values tie, fixed to 0
                pad = 0;
                break;
        }
        // prefix is reproduced exactly; only the suffix can disagree
        const int d = std::popcount((secret & suffix_mask) ^ pad);
        ++distance_hist[d];
    }

    std::vector<GamePoint> curve;
    curve.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        const int allowed = static_cast<int>(std::floor(eps * T_real));
        double count = 0.0;
        for (int d = 0; d <= std::min(allowed, total_bits); ++d) count += distance_hist[d];
        const double bound =
            eps <= 0.5 ? server_guess_bound(T_real, eps).quoted.clamped : 1.0;
        curve.push_back(GamePoint{eps, count / trials, bound});
    }
    return curve;
}

} // namespace pacsc::delegation
