#pragma once

#include <cstdint>
#include <vector>

#include "pacsc/bounds.hpp"
#include "pacsc/errors.hpp"

namespace pacsc::delegation {

/// Communication accounting of the classically-driven delegation protocol:
/// a full description takes T = 3.388 n bits, of which 2n are sent.
struct CdbqcParams {
    int n;        // qubits in the measurement pattern
    double T;     // 3.388 n
    double sent;  // 2 n
    double ratio; // sent / T

    static CdbqcParams from_qubits(int n);

    int string_bits() const;  // ceil(T): length of the hidden string
    int leaked_bits() const;  // floor(0.591 T): bits the server sees
};

/// Quoted bound 2^{(-0.41 + eps + H(eps)) T} alongside the tighter internal
/// form 2^{0.591 T} / 2^{T(1 - eps - H(eps))}.
struct GuessBound {
    bounds::BoundValue quoted;
    bounds::BoundValue internal;
};

GuessBound server_guess_bound(double T, double eps);

/// Root of eps + H(eps) = 0.41: above it the quoted guessing bound stops
/// decaying. Lands in (0.06, 0.07).
double guess_threshold();

/// Smallest eps with 1 - H(eps) <= ratio: error floor for a server that
/// decodes with certainty. For ratio 0.591 it lands in (0.08, 0.09).
double perfect_decoder_epsilon_floor(double ratio);

/// How the adversary completes the unseen suffix.
enum class PadStrategy { zero_pad, random_pad, majority_pad };

struct GamePoint {
    double eps;
    double probability; // P[d_H(C, C') <= eps T], exact or empirical
    double bound;       // clamped quoted bound at this eps
};

/// Exact curve for a prefix leak: the unseen suffix contributes a
/// Binomial(L, 1/2) Hamming distance regardless of the (fixed) pad.
std::vector<GamePoint> guessing_game_prefix_exact(int total_bits, int leaked_bits,
                                                  double T_real,
                                                  const std::vector<double>& eps_grid);

/// Monte Carlo curve for a prefix leak and a concrete pad strategy.
std::vector<GamePoint> guessing_game_monte_carlo(int total_bits, int leaked_bits,
                                                 double T_real, PadStrategy strategy,
                                                 int trials, std::uint64_t seed,
                                                 const std::vector<double>& eps_grid);

} // namespace pacsc::delegation
