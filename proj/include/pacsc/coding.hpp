#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pacsc/errors.hpp"
#include "pacsc/info.hpp"

namespace pacsc::coding {

/// Fixed-length binary word. Bit 0 is the most significant ("first") bit.
struct BitString {
    int length;
    std::uint32_t bits;
};

int hamming_distance(std::uint32_t a, std::uint32_t b);

/// Maps n-bit messages to 2^m-dimensional states.
struct Encoder {
    int n;
    int m;
    std::function<info::DensityMatrix(std::uint32_t)> encode;
};

/// PSD elements labeled by n-bit strings, summing to identity.
struct Povm {
    std::size_t dim;
    int label_bits;
    std::vector<linalg::ComplexMatrix> elements;
    std::vector<std::uint32_t> labels;

    Povm(std::size_t dim, int label_bits, std::vector<linalg::ComplexMatrix> elements,
         std::vector<std::uint32_t> labels);
};

/// Dense P(x,z) over {0,1}^n x {0,1}^n. Negative dust above -1e-12 is clamped
/// and the table renormalized.
class JointDistribution {
public:
    JointDistribution(int n, std::vector<double> table);

    int n() const { return n_; }
    std::size_t side() const { return std::size_t{1} << n_; }
    double operator()(std::uint32_t x, std::uint32_t z) const {
        return table_[(std::size_t{x} << n_) | z];
    }

    info::JointTable to_table() const;

private:
    int n_;
    std::vector<double> table_;
};

/// Sum of P(x,z) over pairs with d_H(x,z) <= t.
double hamming_success(const JointDistribution& j, int t);

/// Message-observation joint P(x,y): x an n-bit string, y an arbitrary
/// finite outcome (POVM outcome, codeword, ...). What a decoder sees.
struct ObservationChannel {
    int n;
    std::size_t ny;
    std::vector<double> joint; // row x, column y

    double operator()(std::uint32_t x, std::size_t y) const { return joint[x * ny + y]; }
};

struct OptimalDecodeResult {
    std::vector<std::uint32_t> decode; // y -> z, ties broken to smallest z
    double success;                    // max over deterministic decoders of P[d_H <= t]
};

/// Brute-force optimum of P[d_H(X, decode(Y)) <= t] over deterministic
/// decoders, by exhaustive radius-t ball scan. Requires n <= 12.
OptimalDecodeResult optimal_hamming_decoder(const ObservationChannel& ch, int t);

/// As above for every t in 0..t_max at once (one pairwise scan per outcome).
std::vector<OptimalDecodeResult> optimal_hamming_decoder_curve(
    const ObservationChannel& ch, int t_max);

/// Joint of (X, decode(Y)) for a fixed decode map.
JointDistribution apply_decoder(const ObservationChannel& ch,
                                const std::vector<std::uint32_t>& decode);

// --- concrete schemes -------------------------------------------------------

/// Encodes the first m bits of X as a computational-basis state.
Encoder truncation_encoder(int n, int m);

/// The deterministic truncation decode: observation y (m bits) -> y padded
/// with zeros to n bits.
std::uint32_t truncation_decode(int n, int m, std::uint32_t y);

/// Classical code: X -> basis state of codewords[X] (m bits each).
Encoder classical_code_encoder(int n, int m, std::vector<std::uint32_t> codewords);

/// Seeded random codeword table for a (n, m) classical code.
std::vector<std::uint32_t> random_codewords(int n, int m, std::uint64_t seed);

/// The four 2->1 QRAC states, Bloch vectors ((+-1)/sqrt2, 0, (+-1)/sqrt2).
/// Bit 1 is read in the Z basis, bit 2 in the X basis, each with success
/// (1 + 1/sqrt2)/2.
Encoder qrac_2to1_encoder();

/// Tensor-product scheme: copies independent uses of the block encoder.
/// Dense evaluation requires copies * block.m <= 12.
Encoder product_encoder(const Encoder& block, int copies);

/// E_x = rho^{-1/2} p_x sigma_x rho^{-1/2} (pseudo-inverse on the support),
/// completed to identity by splitting I - P_support equally across outcomes.
Povm pretty_good_measurement(const info::Ensemble& e);

/// Ensemble induced by an encoder under a prior over {0,1}^n.
info::Ensemble ensemble_from(const Encoder& enc, const info::DiscreteDistribution& prior);

/// P(x,z) = p(x) tr(E_z sigma_x).
JointDistribution joint_distribution(const info::Ensemble& e, const Povm& p);

/// Same table viewed as a message-observation channel (observation = POVM
/// outcome), for feeding the brute-force decoder oracle.
ObservationChannel observation_channel(const info::Ensemble& e, const Povm& p);

/// Observation channel of a classical code under a prior: y = codewords[x].
ObservationChannel classical_observation(int n, int m,
                                         const std::vector<std::uint32_t>& codewords,
                                         const info::DiscreteDistribution& prior);

// --- factored product-scheme evaluation -------------------------------------

/// Distribution of d_H(X, Z) restricted to one block, from its dense joint.
std::vector<double> block_distance_pmf(const JointDistribution& block);

/// P[total distance <= t] for `copies` independent blocks with the given
/// per-block distance pmf (Hamming-weight convolution; scales past n = 12).
double hamming_success_factored(const std::vector<double>& block_pmf, int copies, int t);

/// Replayable description of a scheme, serializable to JSON via the CLI.
struct SchemeDescriptor {
    std::string name;
    int n;
    int m;
    std::uint64_t seed;
};

} // namespace pacsc::coding
