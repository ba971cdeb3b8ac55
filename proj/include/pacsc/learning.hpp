#pragma once

#include <cstdint>
#include <vector>

#include "pacsc/errors.hpp"
#include "pacsc/info.hpp"

namespace pacsc::learning {

/// Explicit truth table of an arbitrary f : {0,1}^n -> {0,1}.
struct ConceptTable {
    int n;
    std::vector<std::uint8_t> values; // size 2^n

    std::size_t domain_size() const { return values.size(); }
};

ConceptTable random_concept(int n, std::uint64_t seed);

struct Example {
    std::uint32_t index; // 0-based rank
    std::uint8_t label;
};
using ExampleSet = std::vector<Example>;

/// Zipf(k) = 1 / (k H_N) over ranks 1..N.
info::DiscreteDistribution zipf_distribution(std::size_t N);

/// Harmonic number H_N = sum_{k<=N} 1/k.
double harmonic_number(std::size_t N);

/// m i.i.d. labeled draws from D, deterministic given seed.
ExampleSet sample_examples(const info::DiscreteDistribution& d, const ConceptTable& f,
                           std::size_t m, std::uint64_t seed);

/// Memorizes sampled labels, answers a seeded random bit elsewhere.
ConceptTable memorization_learner(const ExampleSet& s, std::size_t N, std::uint64_t seed);

/// Exact Pr_{x~D}[f(x) != h(x)].
double generalization_error(const ConceptTable& f, const ConceptTable& h,
                            const info::DiscreteDistribution& d);

struct PacReport {
    std::uint64_t samples_per_trial;
    int trials;
    double failure_fraction; // fraction of trials with error > eps
    std::vector<double> errors;
};

/// Full memorization-learner experiment under Zipf: sample, learn, exact
/// error, repeated over independent seeded trials.
PacReport pac_experiment(int n, double eps, double delta, int trials, std::uint64_t seed);

struct BallCheck {
    double error;                  // exact Zipf generalization error
    std::uint64_t disagreements;   // |I| = d_H of the truth tables
    double mass_threshold;         // beta / (n+1)
    double count_threshold;        // beta N
    bool premise;                  // error < beta/(n+1)
    bool conclusion;               // |I| < beta N
    bool holds;                    // premise => conclusion
};

/// Checks the ball-counting implication: small Zipf error forces a small
/// disagreement set.
BallCheck disagreement_ball_check(const ConceptTable& f, const ConceptTable& h,
                                  double beta);

/// Amplitudes of sum_x sqrt(D(x)) |x>|c(x)>, dimension 2^{n+1}. n <= 10.
std::vector<linalg::cplx> quantum_example_state(const info::DiscreteDistribution& d,
                                                const ConceptTable& c);

} // namespace pacsc::learning
