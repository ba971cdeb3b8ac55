#include "pacsc/learning.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pacsc/bounds.hpp"

namespace pacsc::learning {

namespace {

// uniform double in [0,1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 step on master ^ index: independent per-trial streams
    std::uint64_t z = master ^ (index * 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

ConceptTable random_concept(int n, std::uint64_t seed) {
    if (n < 1 || n > 24) throw DomainError("random_concept: n outside [1, 24]");
    std::mt19937_64 rng(seed);
    ConceptTable f{n, std::vector<std::uint8_t>(std::size_t{1} << n)};
    for (auto& v : f.values) v = static_cast<std::uint8_t>(rng() & 1u);
    return f;
}

double harmonic_number(std::size_t N) {
    double h = 0.0;
    for (std::size_t k = N; k >= 1; --k) h += 1.0 / static_cast<double>(k);
    return h;
}

info::DiscreteDistribution zipf_distribution(std::size_t N) {
    if (N < 1) throw DomainError("zipf_distribution: N >= 1 required");
    const double hn = harmonic_number(N);
    std::vector<double> p(N);
    double sum = 0.0;
    for (std::size_t k = 1; k <= N; ++k) {
        p[k - 1] = 1.0 / (static_cast<double>(k) * hn);
        sum += p[k - 1];
    }
    for (auto& v : p) v /= sum; // remove accumulated rounding
    return info::DiscreteDistribution(std::move(p));
}

ExampleSet sample_examples(const info::DiscreteDistribution& d, const ConceptTable& f,
                           std::size_t m, std::uint64_t seed) {
    if (d.size() != f.domain_size())
        throw DimensionMismatch("sample_examples: distribution/concept size mismatch");
    std::vector<double> cdf(d.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        acc += d[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;

    std::mt19937_64 rng(seed);
    ExampleSet out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double u = unit_double(rng);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = static_cast<std::uint32_t>(it - cdf.begin());
        out.push_back(Example{idx, f.values[idx]});
    }
    return out;
}

ConceptTable memorization_learner(const ExampleSet& s, std::size_t N, std::uint64_t seed) {
    std::vector<std::int8_t> memo(N, -1);
    for (const auto& ex : s) {
        if (ex.index >= N) throw DomainError("memorization_learner: index out of range");
        if (memo[ex.index] >= 0 && memo[ex.index] != static_cast<std::int8_t>(ex.label))
            throw ConflictingLabels("memorization_learner: inconsistent examples");
        memo[ex.index] = static_cast<std::int8_t>(ex.label);
    }
    std::mt19937_64 rng(seed);
    const int n = std::bit_width(N) - 1;
    ConceptTable h{n, std::vector<std::uint8_t>(N)};
    for (std::size_t i = 0; i < N; ++i)
        h.values[i] = memo[i] >= 0 ? static_cast<std::uint8_t>(memo[i])
                                   : static_cast<std::uint8_t>(rng() & 1u);
    return h;
}

double generalization_error(const ConceptTable& f, const ConceptTable& h,
                            const info::DiscreteDistribution& d) {
    if (f.n != h.n) throw DimensionMismatch("generalization_error: n mismatch");
    if (d.size() != f.domain_size())
        throw DimensionMismatch("generalization_error: distribution size mismatch");
    double err = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (f.values[i] != h.values[i]) err += d[i];
    return err;
}

PacReport pac_experiment(int n, double eps, double delta, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("pac_experiment: trials >= 1 required");
    const std::size_t N = std::size_t{1} << n;
    const std::uint64_t m = bounds::memorization_sample_count(N, eps, delta);
    const auto zipf = zipf_distribution(N);

    PacReport report;
    report.samples_per_trial = m;
    report.trials = trials;
    report.errors.reserve(trials);
    int failures = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t s0 = trial_seed(seed, 3 * trial);
        const std::uint64_t s1 = trial_seed(seed, 3 * trial + 1);
        const std::uint64_t s2 = trial_seed(seed, 3 * trial + 2);
        const ConceptTable f = random_concept(n, s0);
        const ExampleSet examples = sample_examples(zipf, f, m, s1);
        const ConceptTable h = memorization_learner(examples, N, s2);
        const double err = generalization_error(f, h, zipf);
        report.errors.push_back(err);
        if (err > eps) ++failures;
    }
    report.failure_fraction = static_cast<double>(failures) / trials;
    return report;
}

BallCheck disagreement_ball_check(const ConceptTable& f, const ConceptTable& h,
                                  double beta) {
    if (!(beta >= 0.0 && beta <= 0.5))
        throw DomainError("disagreement_ball_check: beta outside [0, 1/2]");
    if (f.n != h.n) throw DimensionMismatch("disagreement_ball_check: n mismatch");
    const std::size_t N = f.domain_size();
    const auto zipf = zipf_distribution(N);

    BallCheck c{};
    c.error = generalization_error(f, h, zipf);
    c.disagreements = 0;
    for (std::size_t i = 0; i < N; ++i)
        if (f.values[i] != h.values[i]) ++c.disagreements;
    c.mass_threshold = beta / (f.n + 1);
    c.count_threshold = beta * static_cast<double>(N);
    c.premise = c.error < c.mass_threshold;
    c.conclusion = static_cast<double>(c.disagreements) < c.count_threshold;
    c.holds = !c.premise || c.conclusion;
    return c;
}

std::vector<linalg::cplx> quantum_example_state(const info::DiscreteDistribution& d,
                                                const ConceptTable& c) {
    if (c.n > 10) throw TooLarge("quantum_example_state: n > 10");
    if (d.size() != c.domain_size())
        throw DimensionMismatch("quantum_example_state: size mismatch");
    std::vector<linalg::cplx> amp(std::size_t{2} << c.n, 0.0);
    for (std::size_t x = 0; x < d.size(); ++x)
        amp[(x << 1) | c.values[x]] = std::sqrt(d[x]);
    return amp;
}

} // namespace pacsc::learning
