#include "pacsc/coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <random>

namespace pacsc::coding {

namespace {

constexpr double kDustTol = 1e-12;
constexpr double kPovmPsdTol = 1e-9;
constexpr double kPovmCompleteTol = 1e-8;

info::DensityMatrix basis_projector(std::size_t dim, std::uint32_t index) {
    linalg::ComplexMatrix m(dim, dim);
    m(index, index) = 1.0;
    return info::DensityMatrix(std::move(m));
}

} // namespace

int hamming_distance(std::uint32_t a, std::uint32_t b) {
    return std::popcount(a ^ b);
}

Povm::Povm(std::size_t dim_, int label_bits_, std::vector<linalg::ComplexMatrix> elements_,
           std::vector<std::uint32_t> labels_)
    : dim(dim_), label_bits(label_bits_), elements(std::move(elements_)),
      labels(std::move(labels_)) {
    if (elements.empty() || elements.size() != labels.size())
        throw DimensionMismatch("Povm: elements/labels mismatch");
    linalg::ComplexMatrix sum(dim, dim);
    for (const auto& e : elements) {
        if (e.rows() != dim || e.cols() != dim)
            throw DimensionMismatch("Povm: element dimension mismatch");
        auto eig = linalg::hermitian_eig(e);
        if (eig.eigenvalues.back() < -kPovmPsdTol)
            throw DomainError("Povm: element not PSD within 1e-9");
        sum += e;
    }
    sum -= linalg::ComplexMatrix::identity(dim);
    if (sum.max_abs() > kPovmCompleteTol)
        throw DomainError("Povm: elements do not sum to identity within 1e-8");
}

JointDistribution::JointDistribution(int n, std::vector<double> table)
    : n_(n), table_(std::move(table)) {
    if (n < 1) throw DomainError("JointDistribution: n >= 1 required");
    if (n > 12) throw TooLarge("JointDistribution: dense tables only for n <= 12");
    const std::size_t s = std::size_t{1} << n;
    if (table_.size() != s * s) throw DimensionMismatch("JointDistribution: size mismatch");
    double sum = 0.0;
    for (double& p : table_) {
        if (p < -kDustTol)
            throw DomainError("JointDistribution: negative entry beyond dust tolerance");
        if (p < 0.0) p = 0.0;
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw DomainError("JointDistribution: entries do not sum to 1 within 1e-9");
    for (double& p : table_) p /= sum;
}

info::JointTable JointDistribution::to_table() const {
    return info::JointTable(side(), side(), table_);
}

double hamming_success(const JointDistribution& j, int t) {
    if (t < 0 || t > j.n()) throw DomainError("hamming_success: t outside [0, n]");
    const std::size_t s = j.side();
    double acc = 0.0;
    for (std::uint32_t x = 0; x < s; ++x)
        for (std::uint32_t z = 0; z < s; ++z)
            if (hamming_distance(x, z) <= t) acc += j(x, z);
    return std::min(acc, 1.0);
}

std::vector<OptimalDecodeResult> optimal_hamming_decoder_curve(
    const ObservationChannel& ch, int t_max) {
    if (ch.n > 12) throw TooLarge("optimal_hamming_decoder: n > 12");
    if (t_max < 0 || t_max > ch.n)
        throw DomainError("optimal_hamming_decoder: t outside [0, n]");
    const std::size_t s = std::size_t{1} << ch.n;

    std::vector<OptimalDecodeResult> out(static_cast<std::size_t>(t_max) + 1);
    for (auto& r : out) {
        r.decode.assign(ch.ny, 0);
        r.success = 0.0;
    }

    std::vector<double> hist(s * (ch.n + 1));
    for (std::size_t y = 0; y < ch.ny; ++y) {
        std::fill(hist.begin(), hist.end(), 0.0);
        for (std::uint32_t x = 0; x < s; ++x) {
            const double px = ch(x, y);
            if (px == 0.0) continue;
            for (std::uint32_t z = 0; z < s; ++z)
                hist[z * (ch.n + 1) + hamming_distance(x, z)] += px;
        }
        for (int t = 0; t <= t_max; ++t) {
            double best = -1.0;
            std::uint32_t best_z = 0;
            for (std::uint32_t z = 0; z < s; ++z) {
                double mass = 0.0;
                for (int d = 0; d <= t; ++d) mass += hist[z * (ch.n + 1) + d];
                if (mass > best) {
                    best = mass;
                    best_z = z;
                }
            }
            out[t].decode[y] = best_z;
            out[t].success += best;
        }
    }
    for (auto& r : out) r.success = std::min(r.success, 1.0);
    return out;
}

OptimalDecodeResult optimal_hamming_decoder(const ObservationChannel& ch, int t) {
    return optimal_hamming_decoder_curve(ch, t).back();
}

JointDistribution apply_decoder(const ObservationChannel& ch,
                                const std::vector<std::uint32_t>& decode) {
    if (decode.size() != ch.ny)
        throw DimensionMismatch("apply_decoder: decode map size mismatch");
    const std::size_t s = std::size_t{1} << ch.n;
    std::vector<double> table(s * s, 0.0);
    for (std::uint32_t x = 0; x < s; ++x)
        for (std::size_t y = 0; y < ch.ny; ++y)
            table[(std::size_t{x} << ch.n) | decode[y]] += std::max(ch(x, y), 0.0);
    return JointDistribution(ch.n, std::move(table));
}

Encoder truncation_encoder(int n, int m) {
    if (n < 1 || m < 0 || m > n) throw DomainError("truncation_encoder: need 0 <= m <= n");
    const std::size_t dim = std::size_t{1} << m;
    return Encoder{n, m, [n, m, dim](std::uint32_t x) {
                       const std::uint32_t y = m == 0 ? 0u : (x >> (n - m));
                       return basis_projector(dim, y);
                   }};
}

std::uint32_t truncation_decode(int n, int m, std::uint32_t y) {
    if (n < 1 || m < 0 || m > n) throw DomainError("truncation_decode: need 0 <= m <= n");
    return m == 0 ? 0u : (y << (n - m));
}

Encoder classical_code_encoder(int n, int m, std::vector<std::uint32_t> codewords) {
    if (n < 1 || m < 0 || m > 30) throw DomainError("classical_code_encoder: bad n or m");
    if (codewords.size() != (std::size_t{1} << n))
        throw DimensionMismatch("classical_code_encoder: codeword table size mismatch");
    const std::size_t dim = std::size_t{1} << m;
    auto table = std::make_shared<std::vector<std::uint32_t>>(std::move(codewords));
    return Encoder{n, m, [dim, table](std::uint32_t x) {
                       return basis_projector(dim, (*table)[x]);
                   }};
}

std::vector<std::uint32_t> random_codewords(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t mask = m == 0 ? 0u : ((std::uint32_t{1} << m) - 1u);
    std::vector<std::uint32_t> code(std::size_t{1} << n);
    for (auto& c : code) c = static_cast<std::uint32_t>(rng()) & mask;
    return code;
}

Encoder qrac_2to1_encoder() {
    const double r = 1.0 / std::sqrt(2.0);
    return Encoder{2, 1, [r](std::uint32_t x) {
                       const double bz = ((x >> 1) & 1u) ? -r : r; // bit 1, Z axis
                       const double bx = (x & 1u) ? -r : r;        // bit 2, X axis
                       return info::DensityMatrix::from_bloch(bx, 0.0, bz);
                   }};
}

Encoder product_encoder(const Encoder& block, int copies) {
    if (copies < 1) throw DomainError("product_encoder: copies >= 1 required");
    if (copies * block.m > 12)
        throw TooLarge("product_encoder: copies * block.m > 12 (use factored evaluation)");
    const int bn = block.n;
    const std::uint32_t mask = (std::uint32_t{1} << bn) - 1u;
    auto enc = block.encode;
    return Encoder{bn * copies, block.m * copies,
                   [bn, mask, copies, enc](std::uint32_t x) {
                       info::DensityMatrix state =
                           enc((x >> ((copies - 1) * bn)) & mask);
                       for (int i = 1; i < copies; ++i)
                           state = state.tensor(enc((x >> ((copies - 1 - i) * bn)) & mask));
                       return state;
                   }};
}

info::Ensemble ensemble_from(const Encoder& enc, const info::DiscreteDistribution& prior) {
    const std::size_t count = std::size_t{1} << enc.n;
    if (prior.size() != count)
        throw DimensionMismatch("ensemble_from: prior size != 2^n");
    std::vector<info::DensityMatrix> states;
    states.reserve(count);
    std::vector<std::uint32_t> labels(count);
    for (std::uint32_t x = 0; x < count; ++x) {
        states.push_back(enc.encode(x));
        labels[x] = x;
    }
    return info::Ensemble(std::move(states), prior, std::move(labels), enc.n);
}

Povm pretty_good_measurement(const info::Ensemble& e) {
    const info::DensityMatrix avg = e.average_state();
    const auto inv_sqrt = linalg::matrix_function(
        avg.matrix(), [](double x) { return 1.0 / std::sqrt(x); },
        linalg::ZeroPolicy::pseudo);
    const auto support = linalg::matrix_function(
        avg.matrix(), [](double) { return 1.0; }, linalg::ZeroPolicy::pseudo);

    linalg::ComplexMatrix remainder = linalg::ComplexMatrix::identity(e.dim());
    remainder -= support;
    remainder *= 1.0 / static_cast<double>(e.size());

    std::vector<linalg::ComplexMatrix> elements;
    elements.reserve(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
        linalg::ComplexMatrix ek = inv_sqrt * e.states[k].matrix() * inv_sqrt;
        ek *= e.probs[k];
        ek += remainder;
        elements.push_back(std::move(ek));
    }
    return Povm(e.dim(), e.label_bits, std::move(elements), e.labels);
}

namespace {

std::vector<double> povm_joint_rows(const info::Ensemble& e, const Povm& p,
                                    std::size_t stride,
                                    bool index_columns_by_label) {
    if (p.dim != e.dim()) throw DimensionMismatch("joint: dimension mismatch");
    if (p.label_bits != e.label_bits)
        throw DimensionMismatch("joint: label length mismatch");
    const std::size_t rows = std::size_t{1} << e.label_bits;
    const std::size_t cols = index_columns_by_label ? rows : p.elements.size();
    std::vector<double> table(rows * stride, 0.0);
    const std::size_t d = e.dim();
    for (std::size_t k = 0; k < e.size(); ++k) {
        const auto& sigma = e.states[k].matrix();
        for (std::size_t j = 0; j < p.elements.size(); ++j) {
            const auto& el = p.elements[j];
            double tr = 0.0;
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b)
                    tr += (el(a, b) * sigma(b, a)).real();
            const std::size_t col = index_columns_by_label ? p.labels[j] : j;
            table[e.labels[k] * stride + col] += e.probs[k] * std::max(tr, 0.0);
        }
    }
    (void)cols;
    return table;
}

} // namespace

JointDistribution joint_distribution(const info::Ensemble& e, const Povm& p) {
    const std::size_t s = std::size_t{1} << e.label_bits;
    return JointDistribution(e.label_bits, povm_joint_rows(e, p, s, true));
}

ObservationChannel observation_channel(const info::Ensemble& e, const Povm& p) {
    const std::size_t ny = p.elements.size();
    return ObservationChannel{e.label_bits, ny, povm_joint_rows(e, p, ny, false)};
}

ObservationChannel classical_observation(int n, int m,
                                         const std::vector<std::uint32_t>& codewords,
                                         const info::DiscreteDistribution& prior) {
    const std::size_t nx = std::size_t{1} << n;
    const std::size_t ny = std::size_t{1} << m;
    if (codewords.size() != nx || prior.size() != nx)
        throw DimensionMismatch("classical_observation: table size mismatch");
    std::vector<double> joint(nx * ny, 0.0);
    for (std::uint32_t x = 0; x < nx; ++x) joint[x * ny + codewords[x]] = prior[x];
    return ObservationChannel{n, ny, std::move(joint)};
}

std::vector<double> block_distance_pmf(const JointDistribution& block) {
    std::vector<double> pmf(block.n() + 1, 0.0);
    const std::size_t s = block.side();
    for (std::uint32_t x = 0; x < s; ++x)
        for (std::uint32_t z = 0; z < s; ++z)
            pmf[hamming_distance(x, z)] += block(x, z);
    return pmf;
}

double hamming_success_factored(const std::vector<double>& block_pmf, int copies, int t) {
    if (copies < 1) throw DomainError("hamming_success_factored: copies >= 1");
    std::vector<double> total{1.0};
    for (int c = 0; c < copies; ++c) {
        std::vector<double> next(total.size() + block_pmf.size() - 1, 0.0);
        for (std::size_t i = 0; i < total.size(); ++i)
            for (std::size_t j = 0; j < block_pmf.size(); ++j)
                next[i + j] += total[i] * block_pmf[j];
        total = std::move(next);
    }
    double acc = 0.0;
    for (std::size_t d = 0; d < total.size() && d <= static_cast<std::size_t>(t); ++d)
        acc += total[d];
    return std::min(acc, 1.0);
}

} // namespace pacsc::coding
