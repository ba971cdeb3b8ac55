#include "pacsc/info.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace pacsc::info {

namespace {

constexpr double kSumTol = 1e-12;

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

} // namespace

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy: p outside [0,1]");
    return plogp(p) + plogp(1.0 - p);
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
    if (probs_.empty()) throw DomainError("DiscreteDistribution: empty");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) throw DomainError("DiscreteDistribution: negative entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw DomainError("DiscreteDistribution: probabilities do not sum to 1");
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t n) {
    return DiscreteDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DiscreteDistribution DiscreteDistribution::point_mass(std::size_t n, std::size_t index) {
    std::vector<double> p(n, 0.0);
    p.at(index) = 1.0;
    return DiscreteDistribution(std::move(p));
}

JointTable::JointTable(std::size_t nx, std::size_t nz, std::vector<double> joint)
    : nx_(nx), nz_(nz), joint_(std::move(joint)) {
    if (joint_.size() != nx_ * nz_) throw DimensionMismatch("JointTable: size mismatch");
    double sum = 0.0;
    for (double p : joint_) {
        if (p < -kSumTol) throw DomainError("JointTable: negative entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw DomainError("JointTable: entries do not sum to 1");
}

std::vector<double> JointTable::marginal_x() const {
    std::vector<double> out(nx_, 0.0);
    for (std::size_t x = 0; x < nx_; ++x)
        for (std::size_t z = 0; z < nz_; ++z) out[x] += (*this)(x, z);
    return out;
}

std::vector<double> JointTable::marginal_z() const {
    std::vector<double> out(nz_, 0.0);
    for (std::size_t x = 0; x < nx_; ++x)
        for (std::size_t z = 0; z < nz_; ++z) out[z] += (*this)(x, z);
    return out;
}

DensityMatrix::DensityMatrix(linalg::ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.square()) throw DomainError("DensityMatrix: not square");
    if (m_.hermiticity_defect() > linalg::kHermiticityTol)
        throw NotHermitian("DensityMatrix: not Hermitian within 1e-9");
    if (std::abs(m_.trace() - linalg::cplx(1.0, 0.0)) > 1e-10)
        throw DomainError("DensityMatrix: trace != 1");
    auto eig = linalg::hermitian_eig(m_);
    if (eig.eigenvalues.back() < -linalg::kPsdClampTol)
        throw DomainError("DensityMatrix: negative eigenvalue beyond tolerance");
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    linalg::ComplexMatrix m = linalg::ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const std::vector<linalg::cplx>& amplitudes) {
    const std::size_t d = amplitudes.size();
    double norm2 = 0.0;
    for (const auto& a : amplitudes) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw DomainError("DensityMatrix::pure: amplitudes not normalized");
    linalg::ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z) {
    if (x * x + y * y + z * z > 1.0 + 1e-12)
        throw DomainError("from_bloch: Bloch vector outside unit ball");
    linalg::ComplexMatrix m(2, 2);
    m(0, 0) = 0.5 * (1.0 + z);
    m(1, 1) = 0.5 * (1.0 - z);
    m(0, 1) = 0.5 * linalg::cplx(x, -y);
    m(1, 0) = 0.5 * linalg::cplx(x, y);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
    return DensityMatrix(m_.tensor(other.m_));
}

Ensemble::Ensemble(std::vector<DensityMatrix> states_, DiscreteDistribution probs_,
                   std::vector<std::uint32_t> labels_, int label_bits_)
    : states(std::move(states_)),
      probs(std::move(probs_)),
      labels(std::move(labels_)),
      label_bits(label_bits_) {
    if (states.empty()) throw DomainError("Ensemble: empty");
    if (states.size() != probs.size() || states.size() != labels.size())
        throw DimensionMismatch("Ensemble: states/probs/labels size mismatch");
    const std::size_t d = states.front().dim();
    if (!std::has_single_bit(d)) throw DomainError("Ensemble: dimension not a power of 2");
    for (const auto& s : states)
        if (s.dim() != d) throw DimensionMismatch("Ensemble: mixed dimensions");
}

int Ensemble::qubits() const { return std::countr_zero(dim()); }

DensityMatrix Ensemble::average_state() const {
    linalg::ComplexMatrix avg(dim(), dim());
    for (std::size_t k = 0; k < states.size(); ++k) {
        linalg::ComplexMatrix term = states[k].matrix();
        term *= probs[k];
        avg += term;
    }
    return DensityMatrix(std::move(avg));
}

double shannon_entropy(const std::vector<double>& probs) {
    double h = 0.0;
    for (double p : probs) h += plogp(std::max(p, 0.0));
    return h;
}

double shannon_entropy(const DiscreteDistribution& d) {
    return shannon_entropy(d.probs());
}

double von_neumann_entropy(const DensityMatrix& rho) {
    auto eig = linalg::hermitian_eig(rho.matrix());
    double h = 0.0;
    for (double lam : eig.eigenvalues) h += plogp(std::max(lam, 0.0));
    return h;
}

double mutual_information(const JointTable& j) {
    const double hx = shannon_entropy(j.marginal_x());
    const double hz = shannon_entropy(j.marginal_z());
    double hxz = 0.0;
    for (std::size_t x = 0; x < j.nx(); ++x)
        for (std::size_t z = 0; z < j.nz(); ++z) hxz += plogp(std::max(j(x, z), 0.0));
    const double mi = hx + hz - hxz;
    if (mi < -1e-12) throw DomainError("mutual_information: negative beyond tolerance");
    return std::max(mi, 0.0);
}

double holevo_chi(const Ensemble& e) {
    double chi = von_neumann_entropy(e.average_state());
    for (std::size_t k = 0; k < e.size(); ++k)
        chi -= e.probs[k] * von_neumann_entropy(e.states[k]);
    const double logd = std::log2(static_cast<double>(e.dim()));
    if (chi < -1e-9 || chi > logd + 1e-9)
        throw DomainError("holevo_chi: value outside [0, log2 d]");
    return std::clamp(chi, 0.0, logd);
}

double product_channel_mutual_info(const DiscreteDistribution& input,
                                   const std::vector<std::vector<double>>& channel,
                                   unsigned m) {
    if (m < 1) throw DomainError("product_channel_mutual_info: m >= 1 required");
    if (channel.size() != input.size())
        throw DimensionMismatch("product_channel_mutual_info: channel rows != |X|");
    const std::size_t ny = channel.front().size();
    const double table_bits = m * std::log2(static_cast<double>(ny));
    if (table_bits > 24.0)
        throw TooLarge("product_channel_mutual_info: m*log2|Y| > 24");

    std::size_t ny_m = 1;
    for (unsigned i = 0; i < m; ++i) ny_m *= ny;

    std::vector<double> joint(input.size() * ny_m, 0.0);
    for (std::size_t x = 0; x < input.size(); ++x) {
        for (std::size_t y = 0; y < ny_m; ++y) {
            double p = input[x];
            std::size_t rest = y;
            for (unsigned i = 0; i < m; ++i) {
                p *= channel[x][rest % ny];
                rest /= ny;
            }
            joint[x * ny_m + y] = p;
        }
    }
    return mutual_information(JointTable(input.size(), ny_m, std::move(joint)));
}

} // namespace pacsc::info
