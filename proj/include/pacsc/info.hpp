#pragma once

#include <cstdint>
#include <vector>

#include "pacsc/errors.hpp"
#include "pacsc/linalg.hpp"

namespace pacsc::info {

/// Binary entropy in bits, with 0 log 0 := 0.
double binary_entropy(double p);

/// Probability vector over outcomes 1..N. Rank k maps to the big-endian
/// n-bit encoding of k-1 when outcomes are read as bit strings.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(std::vector<double> probs);

    static DiscreteDistribution uniform(std::size_t n);
    static DiscreteDistribution point_mass(std::size_t n, std::size_t index);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

/// Joint law of a pair of finite random variables, entries summing to 1.
class JointTable {
public:
    JointTable(std::size_t nx, std::size_t nz, std::vector<double> joint);

    std::size_t nx() const { return nx_; }
    std::size_t nz() const { return nz_; }
    double operator()(std::size_t x, std::size_t z) const { return joint_[x * nz_ + z]; }

    std::vector<double> marginal_x() const;
    std::vector<double> marginal_z() const;

private:
    std::size_t nx_;
    std::size_t nz_;
    std::vector<double> joint_;
};

/// PSD, trace-1, Hermitian. Validated on construction.
class DensityMatrix {
public:
    explicit DensityMatrix(linalg::ComplexMatrix m);

    static DensityMatrix maximally_mixed(std::size_t dim);
    static DensityMatrix pure(const std::vector<linalg::cplx>& amplitudes);
    /// Qubit state from a Bloch vector (|r| <= 1).
    static DensityMatrix from_bloch(double x, double y, double z);

    const linalg::ComplexMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

    DensityMatrix tensor(const DensityMatrix& other) const;

private:
    linalg::ComplexMatrix m_;
};

/// {sigma(x), p(x)} with n-bit string labels; all states share one dimension,
/// a power of two.
struct Ensemble {
    std::vector<DensityMatrix> states;
    DiscreteDistribution probs;
    std::vector<std::uint32_t> labels;
    int label_bits;

    Ensemble(std::vector<DensityMatrix> states_, DiscreteDistribution probs_,
             std::vector<std::uint32_t> labels_, int label_bits_);

    std::size_t size() const { return states.size(); }
    std::size_t dim() const { return states.front().dim(); }
    int qubits() const;

    /// Sum_x p(x) sigma(x).
    DensityMatrix average_state() const;
};

double shannon_entropy(const DiscreteDistribution& d);
double shannon_entropy(const std::vector<double>& probs);

double von_neumann_entropy(const DensityMatrix& rho);

double mutual_information(const JointTable& j);

/// chi = S(avg) - sum_x p(x) S(sigma_x); asserted to lie in [0, log2 d].
double holevo_chi(const Ensemble& e);

/// Exact I(X'; Y') where Y' is m independent uses of the channel on the same
/// input X. channel is |X| rows of conditional distributions over |Y|.
double product_channel_mutual_info(const DiscreteDistribution& input,
                                   const std::vector<std::vector<double>>& channel,
                                   unsigned m);

} // namespace pacsc::info
