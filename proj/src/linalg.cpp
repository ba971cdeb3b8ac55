#include "pacsc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pacsc::linalg {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0) {
        throw DomainError("ComplexMatrix: dimensions must be >= 1");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

ComplexMatrix ComplexMatrix::tensor(const ComplexMatrix& other) const {
    ComplexMatrix out(rows_ * other.rows_, cols_ * other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t k = 0; k < other.rows_; ++k)
                for (std::size_t l = 0; l < other.cols_; ++l)
                    out(i * other.rows_ + k, j * other.cols_ + l) =
                        (*this)(i, j) * other(k, l);
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix addition: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix subtraction: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (auto& v : a_) v *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw DimensionMismatch("matrix product: shape mismatch");
    ComplexMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const cplx lik = lhs(i, k);
            if (lik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += lik * rhs(k, j);
        }
    }
    return out;
}

namespace {

// One complex Jacobi rotation zeroing a(p,q). a is updated in place as
// G† a G and v as v G, with G supported on rows/cols p and q.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cplx phase = apq / r;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const cplx gpq = s * phase;          // G(p,q)
    const cplx gqp = -s * std::conj(phase); // G(q,p)

    const std::size_t n = a.rows();
    // columns: A <- A G
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip + gqp * aiq;
        a(i, q) = gpq * aip + c * aiq;
    }
    // rows: A <- G† A
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j);
        const cplx aqj = a(q, j);
        a(p, j) = c * apj + std::conj(gqp) * aqj;
        a(q, j) = std::conj(gpq) * apj + c * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx(a(p, p).real(), 0.0);
    a(q, q) = cplx(a(q, q).real(), 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip + gqp * viq;
        v(i, q) = gpq * vip + c * viq;
    }
}

double max_offdiag(const ComplexMatrix& a) {
    double m = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

} // namespace

HermitianEig hermitian_eig(const ComplexMatrix& m) {
    if (!m.square()) throw NotHermitian("hermitian_eig: matrix is not square");
    if (m.hermiticity_defect() > kHermiticityTol)
        throw NotHermitian("hermitian_eig: max|M - M†| exceeds 1e-9");

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // symmetrize away sub-tolerance asymmetry
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
        a(i, i) = cplx(a(i, i).real(), 0.0);
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double stop = 1e-14 * std::max(1.0, a.max_abs());
    const std::size_t max_sweeps = 100 * n * n;
    std::size_t sweep = 0;
    while (max_offdiag(a) > stop) {
        if (++sweep > max_sweeps)
            throw NoConvergence("hermitian_eig: sweep cap exceeded");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > stop * 1e-2) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix matrix_function(const ComplexMatrix& m,
                              const std::function<double(double)>& f,
                              ZeroPolicy zero_policy) {
    HermitianEig eig = hermitian_eig(m);
    const std::size_t n = m.rows();
    std::vector<double> fx(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = eig.eigenvalues[k];
        if (lam < -kPsdClampTol)
            throw DomainError("matrix_function: matrix is not PSD");
        if (lam < 0.0) lam = 0.0;
        if (zero_policy == ZeroPolicy::pseudo) {
            fx[k] = (lam > kPsdClampTol) ? f(lam) : 0.0;
        } else {
            fx[k] = f(lam);
            if (!std::isfinite(fx[k]))
                throw SingularMatrix("matrix_function: f undefined on a zero eigenvalue");
        }
    }
    ComplexMatrix out(n, n);
    const ComplexMatrix& v = eig.eigenvectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += v(i, k) * fx[k] * std::conj(v(j, k));
            out(i, j) = acc;
        }
    return out;
}

} // namespace pacsc::linalg
