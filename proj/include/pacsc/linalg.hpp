#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "pacsc/errors.hpp"

namespace pacsc::linalg {

using cplx = std::complex<double>;

/// Dense complex matrix in row-major order. Desk scale (dim <= ~256).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    // max |A - A†| over all entries; 0 for non-square is not meaningful.
    double hermiticity_defect() const;

    ComplexMatrix tensor(const ComplexMatrix& other) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend ComplexMatrix operator*(ComplexMatrix lhs, cplx scalar) {
        lhs *= scalar;
        return lhs;
    }
    friend ComplexMatrix operator*(cplx scalar, ComplexMatrix rhs) {
        rhs *= scalar;
        return rhs;
    }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> a_;
};

/// Eigendecomposition of a Hermitian matrix: eigenvalues sorted descending,
/// eigenvectors the matching columns of a unitary matrix.
struct HermitianEig {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

inline constexpr double kHermiticityTol = 1e-9;
inline constexpr double kPsdClampTol = 1e-10;

/// Cyclic Jacobi eigensolver for complex Hermitian matrices.
/// Throws NotHermitian when max|M - M†| > 1e-9, NoConvergence past the sweep cap.
HermitianEig hermitian_eig(const ComplexMatrix& m);

enum class ZeroPolicy { error, pseudo };

/// V diag(f(lambda)) V† for Hermitian PSD m. Under ZeroPolicy::pseudo, f is
/// applied only on eigenvalues > 1e-10 (support projection); under
/// ZeroPolicy::error a non-finite f value raises SingularMatrix.
ComplexMatrix matrix_function(const ComplexMatrix& m,
                              const std::function<double(double)>& f,
                              ZeroPolicy zero_policy = ZeroPolicy::error);

} // namespace pacsc::linalg
