#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pacsc/linalg.hpp"

using namespace pacsc;
using namespace pacsc::linalg;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5; };
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 2.0 * unit();
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = cplx(unit(), unit());
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

double reconstruction_error(const ComplexMatrix& m, const HermitianEig& eig) {
    const std::size_t n = m.rows();
    ComplexMatrix recon(n, n);
    const ComplexMatrix& v = eig.eigenvectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += v(i, k) * eig.eigenvalues[k] * std::conj(v(j, k));
            recon(i, j) = acc;
        }
    recon -= m;
    return recon.max_abs();
}

double unitarity_defect(const ComplexMatrix& v) {
    ComplexMatrix g = v.adjoint() * v;
    g -= ComplexMatrix::identity(v.rows());
    return g.max_abs();
}

} // namespace

TEST_CASE("identity eigenvalues are all one") {
    auto eig = hermitian_eig(ComplexMatrix::identity(4));
    for (double lam : eig.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pauli-z eigenvalues sorted descending") {
    ComplexMatrix z(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    auto eig = hermitian_eig(z);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0));
}

TEST_CASE("random 8x8 reconstructs within 1e-10") {
    auto m = random_hermitian(8, 42);
    auto eig = hermitian_eig(m);
    CHECK(reconstruction_error(m, eig) < 1e-10);
    CHECK(unitarity_defect(eig.eigenvectors) < 1e-10);
}

TEST_CASE("100 seeds, dims 2..16: reconstruction and unitarity") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t dim = 2 + seed % 15;
        auto m = random_hermitian(dim, seed);
        auto eig = hermitian_eig(m);
        CHECK(reconstruction_error(m, eig) <= 1e-10);
        CHECK(unitarity_defect(eig.eigenvectors) <= 1e-10);
    }
}

TEST_CASE("dim-2 eigenvalues match characteristic-polynomial roots") {
    // independent oracle: quadratic formula on tr and det
    for (std::uint64_t seed = 200; seed < 300; ++seed) {
        auto m = random_hermitian(2, seed);
        const double tr = m.trace().real();
        const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
        const double disc = std::sqrt(tr * tr / 4.0 - det);
        auto eig = hermitian_eig(m);
        CHECK(eig.eigenvalues[0] == doctest::Approx(tr / 2.0 + disc).epsilon(1e-10));
        CHECK(eig.eigenvalues[1] == doctest::Approx(tr / 2.0 - disc).epsilon(1e-10));
    }
}

TEST_CASE("non-hermitian input is rejected") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
    ComplexMatrix rect(2, 3);
    CHECK_THROWS_AS(hermitian_eig(rect), NotHermitian);
}

TEST_CASE("matrix_function basics") {
    auto sqrtf = [](double x) { return std::sqrt(x); };
    auto inv_sqrtf = [](double x) { return 1.0 / std::sqrt(x); };

    SUBCASE("sqrt of identity") {
        auto r = matrix_function(ComplexMatrix::identity(3), sqrtf);
        r -= ComplexMatrix::identity(3);
        CHECK(r.max_abs() < 1e-12);
    }
    SUBCASE("inv-sqrt of diag(4,1)") {
        ComplexMatrix d(2, 2);
        d(0, 0) = 4.0;
        d(1, 1) = 1.0;
        auto r = matrix_function(d, inv_sqrtf);
        CHECK(r(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("inv-sqrt of diag(1,0): pseudo keeps the support") {
        ComplexMatrix d(2, 2);
        d(0, 0) = 1.0;
        auto r = matrix_function(d, inv_sqrtf, ZeroPolicy::pseudo);
        CHECK(r(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(r(1, 1)) < 1e-12);
    }
    SUBCASE("inv-sqrt of singular matrix errors by default") {
        ComplexMatrix d(2, 2);
        d(0, 0) = 1.0;
        CHECK_THROWS_AS(matrix_function(d, inv_sqrtf, ZeroPolicy::error), SingularMatrix);
    }
}

TEST_CASE("matrix_function properties on random PSD inputs") {
    for (std::uint64_t seed = 500; seed < 520; ++seed) {
        auto h = random_hermitian(4 + seed % 5, seed);
        auto psd = h * h; // PSD by construction

        auto id = matrix_function(psd, [](double x) { return x; });
        id -= psd;
        CHECK(id.max_abs() <= 1e-10);

        auto root = matrix_function(psd, [](double x) { return std::sqrt(x); });
        auto sq = root * root;
        sq -= psd;
        CHECK(sq.max_abs() <= 1e-8);
    }
}
