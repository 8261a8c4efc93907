#include <algorithm>
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rvnorm/errors.hpp"
#include "rvnorm/matrix.hpp"

using namespace rvnorm;

namespace {

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
    return ComplexMatrix::from_entries(2, {a, b, c, d});
}

// unitary from a Hermitian generator: exp(iH) = V diag(e^{i lambda}) V*
ComplexMatrix unitary_exp(const HermitianMatrix& h) {
    const EigenDecomposition e = eigh(h);
    const int n = h.dim();
    ComplexMatrix u(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (int k = 0; k < n; ++k) {
                const double lam = e.spectrum.values[static_cast<std::size_t>(k)];
                const Complex phase{std::cos(lam), std::sin(lam)};
                acc += e.vectors.at(i, k) * phase * std::conj(e.vectors.at(j, k));
            }
            u.at(i, j) = acc;
        }
    }
    return u;
}

} // namespace

TEST_CASE("constructors enforce the invariants") {
    CHECK_THROWS_AS(ComplexMatrix(0), DomainError);
    CHECK_THROWS_AS(
        ComplexMatrix::from_entries(2, {1.0, 2.0, 3.0}), DomainError);
    CHECK_THROWS_AS(ComplexMatrix::from_entries(
                        1, {Complex{std::nan(""), 0.0}}),
                    DomainError);

    // asymmetry beyond 1e-12 is rejected, below it is symmetrized away
    CHECK_THROWS_AS(HermitianMatrix(m2(1.0, {0.0, 1e-6}, 0.0, 1.0)),
                    DomainError);
    const HermitianMatrix h(m2(1.0, {0.5, 1e-14}, {0.5, 1e-14}, 1.0));
    CHECK(h.at(0, 1) == std::conj(h.at(1, 0)));
}

TEST_CASE("eigenvalues: 2x2 fixed spectra") {
    const Spectrum s1 = eigenvalues(HermitianMatrix(m2(0, 1, 1, 0)));
    CHECK(s1.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s1.values[1] == doctest::Approx(-1.0).epsilon(1e-12));

    const Spectrum s2 = eigenvalues(HermitianMatrix(m2(2, 0, 0, 2)));
    CHECK(s2.values[0] == doctest::Approx(2.0));
    CHECK(s2.values[1] == doctest::Approx(2.0));

    // [[1, i], [-i, 1]]: characteristic polynomial (1-x)^2 - 1 = 0
    const Spectrum s3 =
        eigenvalues(HermitianMatrix(m2(1.0, {0.0, 1.0}, {0.0, -1.0}, 1.0)));
    CHECK(s3.values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(s3.values[1]) < 1e-12);
}

TEST_CASE("eigenvalues: spectrum invariants on random matrices") {
    for (int n : {2, 5, 16, 40}) {
        RngStream rng(100 + static_cast<std::uint64_t>(n));
        const HermitianMatrix a = random_hermitian(n, rng);
        const Spectrum s = eigenvalues(a);
        REQUIRE(static_cast<int>(s.values.size()) == n);
        CHECK(std::is_sorted(s.values.rbegin(), s.values.rend()));
        double sum = 0.0, sumsq = 0.0;
        for (double v : s.values) {
            sum += v;
            sumsq += v * v;
        }
        const double tr = trace(a.matrix()).real();
        const double f2 = frobenius_norm(a) * frobenius_norm(a);
        CHECK(std::abs(sum - tr) <= 1e-10 * (1.0 + std::abs(tr)));
        CHECK(std::abs(sumsq - f2) <= 1e-10 * (1.0 + f2));
    }
}

TEST_CASE("eigenvalues: invariant under unitary conjugation") {
    RngStream rng(7);
    const HermitianMatrix a = random_hermitian(6, rng);
    const ComplexMatrix u = unitary_exp(random_hermitian(6, rng));
    const ComplexMatrix conj_a = matmul(matmul(u, a.matrix()), adjoint(u));
    const Spectrum s0 = eigenvalues(a);
    const Spectrum s1 = eigenvalues(HermitianMatrix(conj_a));
    for (std::size_t k = 0; k < s0.values.size(); ++k) {
        CHECK(s0.values[k] == doctest::Approx(s1.values[k]).epsilon(1e-8));
    }
}

TEST_CASE("eigh: reconstructs the matrix") {
    RngStream rng(11);
    const HermitianMatrix a = random_hermitian(5, rng);
    const EigenDecomposition e = eigh(a);
    ComplexMatrix recon(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Complex acc{};
            for (int k = 0; k < 5; ++k)
                acc += e.vectors.at(i, k) *
                       e.spectrum.values[static_cast<std::size_t>(k)] *
                       std::conj(e.vectors.at(j, k));
            recon.at(i, j) = acc;
        }
    CHECK(frobenius_norm(recon - a.matrix()) < 1e-10 * frobenius_norm(a));
}

TEST_CASE("frobenius norm") {
    CHECK(frobenius_norm(m2(1, 1, 1, 1)) == doctest::Approx(2.0));
    CHECK(frobenius_norm(ComplexMatrix(3)) == 0.0);
    CHECK(frobenius_norm(m2(3, 0, 0, 4)) == doctest::Approx(5.0));
}

TEST_CASE("schatten norm") {
    CHECK(schatten_norm(HermitianMatrix(m2(3, 0, 0, -4)), 2.0) ==
          doctest::Approx(5.0));
    const HermitianMatrix one(ComplexMatrix::from_entries(
        3, {1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(schatten_norm(one, 1.5) == doctest::Approx(1.0));
    CHECK(schatten_norm(HermitianMatrix(m2(1, 0, 0, 1)), 1.5) ==
          doctest::Approx(std::pow(2.0, 2.0 / 3.0)));
    CHECK_THROWS_AS(schatten_norm(one, 1.0), DomainError);
    CHECK_THROWS_AS(schatten_norm(one, 0.5), DomainError);
}

TEST_CASE("schatten norm: alpha = 2 coincides with Frobenius") {
    RngStream rng(3);
    for (int k = 0; k < 20; ++k) {
        const HermitianMatrix a = random_hermitian(4, rng);
        CHECK(schatten_norm(a, 2.0) ==
              doctest::Approx(frobenius_norm(a)).epsilon(1e-10));
    }
}

TEST_CASE("schatten norm: singular-value route agrees on Hermitian input") {
    RngStream rng(4);
    for (int k = 0; k < 10; ++k) {
        const HermitianMatrix a = random_hermitian(4, rng);
        CHECK(schatten_norm(a.matrix(), 1.5) ==
              doctest::Approx(schatten_norm(a, 1.5)).epsilon(1e-9));
    }
}

TEST_CASE("rotate: fixed cases") {
    RngStream rng(5);
    const HermitianMatrix a = random_hermitian(3, rng);
    const HermitianMatrix doubled = rotate(a.matrix(), 0.0);
    CHECK(frobenius_norm(doubled.matrix() -
                         (Complex{2.0, 0.0} * a.matrix())) < 1e-14);
    const HermitianMatrix zero = rotate(a.matrix(), std::numbers::pi / 2.0);
    CHECK(frobenius_norm(zero) < 1e-14 * frobenius_norm(a));

    const HermitianMatrix flip = rotate(m2(0, 1, 0, 0), 0.0);
    CHECK(frobenius_norm(flip.matrix() - m2(0, 1, 1, 0)) < 1e-15);
}

TEST_CASE("rotate: pi-antiperiodicity") {
    RngStream rng(6);
    const ComplexMatrix z = random_complex(4, rng);
    for (double t : {0.3, 1.1, 2.9}) {
        const ComplexMatrix lhs = rotate(z, t + std::numbers::pi).matrix();
        const ComplexMatrix rhs = Complex{-1.0, 0.0} * rotate(z, t).matrix();
        CHECK(frobenius_norm(lhs - rhs) < 1e-12 * frobenius_norm(z));
    }
}

TEST_CASE("matmul, adjoint, trace") {
    RngStream rng(8);
    const ComplexMatrix z = random_complex(3, rng);
    CHECK(frobenius_norm(matmul(ComplexMatrix::identity(3), z) - z) == 0.0);
    CHECK(trace(ones_minus_identity(3).matrix() +
                ComplexMatrix::identity(3)).real() == doctest::Approx(3.0));
    const ComplexMatrix adj = adjoint(m2(0.0, {0.0, 1.0}, 0.0, 0.0));
    CHECK(adj.at(0, 1) == Complex{0.0, 0.0});
    CHECK(adj.at(1, 0) == Complex{0.0, -1.0});
    CHECK_THROWS_AS(matmul(z, ComplexMatrix(2)), DomainError);
}

TEST_CASE("ones minus identity") {
    const HermitianMatrix a2 = ones_minus_identity(2);
    CHECK(frobenius_norm(a2.matrix() - m2(0, 1, 1, 0)) == 0.0);
    const Spectrum s = eigenvalues(ones_minus_identity(3));
    CHECK(s.values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.values[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s.values[2] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("random generators are deterministic in the seed") {
    RngStream r1(7), r2(7);
    const HermitianMatrix a = random_hermitian(4, r1);
    const HermitianMatrix b = random_hermitian(4, r2);
    CHECK(frobenius_norm(a.matrix() - b.matrix()) == 0.0);
    RngStream r3(8);
    const HermitianMatrix c = random_hermitian(4, r3);
    CHECK(frobenius_norm(a.matrix() - c.matrix()) > 0.0);
}
