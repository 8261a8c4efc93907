#include "rvnorm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rvnorm/errors.hpp"

namespace rvnorm {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kJacobiTol = 1e-12;
constexpr int kMaxSweeps = 50;

bool finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void require_dim(int n) {
    if (n < 1) {
        throw DomainError("matrix dimension must be >= 1, got " +
                          std::to_string(n));
    }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DomainError("dimension mismatch: " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(int n) : n_(n) {
    require_dim(n);
    entries_.assign(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::from_entries(int n, std::vector<Complex> entries) {
    require_dim(n);
    if (entries.size() != static_cast<std::size_t>(n) * n) {
        throw DomainError("entry count does not match an n x n matrix");
    }
    for (const Complex& c : entries) {
        if (!finite(c)) throw DomainError("matrix entries must be finite");
    }
    ComplexMatrix m(n);
    m.entries_ = std::move(entries);
    return m;
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& m) {
    ComplexMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r.at(i, j) = scale * m.at(i, j);
    return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    }
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& z) {
    ComplexMatrix r(z.dim());
    for (int i = 0; i < z.dim(); ++i)
        for (int j = 0; j < z.dim(); ++j) r.at(i, j) = std::conj(z.at(j, i));
    return r;
}

Complex trace(const ComplexMatrix& z) {
    Complex t{0.0, 0.0};
    for (int i = 0; i < z.dim(); ++i) t += z.at(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& z) {
    double s = 0.0;
    for (int i = 0; i < z.dim(); ++i)
        for (int j = 0; j < z.dim(); ++j) s += std::norm(z.at(i, j));
    return std::sqrt(s);
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& z) : m_(z.dim()) {
    const int n = z.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const Complex residual = z.at(i, j) - std::conj(z.at(j, i));
            if (std::abs(residual) > kHermTol) {
                throw DomainError(
                    "matrix is not Hermitian within tolerance 1e-12");
            }
            const Complex sym = 0.5 * (z.at(i, j) + std::conj(z.at(j, i)));
            if (i == j) {
                m_.at(i, i) = Complex{sym.real(), 0.0};
            } else {
                m_.at(i, j) = sym;
                m_.at(j, i) = std::conj(sym);
            }
        }
    }
}

double frobenius_norm(const HermitianMatrix& a) {
    return frobenius_norm(a.matrix());
}

namespace {

// One cyclic complex Jacobi pass infrastructure. The rotation for the (p, q)
// pair zeroes a_pq: with phi = a_pq/|a_pq|, theta = (a_qq - a_pp)/(2|a_pq|),
// t = sign(theta)/(|theta| + sqrt(theta^2+1)), c = 1/sqrt(1+t^2), s = t c,
// the unitary U has U_pp = U_qq = c, U_pq = s phi, U_qp = -s conj(phi).
struct JacobiWorkspace {
    int n;
    std::vector<Complex> a;  // row-major, kept Hermitian
    std::vector<Complex> v;  // accumulated rotations (optional)
    bool want_vectors;

    Complex& A(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    Complex& V(int i, int j) { return v[static_cast<std::size_t>(i) * n + j]; }

    double off_norm() const {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                s += std::norm(a[static_cast<std::size_t>(p) * n + q]);
        return std::sqrt(2.0 * s);
    }

    void rotate_pair(int p, int q) {
        const Complex apq = A(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) return;
        const Complex phi = apq / mag;
        const double theta = (A(q, q).real() - A(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex sphi = s * phi;
        const Complex sphic = s * std::conj(phi);

        const double app = A(p, p).real();
        const double aqq = A(q, q).real();
        A(p, p) = Complex{app - t * mag, 0.0};
        A(q, q) = Complex{aqq + t * mag, 0.0};
        A(p, q) = Complex{0.0, 0.0};
        A(q, p) = Complex{0.0, 0.0};

        for (int k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            const Complex akp = A(k, p);
            const Complex akq = A(k, q);
            A(k, p) = c * akp - sphic * akq;
            A(k, q) = sphi * akp + c * akq;
            A(p, k) = std::conj(A(k, p));
            A(q, k) = std::conj(A(k, q));
        }
        if (want_vectors) {
            for (int k = 0; k < n; ++k) {
                const Complex vkp = V(k, p);
                const Complex vkq = V(k, q);
                V(k, p) = c * vkp - sphic * vkq;
                V(k, q) = sphi * vkp + c * vkq;
            }
        }
    }
};

EigenDecomposition jacobi_eigh(const HermitianMatrix& m, bool want_vectors) {
    const int n = m.dim();
    JacobiWorkspace ws;
    ws.n = n;
    ws.want_vectors = want_vectors;
    ws.a.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ws.A(i, j) = m.at(i, j);
    if (want_vectors) {
        ws.v.assign(static_cast<std::size_t>(n) * n, Complex{});
        for (int i = 0; i < n; ++i) ws.V(i, i) = 1.0;
    }

    const double norm = frobenius_norm(m);
    bool converged = (norm == 0.0) || (n == 1);
    for (int sweep = 0; !converged && sweep < kMaxSweeps; ++sweep) {
        const double off = ws.off_norm();
        if (off <= kJacobiTol * norm) {
            converged = true;
            break;
        }
        // threshold strategy: early sweeps skip entries that are already
        // small relative to the remaining off-diagonal mass
        const double thresh =
            (sweep < 3) ? 0.1 * off / (static_cast<double>(n) * n) : 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(ws.A(p, q)) > thresh) ws.rotate_pair(p, q);
            }
        }
    }
    if (!converged && ws.off_norm() > kJacobiTol * norm) {
        throw NumericalError("Jacobi eigensolver failed to converge in " +
                             std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return ws.A(i, i).real() > ws.A(j, j).real();
    });

    EigenDecomposition out;
    out.spectrum.values.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out.spectrum.values[static_cast<std::size_t>(k)] =
            ws.A(order[static_cast<std::size_t>(k)],
                 order[static_cast<std::size_t>(k)])
                .real();
    if (want_vectors) {
        out.vectors = ComplexMatrix(n);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                out.vectors.at(i, k) = ws.V(i, order[static_cast<std::size_t>(k)]);
    }
    return out;
}

} // namespace

Spectrum eigenvalues(const HermitianMatrix& a) {
    return jacobi_eigh(a, false).spectrum;
}

EigenDecomposition eigh(const HermitianMatrix& a) {
    return jacobi_eigh(a, true);
}

HermitianMatrix rotate(const ComplexMatrix& z, double t) {
    const int n = z.dim();
    const Complex w{std::cos(t), std::sin(t)};
    const Complex wbar = std::conj(w);
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) {
        const Complex d = w * z.at(i, i) + wbar * std::conj(z.at(i, i));
        r.at(i, i) = Complex{d.real(), 0.0};
        for (int j = i + 1; j < n; ++j) {
            const Complex e = w * z.at(i, j) + wbar * std::conj(z.at(j, i));
            r.at(i, j) = e;
            r.at(j, i) = std::conj(e);
        }
    }
    return HermitianMatrix(r);
}

double schatten_norm(const HermitianMatrix& a, double alpha) {
    if (!(alpha > 1.0 && alpha <= 2.0)) {
        throw DomainError("schatten_norm: alpha must lie in (1, 2], got " +
                          std::to_string(alpha));
    }
    const Spectrum s = eigenvalues(a);
    double acc = 0.0;
    for (double v : s.values) acc += std::pow(std::abs(v), alpha);
    return std::pow(acc, 1.0 / alpha);
}

double schatten_norm(const ComplexMatrix& z, double alpha) {
    if (!(alpha > 1.0 && alpha <= 2.0)) {
        throw DomainError("schatten_norm: alpha must lie in (1, 2], got " +
                          std::to_string(alpha));
    }
    // singular values: sqrt of the (nonnegative) spectrum of Z* Z
    const HermitianMatrix gram(matmul(adjoint(z), z));
    const Spectrum s = eigenvalues(gram);
    double acc = 0.0;
    for (double v : s.values) {
        const double sv = std::sqrt(std::max(v, 0.0));
        acc += std::pow(sv, alpha);
    }
    return std::pow(acc, 1.0 / alpha);
}

HermitianMatrix random_hermitian(int n, RngStream& rng) {
    const ComplexMatrix g = random_complex(n, rng);
    return HermitianMatrix(Complex{0.5, 0.0} * (g + adjoint(g)));
}

ComplexMatrix random_complex(int n, RngStream& rng) {
    require_dim(n);
    ComplexMatrix g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double re, im;
            rng.normal_pair(re, im);
            g.at(i, j) = Complex{re, im};
        }
    }
    return g;
}

HermitianMatrix ones_minus_identity(int n) {
    require_dim(n);
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = (i == j) ? 0.0 : 1.0;
    return HermitianMatrix(m);
}

} // namespace rvnorm
