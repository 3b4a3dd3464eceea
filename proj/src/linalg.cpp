#include "birkhoff/linalg.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace birkhoff {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_square(const ComplexMatrix& a, const char* who) {
    if (a.rows() != a.cols()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

// exp(2πi·t/m) for integer t, phase from the reduced exponent
cplx root_of_unity(long long t, int m) {
    const int r = mod_norm(t, m);
    const double ang = kTwoPi * static_cast<double>(r) / static_cast<double>(m);
    return {std::cos(ang), std::sin(ang)};
}

} // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), cplx{0.0, 0.0}) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ComplexMatrix: negative dimension");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix mat_adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0;
    for (const cplx& v : a.flat()) s += std::norm(v);
    return std::sqrt(s);
}

double frobenius_dist(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("frobenius_dist: dimension mismatch");
    }
    double s = 0;
    for (size_t i = 0; i < a.flat().size(); ++i) s += std::norm(a.flat()[i] - b.flat()[i]);
    return std::sqrt(s);
}

ComplexMatrix perm_to_matrix(const Perm& sigma) {
    ComplexMatrix m(sigma.size(), sigma.size());
    for (int k = 0; k < sigma.size(); ++k) m(k, sigma[k]) = 1.0;
    return m;
}

ComplexMatrix fourier(int m) {
    if (m < 1) throw std::invalid_argument("fourier: dimension must be >= 1");
    ComplexMatrix f(m, m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) f(k, l) = scale * root_of_unity(static_cast<long long>(k) * l, m);
    return f;
}

ComplexMatrix build_T(int n) {
    if (n < 1) throw std::invalid_argument("build_T: dimension must be >= 1");
    const auto pw = prime_power_split(n);
    if (!pw || pw->second == 1) return fourier(n);
    const auto [p, w] = *pw;
    const Prime prime(p);
    ComplexMatrix t(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<DitVector> dits(static_cast<size_t>(n));
    for (int z = 0; z < n; ++z) dits[static_cast<size_t>(z)] = to_dits(z, prime, w);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            long long f = 0;
            for (int j = 0; j < w; ++j) {
                f += static_cast<long long>(dits[static_cast<size_t>(a)][static_cast<size_t>(j)]) *
                     dits[static_cast<size_t>(b)][static_cast<size_t>(j)];
            }
            t(a, b) = scale * root_of_unity(f, p);
        }
    }
    return t;
}

std::string t_choice_tag(int n) {
    const auto pw = prime_power_split(n);
    return (pw && pw->second > 1) ? "kron_dft" : "dft";
}

ComplexMatrix m_matrix(const ComplexMatrix& T, int r, int s) {
    require_square(T, "m_matrix");
    const int n = T.rows();
    if (r < 1 || r > n - 1 || s < 1 || s > n - 1) {
        throw std::domain_error("m_matrix: labels must lie in {1..n-1}");
    }
    ComplexMatrix m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m(k, l) = static_cast<double>(n) * T(k, r) * std::conj(T(l, s));
    return m;
}

XuReport check_xu(const ComplexMatrix& x, double tol) {
    require_square(x, "check_xu");
    const int n = x.rows();
    XuReport rep;
    rep.tol = tol;
    const ComplexMatrix gram = mat_mul(mat_adjoint(x), x);
    rep.unitarity_residual = frobenius_dist(gram, ComplexMatrix::identity(n));
    double worst = 0;
    for (int i = 0; i < n; ++i) {
        cplx row{0, 0}, col{0, 0};
        for (int j = 0; j < n; ++j) {
            row += x(i, j);
            col += x(j, i);
        }
        worst = std::max({worst, std::abs(row - cplx{1, 0}), std::abs(col - cplx{1, 0})});
    }
    rep.line_sum_residual = worst;
    rep.unitary_ok = rep.unitarity_residual <= tol;
    rep.line_sums_ok = rep.line_sum_residual <= tol;
    return rep;
}

XuMatrix XuMatrix::validated(ComplexMatrix x, double tol) {
    XuReport rep = check_xu(x, tol);
    if (!rep.pass()) {
        std::string what = "matrix is not in XU(n):";
        if (!rep.unitary_ok) {
            what += " unitarity residual " + std::to_string(rep.unitarity_residual);
        }
        if (!rep.line_sums_ok) {
            what += " line-sum residual " + std::to_string(rep.line_sum_residual);
        }
        what += " exceeds tol " + std::to_string(tol);
        throw std::domain_error(what);
    }
    return XuMatrix(std::move(x), rep);
}

XuMatrix xu_from_unitary(const ComplexMatrix& u, int n) {
    require_square(u, "xu_from_unitary");
    if (u.rows() != n - 1) throw std::invalid_argument("xu_from_unitary: U must be (n-1)×(n-1)");
    if (n > 1) {
        const double res = frobenius_dist(mat_mul(mat_adjoint(u), u), ComplexMatrix::identity(n - 1));
        if (res > 1e-9 * std::max(1, n)) {
            throw std::domain_error("xu_from_unitary: U is not unitary (residual " + std::to_string(res) + ")");
        }
    }
    const ComplexMatrix t = build_T(n);
    ComplexMatrix core(n, n);
    core(0, 0) = 1.0;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) core(i, j) = u(i - 1, j - 1);
    ComplexMatrix x = mat_mul(mat_mul(t, core), mat_adjoint(t));
    return XuMatrix::validated(std::move(x));
}

ComplexMatrix unitary_from_xu(const XuMatrix& x) {
    const int n = x.n();
    const ComplexMatrix t = build_T(n);
    const ComplexMatrix core = mat_mul(mat_mul(mat_adjoint(t), x.matrix()), t);
    // border must be (1, 0, ..., 0); a line-sum residual within the validation
    // tolerance can push border entries up to about that size
    double border = std::abs(core(0, 0) - cplx{1, 0});
    for (int i = 1; i < n; ++i) border = std::max({border, std::abs(core(0, i)), std::abs(core(i, 0))});
    if (border > std::max(1e-9, x.report().tol)) {
        throw std::domain_error("unitary_from_xu: T†XT is not block diagonal (border residual " +
                                std::to_string(border) + ")");
    }
    ComplexMatrix u(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) u(i - 1, j - 1) = core(i, j);
    return u;
}

ComplexMatrix haar_unitary(int m, uint64_t seed) {
    if (m < 1) throw std::invalid_argument("haar_unitary: dimension must be >= 1");
    std::mt19937_64 rng(seed);
    // Box-Muller on explicitly constructed uniforms keeps the stream pinned to the
    // engine alone, independent of library distribution internals.
    auto uniform = [&rng]() { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53; };
    auto gaussian = [&]() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    };
    ComplexMatrix a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a(i, j) = cplx{gaussian(), gaussian()};

    // Householder QR; Q accumulated by right-multiplying the reflectors.
    ComplexMatrix r = a;
    ComplexMatrix q = ComplexMatrix::identity(m);
    std::vector<cplx> v(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        double normx = 0;
        for (int i = k; i < m; ++i) normx += std::norm(r(i, k));
        normx = std::sqrt(normx);
        if (normx == 0.0) continue;
        const cplx x0 = r(k, k);
        const cplx phase = (std::abs(x0) == 0.0) ? cplx{1, 0} : x0 / std::abs(x0);
        const cplx alpha = -phase * normx;
        for (int i = k; i < m; ++i) v[static_cast<size_t>(i)] = r(i, k);
        v[static_cast<size_t>(k)] -= alpha;
        double vnorm2 = 0;
        for (int i = k; i < m; ++i) vnorm2 += std::norm(v[static_cast<size_t>(i)]);
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;
        for (int j = k; j < m; ++j) { // R ← H·R
            cplx dot{0, 0};
            for (int i = k; i < m; ++i) dot += std::conj(v[static_cast<size_t>(i)]) * r(i, j);
            dot *= beta;
            for (int i = k; i < m; ++i) r(i, j) -= v[static_cast<size_t>(i)] * dot;
        }
        for (int i = 0; i < m; ++i) { // Q ← Q·H
            cplx dot{0, 0};
            for (int j = k; j < m; ++j) dot += q(i, j) * v[static_cast<size_t>(j)];
            dot *= beta;
            for (int j = k; j < m; ++j) q(i, j) -= dot * std::conj(v[static_cast<size_t>(j)]);
        }
    }
    // fold the R-diagonal phases into Q so the distribution is Haar
    for (int j = 0; j < m; ++j) {
        const cplx d = r(j, j);
        const cplx phase = (std::abs(d) == 0.0) ? cplx{1, 0} : d / std::abs(d);
        for (int i = 0; i < m; ++i) q(i, j) *= phase;
    }
    return q;
}

ComplexMatrix van_der_waerden(int n) {
    if (n < 1) throw std::invalid_argument("van_der_waerden: dimension must be >= 1");
    ComplexMatrix w(n, n);
    const double v = 1.0 / static_cast<double>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) = v;
    return w;
}

} // namespace birkhoff
