#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "birkhoff/perm.hpp"

namespace birkhoff {

using cplx = std::complex<double>;

/// Dense row-major complex matrix, 0-indexed.
class ComplexMatrix {
public:
    ComplexMatrix(int rows, int cols);
    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return e_[static_cast<size_t>(r * cols_ + c)]; }
    const cplx& operator()(int r, int c) const { return e_[static_cast<size_t>(r * cols_ + c)]; }

    const std::vector<cplx>& flat() const { return e_; }

private:
    int rows_, cols_;
    std::vector<cplx> e_;
};

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_adjoint(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
double frobenius_dist(const ComplexMatrix& a, const ComplexMatrix& b);

/// 0/1 matrix of a permutation: entry (k, l) = 1 iff l = images[k].
ComplexMatrix perm_to_matrix(const Perm& sigma);

/// Unitary DFT: F_{k,l} = exp(2πi·kl/m)/√m. First line constant 1/√m.
ComplexMatrix fourier(int m);

/// The constant transform behind the X ↔ U correspondence: for n = p^w the
/// w-fold Kronecker power of fourier(p), with entries exp(2πi·f(a,b)/p)/√n where
/// f is the ditwise product mod p; otherwise fourier(n). Unitary, first row and
/// column constant 1/√n.
ComplexMatrix build_T(int n);

/// Tag recording which T was used ("kron_dft" for prime powers, else "dft").
std::string t_choice_tag(int n);

/// (M_{r,s})_{k,l} = n·T_{k,r}·conj(T_{l,s}); unit-modulus entries. r, s in {1..n-1}.
ComplexMatrix m_matrix(const ComplexMatrix& T, int r, int s);

struct XuReport {
    double unitarity_residual = 0; // ‖X†X - I‖_F
    double line_sum_residual = 0;  // max |row or column sum - 1|
    double tol = 0;
    bool unitary_ok = false;
    bool line_sums_ok = false;
    bool pass() const { return unitary_ok && line_sums_ok; }
};

/// Report-style check that X is unitary with all line sums 1, within tol.
XuReport check_xu(const ComplexMatrix& x, double tol);

inline constexpr double kXuTol = 1e-9;

/// A validated unit-line-sum unitary with its cached report.
class XuMatrix {
public:
    /// Throws std::domain_error naming the failed check when X is not in XU(n).
    static XuMatrix validated(ComplexMatrix x, double tol = kXuTol);

    const ComplexMatrix& matrix() const { return m_; }
    const XuReport& report() const { return report_; }
    int n() const { return m_.rows(); }

private:
    XuMatrix(ComplexMatrix m, XuReport r) : m_(std::move(m)), report_(r) {}
    ComplexMatrix m_;
    XuReport report_;
};

/// X = T·diag(1, U)·T† for U in U(n-1). Throws when U is not unitary.
XuMatrix xu_from_unitary(const ComplexMatrix& u, int n);

/// Lower-right (n-1)×(n-1) block of T†XT; checks the border is (1, 0, ..., 0).
ComplexMatrix unitary_from_xu(const XuMatrix& x);

/// Haar-distributed m×m unitary: QR of a complex standard-normal matrix with the
/// R-diagonal phases folded into Q. Deterministic per seed.
ComplexMatrix haar_unitary(int m, uint64_t seed);

/// All entries 1/n (doubly stochastic, not unitary for n >= 2).
ComplexMatrix van_der_waerden(int n);

} // namespace birkhoff
