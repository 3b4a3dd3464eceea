#pragma once

#include <string>
#include <vector>

#include "birkhoff/bignat.hpp"
#include "birkhoff/linalg.hpp"

namespace birkhoff {

enum class Strategy { strategy1, strategy2, structural };

std::string to_string(Strategy s);

struct DecompTerm {
    GroupElement element;
    cplx weight;
};

/// A weighted sum of permutation matrices, Σ_σ c_σ·P_σ, with group metadata.
/// Every decomposition satisfies Σc = 1; strategies 1 and 2 additionally give
/// Σ|c|² = 1. Strategy 2 writes exact zeros on odd permutations.
struct Decomposition {
    GroupKind group;
    Strategy strategy;
    std::string t_choice;
    int n = 0;
    int p = 0; // structured kinds only
    int w = 0;
    long long group_order = 0; // N
    std::vector<DecompTerm> terms;
};

/// Lower-right (n-1)×(n-1) block of T†·P_σ·T. The border is checked to be
/// (1, 0, ..., 0) within 1e-10, which holds because P_σ has unit line sums.
ComplexMatrix standard_irrep(const Perm& sigma, const ComplexMatrix& T);

/// Per-element standard-representation blocks and characters for a whole group.
struct StandardIrrepTable {
    std::vector<ComplexMatrix> d1; // D⁽¹⁾(σ), (n-1)×(n-1)
    std::vector<int> chi1;         // χ⁽¹⁾(σ) = Tr(P_σ) - 1, exact
};

StandardIrrepTable build_irrep_table(const GroupTable& g, const ComplexMatrix& T);

struct Strategy2Applicability {
    bool applicable = false;
    std::string reason;         // names the (group, p, w) case either way
    bool order_condition = false; // N >= 2 + 2(n-1)²
};

Strategy2Applicability strategy2_applicable(GroupKind kind, int n, int p = 0, int w = 0);
Strategy2Applicability strategy2_applicable(const GroupTable& g);

/// Weight per element: c_σ = δ_σ + (n-1)/N·[Tr(D⁽¹⁾(σ⁻¹)·U) - χ⁽¹⁾(σ⁻¹)].
/// Exactly N terms; Σc = 1 and Σ|c|² = 1 within tolerance.
Decomposition decompose_strategy1(const XuMatrix& x, const GroupTable& g);

/// Doubled weights on even permutations only:
/// c_σ = δ_σ + 2(n-1)/N·[Tr(D⁽¹⁾(σ⁻¹)·U) - χ⁽¹⁾(σ⁻¹)] for even σ, 0 for odd σ.
/// Throws std::domain_error when the group has no anti-standard representation.
Decomposition decompose_strategy2(const XuMatrix& x, const GroupTable& g);

/// Expansion of X = W + (1/n)·Σ_{r,s} U_{r-1,s-1}·M_{r,s} over supercirculant
/// (prime n) or epicirculant (prime power n) labels, accumulating weights on the
/// distinct (shift, pitch) pairs. Σc = 1 always; Σ|c|² equals (1 + ‖U‖²_F)/n,
/// which is 1 only when the core block U is unitary.
Decomposition decompose_structural(const XuMatrix& x);

/// Same expansion for any matrix whose line sums are all 1 within tol; the
/// block-diagonal form behind it needs only the line sums, not unitarity.
/// For non-unitary inputs the sum rule survives but the squared-norm rule fails.
Decomposition decompose_structural(const ComplexMatrix& x, double line_sum_tol);

ComplexMatrix reconstruct(const Decomposition& d, int n);

inline constexpr double kDefaultSumTol = 1e-9;
inline constexpr double kDefaultResidualFactor = 1e-8; // residual tol = factor·n
inline constexpr double kNegligibleWeight = 1e-13;

struct VerifyReport {
    cplx sum_c{0, 0};
    double sum_c_err = 0;    // |Σc - 1|
    double sum_abs2 = 0;     // Σ|c|²
    double sum_abs2_err = 0; // |Σ|c|² - 1|
    bool sum_abs2_asserted = true;
    double residual = 0; // ‖Σ c_σ P_σ - X‖_F
    long long nonzero_count = 0;
    long long negligible_count = 0; // 0 < |c| < 1e-13, kept but reported
    double tol_sum = 0;
    double tol_residual = 0;
    bool pass = false;
};

/// Audits a decomposition against its source matrix. tol_residual < 0 selects
/// the default 1e-8·n. The Σ|c|² gate is skipped for structural decompositions.
VerifyReport verify(const Decomposition& d, const ComplexMatrix& x, double tol_sum = kDefaultSumTol,
                    double tol_residual = -1.0);

struct TermCount {
    BigNat count;
    GroupKind group;
    Strategy strategy;
};

/// Number of Birkhoff terms needed at dimension n, with the group and strategy
/// that attain it: the affine group for prime powers (halved when the second
/// strategy applies), n!/2 otherwise, 1 for n = 1.
TermCount term_count(int n);

} // namespace birkhoff
