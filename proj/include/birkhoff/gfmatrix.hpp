#pragma once

#include <vector>

#include "birkhoff/field.hpp"

namespace birkhoff {

/// Dense w×w matrix over F_p, row-major, entries in {0..p-1}.
class GfMatrix {
public:
    GfMatrix(const Prime& p, int w); // zero matrix
    static GfMatrix identity(const Prime& p, int w);

    int p() const { return p_; }
    int dim() const { return w_; }

    int operator()(int r, int c) const { return e_[static_cast<size_t>(r * w_ + c)]; }
    void set(int r, int c, int v);

    const std::vector<int>& flat() const { return e_; }

    friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
        return a.p_ == b.p_ && a.w_ == b.w_ && a.e_ == b.e_;
    }
    /// Lexicographic order on the flattened row-major entries (same p, w assumed).
    friend bool operator<(const GfMatrix& a, const GfMatrix& b) { return a.e_ < b.e_; }

private:
    int p_;
    int w_;
    std::vector<int> e_;
};

GfMatrix gf_add(const GfMatrix& a, const GfMatrix& b);
GfMatrix gf_sub(const GfMatrix& a, const GfMatrix& b);
GfMatrix gf_mul(const GfMatrix& a, const GfMatrix& b);
GfMatrix gf_transpose(const GfMatrix& a);
DitVector gf_matvec(const GfMatrix& a, const DitVector& v);

int gf_det(const GfMatrix& a);
int gf_rank(const GfMatrix& a);

/// Inverse over F_p. Throws std::domain_error when the matrix is singular.
GfMatrix gf_invert(const GfMatrix& a);

/// True iff a·u = b has a solution u, i.e. b lies in the column space of a.
bool gf_solvable(const GfMatrix& a, const DitVector& b);

/// All invertible w×w matrices over F_p, lexicographic in the flattened entries.
/// Count is Π_{i=0}^{w-1}(p^w - p^i). Throws std::length_error when p^{w²} exceeds
/// the enumeration guard (10^7 candidates).
std::vector<GfMatrix> enumerate_gl(int w, const Prime& p);

/// The invertible pitch matrix x with Σ_j s_j·x_{j,v} = r_v (mod p) for every v,
/// built from the least-significant nonzero dits of r and s: a sparse solution with
/// unit diagonal away from those positions and one solved row. For w = 1 this is
/// exactly [r·s⁻¹ mod p]. Requires r, s in {1..p^w-1}.
GfMatrix pitch_matrix(long long r, long long s, const Prime& p, int w);

} // namespace birkhoff
