#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "birkhoff/field.hpp"
#include "birkhoff/gfmatrix.hpp"

namespace birkhoff {

/// Permutation of {0..n-1} in one-line notation: as a 0/1 matrix, row k has its
/// unit entry in column images[k].
class Perm {
public:
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator[](int k) const { return images_[static_cast<size_t>(k)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

private:
    std::vector<int> images_;
};

/// Matrix-product semantics: matrix(compose(a,b)) = matrix(a)·matrix(b).
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);

/// Number of fixed points (= trace of the 0/1 matrix).
int perm_trace(const Perm& a);

enum class Parity { even, odd };

/// Sign from the cycle decomposition; the matrix determinant is +1/-1 accordingly.
Parity perm_parity(const Perm& a);

/// Shift-pitch label for the p×p permutation with unit entries at (k, a+kx mod p).
struct SuperLabel {
    int a; // shift, in {0..p-1}
    int x; // pitch, in {1..p-1}
};

/// Affine label for the p^w × p^w permutation with unit entries at (k, a + x·k)
/// over F_p, k and a read as little-endian dit vectors.
struct EpiLabel {
    DitVector a;
    GfMatrix x; // invertible
};

Perm super_to_perm(const SuperLabel& l, const Prime& p);
SuperLabel super_compose(const SuperLabel& l1, const SuperLabel& l2, const Prime& p);
SuperLabel super_inverse(const SuperLabel& l, const Prime& p);

Perm epi_to_perm(const EpiLabel& l);
EpiLabel epi_compose(const EpiLabel& l1, const EpiLabel& l2);
EpiLabel epi_inverse(const EpiLabel& l);

enum class GroupKind { symmetric, supercirculant, epicirculant };

std::string to_string(GroupKind k);

/// A group element together with its structured label, when the group has one.
struct GroupElement {
    Perm perm;
    std::variant<std::monostate, SuperLabel, EpiLabel> label;
};

/// Enumerated permutation group with deterministic element order (identity first)
/// and per-element inverse indices.
struct GroupTable {
    GroupKind kind;
    int n;     // number of points
    int p = 0; // structured kinds only
    int w = 0;
    std::vector<GroupElement> elems;
    std::vector<int> inverse; // inverse[i] = index of elems[i]⁻¹

    long long order() const { return static_cast<long long>(elems.size()); }
};

inline constexpr long long kGroupOrderGuard = 500'000;

/// S_n in lexicographic one-line order. Throws std::length_error past the guard.
GroupTable symmetric_group(int n);

/// All S_{a,x} for a in {0..p-1}, x in {1..p-1}, lexicographic in (a, x). Order p(p-1).
GroupTable supercirculant_group(const Prime& p);

/// All E_{a,x} over F_p^w: identity first, then lexicographic in (value(a), lex(x)).
/// Order p^w·Π_{i<w}(p^w - p^i).
GroupTable epicirculant_group(const Prime& p, int w);

} // namespace birkhoff
