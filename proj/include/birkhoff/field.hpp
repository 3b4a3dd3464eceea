#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace birkhoff {

/// A prime modulus, validated at construction by trial division.
class Prime {
public:
    explicit Prime(int p);

    int value() const { return p_; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

private:
    int p_;
};

/// Little-endian base-p digit vector: digits[0] is the least significant dit.
using DitVector = std::vector<int>;

bool is_prime(long long n);

/// If n = p^w for a prime p and w >= 1, returns (p, w).
std::optional<std::pair<int, int>> prime_power_split(long long n);

/// p^w without overflow checks beyond desk scale (asserts the result fits in long long).
long long ipow(long long base, int exp);

/// Reduces v into {0..p-1}, handling negative values.
int mod_norm(long long v, int p);

/// Multiplicative inverse of a modulo p. Throws std::domain_error when a ≡ 0 (mod p).
int mod_inverse(int a, const Prime& p);

/// Smallest g in {1..p-1} whose multiplicative order mod p is p-1.
int primitive_root(const Prime& p);

/// Discrete-log position φ(a) in {0..p-2}: g^φ(a) ≡ a (mod p) for g = primitive_root(p).
/// φ(1) = 0, φ(g) = 1, φ(ab) = φ(a) + φ(b) mod (p-1). Throws when a ≡ 0.
int dlog_position(int a, const Prime& p);

/// Base-p expansion of z into w dits. Requires 0 <= z < p^w.
DitVector to_dits(long long z, const Prime& p, int w);

/// Inverse of to_dits: Σ_j digits[j]·p^j. Digits must lie in {0..p-1}.
long long from_dits(const DitVector& digits, const Prime& p);

} // namespace birkhoff
