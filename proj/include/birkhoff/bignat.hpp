#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace birkhoff {

/// Unsigned big integer, base 10^9 limbs; just enough arithmetic for exact
/// factorials and affine-group orders up to n = 64.
class BigNat {
public:
    BigNat(uint64_t v = 0); // NOLINT(google-explicit-constructor)

    void mul(uint32_t m);
    void div2(); // value must be even

    bool fits_u64() const;
    uint64_t as_u64() const; // requires fits_u64()

    std::string str() const;

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }
    friend bool operator==(const BigNat& a, uint64_t v) { return a == BigNat(v); }

private:
    std::vector<uint32_t> limbs_; // little-endian, base 1e9
    void trim();
};

} // namespace birkhoff
