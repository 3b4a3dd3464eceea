#include "birkhoff/bignat.hpp"

#include <cassert>
#include <stdexcept>

namespace birkhoff {

namespace {
constexpr uint64_t kBase = 1'000'000'000ULL;
}

BigNat::BigNat(uint64_t v) {
    while (v > 0) {
        limbs_.push_back(static_cast<uint32_t>(v % kBase));
        v /= kBase;
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigNat::mul(uint32_t m) {
    uint64_t carry = 0;
    for (uint32_t& limb : limbs_) {
        const uint64_t v = static_cast<uint64_t>(limb) * m + carry;
        limb = static_cast<uint32_t>(v % kBase);
        carry = v / kBase;
    }
    while (carry > 0) {
        limbs_.push_back(static_cast<uint32_t>(carry % kBase));
        carry /= kBase;
    }
    trim();
}

void BigNat::div2() {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        const uint64_t v = rem * kBase + limbs_[i];
        limbs_[i] = static_cast<uint32_t>(v / 2);
        rem = v % 2;
    }
    if (rem != 0) throw std::domain_error("BigNat::div2: value is odd");
    trim();
}

bool BigNat::fits_u64() const {
    if (limbs_.size() > 3) return false;
    if (limbs_.size() < 3) return true;
    // 3 limbs: value < 1e27; compare against 2^64-1 via the top limb
    const uint64_t hi = limbs_[2];
    if (hi > 18) return false;
    if (hi < 18) return true;
    return limbs_[1] < 446744073ULL || (limbs_[1] == 446744073ULL && limbs_[0] <= 709551615ULL);
}

uint64_t BigNat::as_u64() const {
    assert(fits_u64());
    uint64_t v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v;
}

std::string BigNat::str() const {
    if (limbs_.empty()) return "0";
    std::string s = std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

} // namespace birkhoff
