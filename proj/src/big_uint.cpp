#include "amoeba/big_uint.hpp"

#include <compare>
#include <stdexcept>

namespace amoeba {

namespace {
constexpr uint64_t kBase = 1000000000ull;
}

BigUint::BigUint(uint64_t value) {
    if (value == 0) {
        limbs_ = {0};
        return;
    }
    while (value > 0) {
        limbs_.push_back(static_cast<uint32_t>(value % kBase));
        value /= kBase;
    }
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::factorial(int n) {
    BigUint result(1);
    for (int i = 2; i <= n; ++i) result *= BigUint(static_cast<uint64_t>(i));
    return result;
}

BigUint& BigUint::operator*=(const BigUint& other) {
    *this = *this * other;
    return *this;
}

BigUint BigUint::operator*(const BigUint& other) const {
    if (is_zero() || other.is_zero()) return BigUint(0);
    BigUint result;
    result.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < other.limbs_.size() || carry; ++j) {
            uint64_t cur = result.limbs_[i + j] + carry;
            if (j < other.limbs_.size()) {
                cur += static_cast<uint64_t>(limbs_[i]) * other.limbs_[j];
            }
            result.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    result.trim();
    return result;
}

BigUint& BigUint::operator+=(const BigUint& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t cur = limbs_[i] + carry;
        if (i < other.limbs_.size()) cur += other.limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigUint BigUint::operator+(const BigUint& other) const {
    BigUint result = *this;
    result += other;
    return result;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) {
        return limbs_.size() <=> other.limbs_.size();
    }
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

bool BigUint::fits_uint64() const {
    // 3 limbs can reach up to ~1e27; check by reconstructing with overflow guard
    if (limbs_.size() > 3) return false;
    uint64_t acc = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (acc > (UINT64_MAX - limbs_[i]) / kBase) return false;
        acc = acc * kBase + limbs_[i];
    }
    return true;
}

uint64_t BigUint::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BigUint does not fit in 64 bits");
    uint64_t acc = 0;
    for (size_t i = limbs_.size(); i-- > 0;) acc = acc * kBase + limbs_[i];
    return acc;
}

std::string BigUint::to_string() const {
    std::string out = std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(limbs_[i]);
        out += std::string(9 - chunk.size(), '0');
        out += chunk;
    }
    return out;
}

}  // namespace amoeba
