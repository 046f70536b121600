#ifndef AMOEBA_BIG_UINT_HPP
#define AMOEBA_BIG_UINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace amoeba {

/// Unsigned arbitrary-precision integer, base 10^9 limbs.
///
/// Group orders are products of orbit sizes and must stay exact well past the
/// 64-bit factorial limit, so no fixed-width shortcut is taken anywhere.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    BigUint(uint64_t value);  // NOLINT(google-explicit-constructor)

    static BigUint factorial(int n);

    BigUint& operator*=(const BigUint& other);
    BigUint operator*(const BigUint& other) const;
    BigUint& operator+=(const BigUint& other);
    BigUint operator+(const BigUint& other) const;

    bool operator==(const BigUint& other) const = default;
    std::strong_ordering operator<=>(const BigUint& other) const;

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    /// Value as uint64_t; throws if it does not fit.
    uint64_t to_uint64() const;
    bool fits_uint64() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<uint32_t> limbs_;  // little-endian, base 1e9
};

}  // namespace amoeba

#endif
