#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qinst {

/// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
/// Values up to four limbs live inline; larger magnitudes spill to the heap.
class BigInt {
public:
    BigInt() noexcept = default;
    BigInt(long long v) { assign_int64(v); }  // NOLINT
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s);
    std::string to_string() const;
    double to_double() const;

    int sign() const noexcept { return sign_; }
    bool is_zero() const noexcept { return sign_ == 0; }
    bool is_one() const noexcept { return sign_ == 1 && size_ == 1 && limbs()[0] == 1; }

    bool fits_int64() const noexcept;
    long long to_int64() const;  // valid only when fits_int64()

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);  // truncates toward zero
    friend BigInt operator%(const BigInt& a, const BigInt& b);  // sign follows dividend
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    /// *this += a * b without intermediate temporaries in the small case.
    void fused_add_mul(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) noexcept;
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept;

    /// gcd(|a|,|b|), nonnegative; gcd(0,0) = 0.
    static BigInt gcd(BigInt a, BigInt b);
    BigInt pow_u(unsigned e) const;
    BigInt abs() const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

    /// Magnitude comparison of raw limb spans (little-endian, trimmed or not).
    static int cmp_mag(const uint32_t* a, uint32_t an, const uint32_t* b, uint32_t bn) noexcept;

private:
    static constexpr uint32_t kInlineCap = 4;

    int32_t sign_ = 0;   // -1, 0, +1
    uint32_t size_ = 0;  // limbs in use; 0 iff sign_ == 0
    std::array<uint32_t, kInlineCap> small_{};
    std::vector<uint32_t> big_;  // engaged when size_ > kInlineCap

    const uint32_t* limbs() const noexcept {
        return size_ <= kInlineCap ? small_.data() : big_.data();
    }
    void assign_int64(long long v);
    void set_mag(int sgn, const uint32_t* p, uint32_t n);  // strips high zeros
};

}  // namespace qinst
