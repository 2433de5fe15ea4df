#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace workbench {

/// Arbitrary-width signed integer; series coefficients outgrow 64 bits fast.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return negative_; }

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return negative_ == o.negative_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return o <= *this; }

    /// Quotient by a small positive divisor; throws unless the division is exact.
    BigInt div_exact(uint64_t divisor) const;
    /// Whether the value is divisible by a small positive divisor.
    bool divisible_by(uint64_t divisor) const;

    /// Value as int64 if it fits, otherwise nullopt-style flag via `ok`.
    long long to_int64(bool& ok) const;

    std::string to_string() const;

private:
    static int compare_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    static std::vector<uint64_t> add_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    static std::vector<uint64_t> sub_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    void trim();

    bool negative_ = false;
    std::vector<uint64_t> mag_;  // little-endian limbs, no trailing zeros
};

}  // namespace workbench
