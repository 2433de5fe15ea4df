#include "workbench/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace workbench {

BigInt::BigInt(long long v) {
    if (v < 0) {
        negative_ = true;
        // Avoid overflow on LLONG_MIN.
        unsigned long long u = ~static_cast<unsigned long long>(v) + 1ull;
        mag_.push_back(u);
    } else if (v > 0) {
        mag_.push_back(static_cast<uint64_t>(v));
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) negative_ = false;
}

int BigInt::compare_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint64_t> BigInt::add_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint64_t> out(big.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        unsigned __int128 s = carry + big[i] + (i < small.size() ? small[i] : 0);
        out[i] = static_cast<uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) out.push_back(static_cast<uint64_t>(carry));
    return out;
}

// Requires |a| >= |b|.
std::vector<uint64_t> BigInt::sub_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    std::vector<uint64_t> out(a.size(), 0);
    long long borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        unsigned __int128 lhs = a[i];
        unsigned __int128 rhs = (i < b.size() ? b[i] : 0);
        rhs += static_cast<unsigned long long>(borrow);
        if (lhs >= rhs) {
            out[i] = static_cast<uint64_t>(lhs - rhs);
            borrow = 0;
        } else {
            out[i] = static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) + lhs - rhs);
            borrow = 1;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt out;
    if (negative_ == o.negative_) {
        out.negative_ = negative_;
        out.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = compare_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.negative_ = negative_;
            out.mag_ = sub_mag(mag_, o.mag_);
        } else {
            out.negative_ = o.negative_;
            out.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt out;
    out.negative_ = negative_ != o.negative_;
    out.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (std::size_t j = 0; j < o.mag_.size(); ++j) {
            unsigned __int128 cur = out.mag_[i + j];
            cur += static_cast<unsigned __int128>(mag_[i]) * o.mag_[j];
            cur += carry;
            out.mag_[i + j] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
        }
        std::size_t k = i + o.mag_.size();
        while (carry) {
            unsigned __int128 cur = out.mag_[k];
            cur += carry;
            out.mag_[k] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
            ++k;
        }
    }
    out.trim();
    return out;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = compare_mag(mag_, o.mag_);
    return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::div_exact(uint64_t divisor) const {
    if (divisor == 0) throw std::domain_error("BigInt::div_exact: divide by zero");
    BigInt out;
    out.negative_ = negative_;
    out.mag_.assign(mag_.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | mag_[i];
        out.mag_[i] = static_cast<uint64_t>(cur / divisor);
        rem = cur % divisor;
    }
    if (rem != 0) throw std::domain_error("BigInt::div_exact: inexact division");
    out.trim();
    return out;
}

bool BigInt::divisible_by(uint64_t divisor) const {
    if (divisor == 0) return false;
    unsigned __int128 rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) rem = ((rem << 64) | mag_[i]) % divisor;
    return rem == 0;
}

long long BigInt::to_int64(bool& ok) const {
    ok = true;
    if (mag_.empty()) return 0;
    if (mag_.size() > 1) {
        ok = false;
        return 0;
    }
    uint64_t v = mag_[0];
    if (!negative_ && v <= 0x7fffffffffffffffull) return static_cast<long long>(v);
    if (negative_ && v <= 0x8000000000000000ull) return -static_cast<long long>(v - 1) - 1;
    ok = false;
    return 0;
}

std::string BigInt::to_string() const {
    if (mag_.empty()) return "0";
    std::vector<uint64_t> work = mag_;
    std::string digits;
    while (!work.empty()) {
        unsigned __int128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<uint64_t>(cur / 1000000000000000000ull);
            rem = cur % 1000000000000000000ull;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        uint64_t chunk = static_cast<uint64_t>(rem);
        for (int d = 0; d < 18; ++d) {
            digits.push_back(char('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace workbench
