#pragma once

// Nonnegative extended-range floating point numbers.
//
// A value is mantissa * 2^exponent with a normalized 64-bit mantissa (top
// bit set) and a signed 64-bit exponent restricted to
// [kMinExponent, kMaxExponent]. Only addition and multiplication are
// provided; both round to nearest, ties to even, so each operation has a
// relative error of at most 2^-64 and both are commutative bit-for-bit.

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace chains {

class ExtNum {
public:
    static constexpr std::int64_t kMaxExponent = std::int64_t{1} << 62;
    static constexpr std::int64_t kMinExponent = -kMaxExponent;

    constexpr ExtNum() noexcept = default;
    // Implicit from small integers so that generic code can write `Num{0}`.
    ExtNum(std::uint64_t v) noexcept;  // NOLINT(google-explicit-constructor)

    static ExtNum from_parts(std::uint64_t mantissa, std::int64_t exponent);
    static ExtNum pow2(std::int64_t k);
    // Round-to-nearest-even conversion; exact when the integer has at most
    // 64 significant bits.
    static ExtNum from_mpz(const mpz_class& v);

    std::uint64_t mantissa() const noexcept { return mant_; }
    std::int64_t exponent() const noexcept { return exp_; }
    bool is_zero() const noexcept { return mant_ == 0; }

    // Exact value as a rational.
    mpq_class to_mpq() const;
    double to_double() const noexcept;

    friend inline ExtNum operator+(const ExtNum& a, const ExtNum& b);
    friend inline ExtNum operator*(const ExtNum& a, const ExtNum& b);
    ExtNum& operator+=(const ExtNum& b) { return *this = *this + b; }
    ExtNum& operator*=(const ExtNum& b) { return *this = *this * b; }

    friend bool operator==(const ExtNum&, const ExtNum&) noexcept = default;
    friend std::strong_ordering operator<=>(const ExtNum& a, const ExtNum& b) noexcept;

private:
    using u128 = unsigned __int128;

    // Rounds a sum or product whose top bit is bit 127 or bit 126 to 64
    // bits; `lsb_exp` is the exponent of bit 0 and `sticky` flags nonzero
    // bits already shifted out below it.
    static ExtNum round_top(u128 v, bool sticky, std::int64_t lsb_exp);
    [[noreturn]] static void range_error(std::int64_t exp);

    std::uint64_t mant_ = 0;
    std::int64_t exp_ = 0;
};

inline ExtNum ExtNum::round_top(u128 v, bool sticky, std::int64_t lsb_exp) {
    const int shift = (v >> 127) != 0 ? 64 : 63;
    auto mant = static_cast<std::uint64_t>(v >> shift);
    const auto low = static_cast<std::uint64_t>(v);
    const std::uint64_t rem = shift == 64 ? low : (low & ((std::uint64_t{1} << 63) - 1));
    const std::uint64_t half = std::uint64_t{1} << (shift - 1);
    std::int64_t exp = lsb_exp + shift;
    if (rem > half || (rem == half && (sticky || (mant & 1U) != 0))) {
        if (++mant == 0) {
            mant = std::uint64_t{1} << 63;
            ++exp;
        }
    }
    if (exp > kMaxExponent || exp < kMinExponent) [[unlikely]] {
        range_error(exp);
    }
    ExtNum r;
    r.mant_ = mant;
    r.exp_ = exp;
    return r;
}

inline ExtNum operator+(const ExtNum& a, const ExtNum& b) {
    if (a.mant_ == 0) {
        return b;
    }
    if (b.mant_ == 0) {
        return a;
    }
    // Order by magnitude so the result does not depend on argument order.
    const bool a_big = a.exp_ > b.exp_ || (a.exp_ == b.exp_ && a.mant_ >= b.mant_);
    const ExtNum& x = a_big ? a : b;
    const ExtNum& y = a_big ? b : a;
    const std::int64_t d = x.exp_ - y.exp_;
    // y below half an ulp of x: round to nearest returns x.
    if (d > 64) {
        return x;
    }
    const ExtNum::u128 xs = ExtNum::u128{x.mant_} << 63;
    const ExtNum::u128 yfull = ExtNum::u128{y.mant_} << 63;
    const ExtNum::u128 ys = yfull >> d;
    const bool sticky = d == 64 && (y.mant_ & 1U) != 0;
    return ExtNum::round_top(xs + ys, sticky, x.exp_ - 63);
}

inline ExtNum operator*(const ExtNum& a, const ExtNum& b) {
    if (a.mant_ == 0 || b.mant_ == 0) {
        return {};
    }
    return ExtNum::round_top(ExtNum::u128{a.mant_} * ExtNum::u128{b.mant_}, false, a.exp_ + b.exp_);
}

ExtNum ext_from_uint(std::uint64_t v);
ExtNum ext_add(const ExtNum& a, const ExtNum& b);
ExtNum ext_mul(const ExtNum& a, const ExtNum& b);

// n-th root exp((ln(mantissa) + exponent * ln 2) / n), evaluated in 128-bit
// precision and rounded once to double. Zero maps to 0; n == 0 throws.
double ext_nth_root(const ExtNum& a, std::uint64_t n);
double nth_root(const mpz_class& a, std::uint64_t n);

// Scientific notation with `digits` digits after the decimal point and a
// bare decimal exponent, e.g. "1.024000e3". Zero prints as "0".
std::string ext_to_decimal(const ExtNum& a, int digits);

}  // namespace chains
