#include "chains/extnum.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <mpfr.h>

namespace chains {

namespace {

using u128 = unsigned __int128;

int clz128(u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) {
        return std::countl_zero(hi);
    }
    return 64 + std::countl_zero(static_cast<std::uint64_t>(v));
}

ExtNum checked(std::uint64_t mant, std::int64_t exp) {
    if (exp > ExtNum::kMaxExponent) {
        throw std::overflow_error("ExtNum exponent overflow");
    }
    if (exp < ExtNum::kMinExponent) {
        throw std::underflow_error("ExtNum exponent underflow");
    }
    return ExtNum::from_parts(mant, exp);
}

// Rounds `v` (nonzero, with `sticky` marking nonzero bits below its LSB) to a
// 64-bit mantissa. `lsb_exp` is the binary exponent of bit 0 of `v`.
ExtNum round_u128(u128 v, bool sticky, std::int64_t lsb_exp) {
    const int top = 127 - clz128(v);
    if (top < 64) {
        // Fits without rounding; sticky bits can only exist below a value
        // whose top bit is high, so they are absent here.
        auto mant = static_cast<std::uint64_t>(v);
        const int shift = std::countl_zero(mant);
        return checked(mant << shift, lsb_exp - shift);
    }
    const int shift = top - 63;
    auto mant = static_cast<std::uint64_t>(v >> shift);
    const u128 rem = v & ((u128{1} << shift) - 1);
    const u128 half = u128{1} << (shift - 1);
    bool up = rem > half || (rem == half && (sticky || (mant & 1U) != 0));
    std::int64_t exp = lsb_exp + shift;
    if (up) {
        ++mant;
        if (mant == 0) {
            mant = std::uint64_t{1} << 63;
            ++exp;
        }
    }
    return checked(mant, exp);
}

struct MpfrScope {
    mpfr_t x;
    explicit MpfrScope(mpfr_prec_t prec) { mpfr_init2(x, prec); }
    ~MpfrScope() { mpfr_clear(x); }
    MpfrScope(const MpfrScope&) = delete;
    MpfrScope& operator=(const MpfrScope&) = delete;
};

void widen_mpfr_range() {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
}

}  // namespace

ExtNum::ExtNum(std::uint64_t v) noexcept {
    if (v != 0) {
        const int shift = std::countl_zero(v);
        mant_ = v << shift;
        exp_ = -shift;
    }
}

ExtNum ExtNum::from_parts(std::uint64_t mantissa, std::int64_t exponent) {
    ExtNum r;
    if (mantissa == 0) {
        return r;
    }
    const int shift = std::countl_zero(mantissa);
    const std::int64_t exp = exponent - shift;
    if (exp > kMaxExponent || exp < kMinExponent) {
        throw std::overflow_error("ExtNum exponent out of range");
    }
    r.mant_ = mantissa << shift;
    r.exp_ = exp;
    return r;
}

ExtNum ExtNum::pow2(std::int64_t k) {
    return from_parts(std::uint64_t{1} << 63, k - 63);
}

ExtNum ExtNum::from_mpz(const mpz_class& v) {
    if (sgn(v) < 0) {
        throw std::domain_error("ExtNum cannot represent negative values");
    }
    if (sgn(v) == 0) {
        return {};
    }
    const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    if (bits <= 64) {
        return ExtNum(static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t())));
    }
    // Keep 65 bits: 64 for the mantissa plus one rounding bit; the rest is sticky.
    const auto drop = static_cast<mp_bitcnt_t>(bits - 65);
    mpz_class top;
    mpz_tdiv_q_2exp(top.get_mpz_t(), v.get_mpz_t(), drop);
    const bool sticky = mpz_scan1(v.get_mpz_t(), 0) < drop;
    mpz_class lo_part;
    mpz_fdiv_r_2exp(lo_part.get_mpz_t(), top.get_mpz_t(), 64);
    mpz_class hi_part;
    mpz_tdiv_q_2exp(hi_part.get_mpz_t(), top.get_mpz_t(), 64);
    const u128 v128 = (u128{mpz_get_ui(hi_part.get_mpz_t())} << 64) | u128{mpz_get_ui(lo_part.get_mpz_t())};
    return round_u128(v128, sticky, static_cast<std::int64_t>(drop));
}

mpq_class ExtNum::to_mpq() const {
    mpq_class r{mpz_class{static_cast<unsigned long>(mant_)}};
    if (exp_ >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exp_));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp_));
    }
    return r;
}

double ExtNum::to_double() const noexcept {
    if (mant_ == 0) {
        return 0.0;
    }
    if (exp_ > 2000) {
        return HUGE_VAL;
    }
    if (exp_ < -2000) {
        return 0.0;
    }
    return std::ldexp(static_cast<double>(mant_), static_cast<int>(exp_));
}

void ExtNum::range_error(std::int64_t exp) {
    if (exp > 0) {
        throw std::overflow_error("ExtNum exponent overflow");
    }
    throw std::underflow_error("ExtNum exponent underflow");
}

std::strong_ordering operator<=>(const ExtNum& a, const ExtNum& b) noexcept {
    if (a.mant_ == 0 || b.mant_ == 0) {
        return (a.mant_ != 0) <=> (b.mant_ != 0);
    }
    if (auto c = a.exp_ <=> b.exp_; c != 0) {
        return c;
    }
    return a.mant_ <=> b.mant_;
}

ExtNum ext_from_uint(std::uint64_t v) { return ExtNum(v); }
ExtNum ext_add(const ExtNum& a, const ExtNum& b) { return a + b; }
ExtNum ext_mul(const ExtNum& a, const ExtNum& b) { return a * b; }

double ext_nth_root(const ExtNum& a, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("ext_nth_root: n must be positive");
    }
    if (a.is_zero()) {
        return 0.0;
    }
    widen_mpfr_range();
    MpfrScope log_m(192);
    MpfrScope log2_term(192);
    mpfr_set_ui(log_m.x, static_cast<unsigned long>(a.mantissa()), MPFR_RNDN);
    mpfr_log(log_m.x, log_m.x, MPFR_RNDN);
    mpfr_const_log2(log2_term.x, MPFR_RNDN);
    mpfr_mul_si(log2_term.x, log2_term.x, static_cast<long>(a.exponent()), MPFR_RNDN);
    mpfr_add(log_m.x, log_m.x, log2_term.x, MPFR_RNDN);
    mpfr_div_ui(log_m.x, log_m.x, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_exp(log_m.x, log_m.x, MPFR_RNDN);
    return mpfr_get_d(log_m.x, MPFR_RNDN);
}

double nth_root(const mpz_class& a, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("nth_root: n must be positive");
    }
    if (sgn(a) == 0) {
        return 0.0;
    }
    widen_mpfr_range();
    MpfrScope x(192);
    mpfr_set_z(x.x, a.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x.x, x.x, MPFR_RNDN);
    mpfr_div_ui(x.x, x.x, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_exp(x.x, x.x, MPFR_RNDN);
    return mpfr_get_d(x.x, MPFR_RNDN);
}

std::string ext_to_decimal(const ExtNum& a, int digits) {
    if (a.is_zero()) {
        return "0";
    }
    if (digits < 0) {
        throw std::invalid_argument("ext_to_decimal: digits must be nonnegative");
    }
    widen_mpfr_range();
    MpfrScope x(64);
    mpfr_set_ui_2exp(x.x, static_cast<unsigned long>(a.mantissa()),
                     static_cast<mpfr_exp_t>(a.exponent()), MPFR_RNDN);
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Re", digits, x.x);
    std::string text(raw);
    mpfr_free_str(raw);

    // MPFR writes e.g. "1.024000e+03"; normalize the exponent to "e3".
    const auto e = text.find('e');
    std::string exp_part = text.substr(e + 1);
    const bool negative = !exp_part.empty() && exp_part[0] == '-';
    if (!exp_part.empty() && (exp_part[0] == '+' || exp_part[0] == '-')) {
        exp_part.erase(0, 1);
    }
    const auto nz = exp_part.find_first_not_of('0');
    exp_part = nz == std::string::npos ? "0" : exp_part.substr(nz);
    return text.substr(0, e + 1) + (negative ? "-" : "") + exp_part;
}

}  // namespace chains
