#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace iotforge {

/// Exact rational arithmetic for utilization sums. Always normalized:
/// positive denominator, gcd(num, den) == 1. Intermediate products use
/// 128-bit arithmetic; results must fit back into 64 bits.
class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    static Rational from_int(std::int64_t v) { return Rational(v, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& other) const {
        __int128 n = static_cast<__int128>(num_) * other.den_ +
                     static_cast<__int128>(other.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * other.den_;
        return from_wide(n, d);
    }

    bool operator==(const Rational& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    bool operator<(const Rational& other) const {
        return static_cast<__int128>(num_) * other.den_ <
               static_cast<__int128>(other.num_) * den_;
    }
    bool operator>(const Rational& other) const { return other < *this; }
    bool operator<=(const Rational& other) const { return !(other < *this); }
    bool operator>=(const Rational& other) const { return !(*this < other); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Canonical "num/den" form, e.g. "12/5"; integers render as "n/1".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num_ = num;
        den_ = den;
    }

    static Rational from_wide(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("rational arithmetic overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
};

}  // namespace iotforge
