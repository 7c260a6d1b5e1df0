#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcn {

/// Exact rational number over 64-bit integers.
///
/// Always kept normalized: den > 0 and gcd(|num|, den) == 1.  Intermediate
/// products are evaluated in 128 bits; a result that does not fit back into
/// 64 bits throws std::overflow_error instead of silently wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(long long num, long long den);

    [[nodiscard]] long long num() const { return num_; }
    [[nodiscard]] long long den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_ == 0; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& r) { return {-r.num_, r.den_, normalized_tag{}}; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "3/4", "-1/2", or just "5" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    /// Accepts "a/b" or "a" with optional sign.  Throws std::invalid_argument.
    static Rational parse(std::string_view text);

private:
    struct normalized_tag {};
    Rational(long long num, long long den, normalized_tag) : num_(num), den_(den) {}

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace bcn
