#include "bcn/rational.hpp"

#include <charconv>
#include <limits>

namespace bcn {

namespace {

using int128 = __int128;

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
        throw std::overflow_error("rational arithmetic overflowed 64 bits");
    }
    return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    int128 n = num;
    int128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

Rational& Rational::operator+=(const Rational& rhs) {
    int128 n = int128(num_) * rhs.den_ + int128(rhs.num_) * den_;
    int128 d = int128(den_) * rhs.den_;
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += Rational(-rhs.num_, rhs.den_, normalized_tag{});
}

Rational& Rational::operator*=(const Rational& rhs) {
    int128 n = int128(num_) * rhs.num_;
    int128 d = int128(den_) * rhs.den_;
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::invalid_argument("rational division by zero");
    long long n = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    long long d = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= Rational(n, d, normalized_tag{});
}

bool operator<(const Rational& a, const Rational& b) {
    return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_int(text), 1};
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

}  // namespace bcn
