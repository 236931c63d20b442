#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "error.hpp"

namespace idcode {

using i128 = __int128;

namespace detail {

inline std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw OverflowError("rational arithmetic overflowed 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor(a / b) for b > 0
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

}  // namespace detail

/// Exact rational number with 64-bit numerator and positive denominator,
/// always kept in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    std::int64_t floor() const { return detail::narrow(detail::floor_div(num_, den_)); }
    std::int64_t ceil() const { return -Rational(-num_, den_).floor(); }

    Rational operator-() const { return from128(-static_cast<i128>(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                       static_cast<i128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("division by zero rational");
        return from128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        i128 lhs = static_cast<i128>(a.num_) * b.den_;
        i128 rhs = static_cast<i128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    int sign() const { return (num_ > 0) - (num_ < 0); }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Parses "N" or "N/D" (optional leading '-'). Throws Error on malformed input.
    static Rational parse(const std::string& text);

private:
    static Rational from128(i128 num, i128 den) {
        if (den == 0) throw Error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = detail::gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        r.num_ = detail::narrow(num);
        r.den_ = detail::narrow(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) { *this = from128(num, den); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

inline Rational Rational::parse(const std::string& text) {
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        if (s.empty()) throw Error("malformed rational '" + text + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw Error("malformed rational '" + text + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') throw Error("malformed rational '" + text + "'");
        }
        try {
            return std::stoll(s);
        } catch (const std::out_of_range&) {
            throw OverflowError("rational component out of range in '" + text + "'");
        }
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) throw Error("zero denominator in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), d);
}

// ---------------------------------------------------------------------------
// Exact integer square roots.

/// floor(sqrt(n)) for n >= 0, exact over the whole 128-bit range used here.
inline i128 isqrt(i128 n) {
    if (n < 0) throw Error("isqrt of a negative number");
    if (n < 2) return n;
    // Newton iteration from an upper estimate; monotonically decreasing.
    i128 x = static_cast<i128>(std::sqrt(static_cast<long double>(n))) + 2;
    while (true) {
        i128 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

inline std::int64_t isqrt64(std::int64_t n) { return static_cast<std::int64_t>(isqrt(n)); }

/// ceil(sqrt(n)) for n >= 0.
inline i128 ceil_isqrt(i128 n) {
    i128 s = isqrt(n);
    return (s * s == n) ? s : s + 1;
}

inline bool is_perfect_square(i128 n) {
    if (n < 0) return false;
    i128 s = isqrt(n);
    return s * s == n;
}

/// floor(sqrt(q)) for a nonnegative rational q. For integer x: x <= sqrt(q) iff x*x <= floor(q).
inline std::int64_t floor_sqrt(const Rational& q) {
    if (q.sign() < 0) throw Error("floor_sqrt of a negative rational");
    return static_cast<std::int64_t>(isqrt(q.floor()));
}

/// ceil(sqrt(q)) for a nonnegative rational q: least integer n with n*n >= q.
inline std::int64_t ceil_sqrt(const Rational& q) {
    std::int64_t s = floor_sqrt(q);
    return (Rational(s) * Rational(s) >= q) ? s : s + 1;
}

/// True if q is the square of a rational.
inline bool is_rational_square(const Rational& q) {
    return is_perfect_square(q.num()) && is_perfect_square(q.den());
}

/// Sign of sqrt(a) - sqrt(b) - theta, decided without floating point.
/// Requires a >= 0 and b >= 0; theta may have any sign.
inline int compare_sqrt_difference(const Rational& a, const Rational& b, const Rational& theta) {
    if (a.sign() < 0 || b.sign() < 0) throw Error("compare_sqrt_difference: negative radicand");
    if (theta.sign() < 0) {
        // sqrt(a) - sqrt(b) - t  ==  -(sqrt(b) - sqrt(a) - |t|)
        return -compare_sqrt_difference(b, a, -theta);
    }
    // Both sides of sqrt(a) ? theta + sqrt(b) are nonnegative: square once.
    Rational c = a - theta * theta - b;  // compare c with 2 theta sqrt(b)
    if (theta.sign() == 0 || b.sign() == 0) return c.sign();
    if (c.sign() <= 0) return -1;
    Rational lhs = c * c;
    Rational rhs = Rational(4) * theta * theta * b;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

}  // namespace idcode
