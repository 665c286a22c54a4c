#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

// Exact integer and rational arithmetic. Everything here is pure and
// thread-safe. Overflow contract: Int is 64-bit with __int128 used for
// intermediate products, so all operations are exact as long as every
// numerator/denominator stays below 2^62; side lengths up to ~2*10^6
// are safe through every derived quantity in this library (cubes and
// cross-products included).

namespace datri {

using Int = std::int64_t;
using Wide = __int128;

inline Int gcd(Int x, Int y) { return std::gcd(x, y); }

/// Floor of the square root of a non-negative integer.
inline Int isqrt(Int n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    if (n == 0) return 0;
    auto r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// s with s*s == n, or nullopt if n is not a perfect square.
inline std::optional<Int> as_perfect_square(Int n) {
    if (n < 1) return std::nullopt;
    Int s = isqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

struct NotCoprime : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotASquareProduct : std::domain_error {
    using std::domain_error::domain_error;
};

/// Given coprime p, q whose product is a perfect square, both p and q
/// must themselves be squares; returns their (coprime) square roots.
inline std::pair<Int, Int> coprime_square_split(Int p, Int q) {
    if (p < 1 || q < 1) throw std::domain_error("coprime_square_split: inputs must be positive");
    if (gcd(p, q) != 1) throw NotCoprime("coprime_square_split: gcd(p, q) > 1");
    auto sp = as_perfect_square(p);
    auto sq = as_perfect_square(q);
    if (!sp || !sq) throw NotASquareProduct("coprime_square_split: p*q is not a perfect square");
    return {*sp, *sq};
}

/// Exact ratio of integers, stored in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by intent
    Rational(Int n, Int d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        Int g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n;
        den_ = d;
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return make(Wide(x.num_) * y.den_ + Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return make(Wide(x.num_) * y.den_ - Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return make(Wide(x.num_) * y.num_, Wide(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(Wide(x.num_) * y.den_, Wide(x.den_) * y.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator<(const Rational& x, const Rational& y) {
        return Wide(x.num_) * y.den_ < Wide(y.num_) * x.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational make(Wide n, Wide d) {
        if (d < 0) { n = -n; d = -d; }
        Wide g = wide_gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    static Wide wide_gcd(Wide a, Wide b) {
        while (b != 0) { Wide t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    static Int narrow(Wide v) {
        if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        return static_cast<Int>(v);
    }

    Int num_;
    Int den_;
};

}  // namespace datri
