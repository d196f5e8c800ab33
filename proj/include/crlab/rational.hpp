#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace crlab {

// Exact rational on int64. All values in this project are tiny (densities of
// graphs with a few hundred vertices, charges built from halves and quarters),
// so int64 with __int128 intermediates never overflows in practice; the
// normalize step asserts the reduced value fits.
struct Rational {
    long long num = 0;
    long long den = 1; // > 0, gcd(num, den) == 1

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    void assign(long long n, long long d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        assert(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX);
        Rational r;
        r.num = (long long)n;
        r.den = (long long)d;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128((__int128)a.num * b.den + (__int128)b.num * a.den,
                       (__int128)a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128((__int128)a.num * b.den - (__int128)b.num * a.den,
                       (__int128)a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = (__int128)a.num * b.den, r = (__int128)b.num * a.den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Parses "p/q" or a bare integer.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

} // namespace crlab
