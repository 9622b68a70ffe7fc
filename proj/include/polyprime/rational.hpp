#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polyprime {

/// Exact rational with 64-bit numerator/denominator, always reduced with a
/// positive denominator.  Arithmetic goes through 128-bit intermediates and
/// throws on overflow of the reduced result, so census identities either
/// verify exactly or fail loudly.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rat from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
        Rat r;
        r.num = static_cast<long long>(n);
        r.den = static_cast<long long>(d);
        return r;
    }

    Rat operator+(const Rat& o) const {
        return from128(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                       static_cast<__int128>(den) * o.den);
    }
    Rat operator-(const Rat& o) const {
        return from128(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                       static_cast<__int128>(den) * o.den);
    }
    Rat operator*(const Rat& o) const {
        return from128(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
    }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw std::domain_error("division by zero");
        return from128(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    static Rat pow(const Rat& base, int k) {
        if (k < 0) return Rat(1) / pow(base, -k);
        Rat out(1);
        for (int i = 0; i < k; ++i) out = out * base;
        return out;
    }
};

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > static_cast<__int128>(INT64_MAX)) throw std::overflow_error("binomial overflow");
    }
    return static_cast<long long>(r);
}

}  // namespace polyprime
