#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ecg/errors.hpp"

namespace ecg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_floor(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline BigInt rational_ceil(const Rational& r) {
    return -rational_floor(-r);
}

inline long long to_ll(const BigInt& v) {
    return v.convert_to<long long>();
}

inline long long floor_ll(const Rational& r) { return to_ll(rational_floor(r)); }
inline long long ceil_ll(const Rational& r) { return to_ll(rational_ceil(r)); }

// Smallest integer s with s*s >= v.
inline BigInt isqrt_ceil(const BigInt& v) {
    if (v <= 0) return 0;
    BigInt s = boost::multiprecision::sqrt(v); // floor sqrt
    if (s * s < v) ++s;
    return s;
}

// A rational upper bound on sqrt(r), tight within 1/denominator(r):
// sqrt(p/q) = sqrt(p*q)/q <= ceil(sqrt(p*q))/q.
inline Rational sqrt_upper(const Rational& r) {
    if (r < 0) fail("Domain", "sqrt of negative rational");
    BigInt p = numerator(r), q = denominator(r);
    return Rational(isqrt_ceil(p * q), q);
}

// Upper bound on r^(1/k) for k a power of two.
inline Rational root_upper(const Rational& r, int k) {
    Rational v = r;
    while (k > 1) {
        v = sqrt_upper(v);
        k /= 2;
    }
    return v;
}

// Accepts "p/q", "p", or a plain decimal like "0.55".
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() { fail("BadRational", "cannot parse '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
            if (q == 0) bad();
            return Rational(p, q);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(BigInt(s));
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.empty()) return Rational(BigInt(head.empty() ? "0" : head));
        bool neg = !head.empty() && head[0] == '-';
        BigInt ip(head.empty() || head == "-" ? "0" : head);
        BigInt fp(tail);
        BigInt den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        Rational v = Rational(ip) + (neg ? -1 : 1) * Rational(fp, den);
        return v;
    } catch (const std::exception&) {
        bad();
    }
    return Rational(0); // unreachable
}

inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace ecg
