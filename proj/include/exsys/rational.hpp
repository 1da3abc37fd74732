// Exact arithmetic aliases and helpers shared by the whole toolkit.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace exsys {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

// Largest integer k with k <= q.
inline Int floor_rat(const Rational& q) {
    Int n = numerator(q), d = denominator(q);  // d > 0 canonical
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

inline Int ceil_rat(const Rational& q) { return -floor_rat(-q); }

// Dyadic rational closest to x with denominator 2^bits; exact for finite doubles.
inline Rational rational_from_double(double x, int bits = 53) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
    double scaled = std::ldexp(x, bits);
    // Round to nearest; values produced here are modest so the cast is safe.
    long long n = static_cast<long long>(std::llround(scaled));
    Rational r(n);
    r /= Rational(Int(1) << bits);
    return r;
}

// Parses "p/q" or a plain decimal like "-1.25" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
        return Rational(p, q);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(Int(s));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head.empty()) head = neg ? "-0" : "0";
    Int ip(head);
    Int num = abs_int(ip);
    Int den = 1;
    for (char c : tail) {
        if (c < '0' || c > '9') throw std::invalid_argument("parse_rational: bad digit in '" + s + "'");
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

inline std::string to_string_exact(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace exsys
