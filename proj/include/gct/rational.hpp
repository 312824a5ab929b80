// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and rationals (GMP-backed), small parsing/formatting helpers.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gct {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline Int num(const Rat& q) { return Int(numerator(q)); }
inline Int den(const Rat& q) { return Int(denominator(q)); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// Floor/ceil of an exact rational as integers.
inline Int floor_rat(const Rat& q) {
    Int n = num(q), d = den(q);
    Int f = n / d;
    if (n % d != 0 && n < 0) f -= 1;
    return f;
}

inline Int ceil_rat(const Rat& q) {
    Int n = num(q), d = den(q);
    Int c = n / d;
    if (n % d != 0 && n > 0) c += 1;
    return c;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a * b) / gcd(a, b);
}

// 2-adic valuation; v2(0) is treated as "infinite" by callers, so they must
// check for zero first.
inline long v2(Int x) {
    if (x == 0) throw std::invalid_argument("v2(0) undefined");
    long v = 0;
    while (x % 2 == 0) { x /= 2; ++v; }
    return v;
}

// Parses "p", "-p" or "p/q" forms; always canonical.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(p) / Rat(q);
}

inline std::string rat_str(const Rat& q) { return q.str(); }

// Checked narrowing for hot integer loops.
inline long long to_ll(const Int& x) {
    if (x > Int(std::numeric_limits<long long>::max()) ||
        x < Int(std::numeric_limits<long long>::min()))
        throw std::overflow_error("integer exceeds 64-bit range");
    return x.convert_to<long long>();
}

using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

}  // namespace gct
