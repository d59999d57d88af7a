#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ic {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the value in lowest terms with a
// positive denominator, which is exactly the invariant this kernel needs.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den with sign normalization; rejects den = 0.
inline Rational rat(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline Rational rat(long long num, long long den = 1) {
    return rat(BigInt(num), BigInt(den));
}

inline BigInt num_of(const Rational& q) { return numerator(q); }
inline BigInt den_of(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Bits needed for the magnitude; 0 for zero.
inline std::uint64_t bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return static_cast<std::uint64_t>(msb(abs(n))) + 1;
}

/// max(bit_length(numerator), bit_length(denominator)).
inline std::uint64_t bit_length(const Rational& q) {
    std::uint64_t a = bit_length(num_of(q));
    std::uint64_t b = bit_length(den_of(q));
    return a > b ? a : b;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Canonical "num/den" form, always with the explicit denominator.
inline std::string rat_to_string(const Rational& q) {
    return num_of(q).str() + "/" + den_of(q).str();
}

/// Parses "num/den" or a bare integer.
inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        return rat(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

} // namespace ic
