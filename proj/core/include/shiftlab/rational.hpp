#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace shiftlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(BigInt base, std::uint64_t exp) {
    BigInt r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, std::uint64_t exp) {
    return Rational(int_pow(boost::multiprecision::numerator(base), exp),
                    int_pow(boost::multiprecision::denominator(base), exp));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace shiftlab
