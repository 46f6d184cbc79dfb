#ifndef QPLAB_BIGINT_HPP
#define QPLAB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qplab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base class for all hard failures raised by the library (non-exact division,
// infinite enumeration universes, incompatible series, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt int_pow(const BigInt& v, long e) {
    if (e < 0)
        throw Error("int_pow: negative exponent on integer");
    BigInt r = 1, b = v;
    for (long n = e; n > 0; n >>= 1) {
        if (n & 1)
            r *= b;
        b *= b;
    }
    return r;
}

inline Rational rat_pow(const Rational& v, long e) {
    if (e == 0)
        return Rational(1);
    if (v == 0) {
        if (e < 0)
            throw Error("rat_pow: zero raised to negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / v : v;
    Rational r = 1;
    for (long n = e < 0 ? -e : e; n > 0; n >>= 1) {
        if (n & 1)
            r *= b;
        b *= b;
    }
    return r;
}

// n*(n-1)/2, valid for any non-negative n.
inline long choose2(long n) { return n * (n - 1) / 2; }

} // namespace qplab

#endif
