#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ucert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Raised when an exact computation that must land in Z does not.
struct IntegralityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a request exceeds a configured feasibility guard.
struct FeasibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("int64 overflow in multiplication");
    return r;
}

inline std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("value does not fit in int64: " + v.str());
    return static_cast<std::int64_t>(v);
}

/// Exact conversion of a rational known to be integral.
inline Integer require_integer(const Rational& r, const std::string& what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw IntegralityError(what + ": non-integral value " + r.str());
    return boost::multiprecision::numerator(r);
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace ucert
