#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace arbor {

/// Arbitrary-precision rational used for densities, curvatures and residuals.
using ExactRatio = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Malformed arguments or precondition violations on caller-supplied data.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured search or enumeration budget ran out before an answer was certified.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline ExactRatio ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("ratio: zero denominator");
    return ExactRatio(num, den);
}

inline BigInt numerator_of(const ExactRatio& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const ExactRatio& r) { return boost::multiprecision::denominator(r); }

/// Smallest integer >= r.
inline BigInt ceil(const ExactRatio& r) {
    BigInt n = numerator_of(r);
    BigInt d = denominator_of(r);
    BigInt q = n / d;  // truncates toward zero
    if (q * d != n && n > 0) q += 1;
    return q;
}

inline std::string to_string(const ExactRatio& r) {
    if (denominator_of(r) == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

}  // namespace arbor
