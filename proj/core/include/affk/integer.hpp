#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace affk {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const Integer& n) { return n.str(); }

/// Generalized binomial coefficient C(n, j) for any integer n and j >= 0,
/// n(n-1)...(n-j+1)/j!. Zero when j < 0.
Integer binomial(long n, long j);

/// (-1)^e.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace affk
