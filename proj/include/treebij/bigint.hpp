#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace treebij {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

// binomial(a, b) = 0 unless 0 <= b <= a; this makes the identity sums total
// over their whole parameter ranges.
BigInt binomial(long long a, long long b);

// n! / (parts[0]! * parts[1]! * ...); requires nonnegative parts summing to n.
BigInt multinomial(int n, const std::vector<int>& parts);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace treebij
