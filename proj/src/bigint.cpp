#include "treebij/bigint.hpp"

#include <numeric>

#include "treebij/errors.hpp"

namespace treebij {

BigInt factorial(int n) {
  if (n < 0) throw InputError("factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long long j = 1; j <= b; ++j) {
    r *= a - b + j;
    r /= j;  // exact: r is a running binomial
  }
  return r;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
  long long sum = std::accumulate(parts.begin(), parts.end(), 0LL);
  for (int p : parts)
    if (p < 0) throw InputError("multinomial with negative part");
  if (sum != n) throw InputError("multinomial parts do not sum to n");
  BigInt r = factorial(n);
  for (int p : parts) r /= factorial(p);
  return r;
}

}  // namespace treebij
