#ifndef PGI_NUMERIC_HPP
#define PGI_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "pgi/errors.hpp"

namespace pgi {

inline long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// n = p^e with p prime, e >= 1
inline std::optional<std::pair<long long, int>> prime_power(long long n) {
  if (n < 2) return std::nullopt;
  long long p = n;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, e);
}

inline int valuation(long long n, long long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline long long digit_sum(long long n, long long p) {
  long long s = 0;
  while (n) {
    s += n % p;
    n /= p;
  }
  return s;
}

// v_p(binom(a, b)) by Legendre's formula: (S_p(b) + S_p(a-b) - S_p(a)) / (p-1)
inline int binomial_valuation(long long a, long long b, long long p) {
  if (b < 0 || b > a) throw SpecError("binomial_valuation: index out of range");
  return static_cast<int>((digit_sum(b, p) + digit_sum(a - b, p) - digit_sum(a, p)) / (p - 1));
}

// Carries when adding a and b in base p.  Kummer's theorem says this equals
// v_p(binom(a+b, a)); kept as a separate code path so the two can be compared.
inline int carry_count(long long a, long long b, long long p) {
  int carries = 0, carry = 0;
  while (a || b || carry) {
    long long s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

// Row-by-row Pascal triangle mod m (additive, no division), rows 0..nmax.
class BinomialMod {
public:
  BinomialMod(int nmax, long long m) : nmax_(nmax), m_(m), c_((nmax + 1) * (nmax + 2) / 2) {
    for (int n = 0; n <= nmax; ++n) {
      at(n, 0) = 1 % m;
      for (int k = 1; k < n; ++k) at(n, k) = (at(n - 1, k - 1) + at(n - 1, k)) % m;
      if (n > 0) at(n, n) = 1 % m;
    }
  }
  long long operator()(int n, int k) const {
    if (k < 0 || k > n) return 0;
    return c_[idx(n, k)];
  }

private:
  std::size_t idx(int n, int k) const { return std::size_t(n) * (n + 1) / 2 + k; }
  long long& at(int n, int k) { return c_[idx(n, k)]; }
  int nmax_;
  long long m_;
  std::vector<long long> c_;
};

} // namespace pgi

#endif
