#include "doctest.h"

#include <vector>

#include "mig/zsigmondy.hpp"

using namespace mig;

namespace {

// oracle: factor q^n - 1 by trial division and test divisibility of each
// literal q^m - 1 by plain remainder arithmetic (no modular exponentiation)
std::optional<uint64_t> oracle(uint64_t q, uint64_t n) {
  uint64_t qn = 1;
  for (uint64_t i = 0; i < n; i++) qn *= q;
  uint64_t v = qn - 1;
  std::vector<uint64_t> primes;  // increasing: large leftover prime comes last
  for (uint64_t ell = 2; ell * ell <= v; ell++) {
    if (v % ell != 0) continue;
    primes.push_back(ell);
    while (v % ell == 0) v /= ell;
  }
  if (v > 1) primes.push_back(v);
  for (uint64_t ell : primes) {
    bool divides_earlier = false;
    uint64_t qm = 1;
    for (uint64_t m = 1; m < n; m++) {
      qm *= q;
      if ((qm - 1) % ell == 0) divides_earlier = true;
    }
    if (!divides_earlier) return ell;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("primitive prime divisors match direct factorization") {
  for (uint64_t q = 2; q <= 9; q++)
    for (uint64_t n = 3; n <= 12; n++) {
      auto got = primitive_prime_divisor(q, n);
      auto want = oracle(q, n);
      CHECK(got == want);
      if (q == 2 && n == 6) {
        CHECK_FALSE(got.has_value());  // the lone exception in range
      } else {
        REQUIRE(got.has_value());
        CHECK(*got % n == 1);  // primitive prime divisors are 1 mod n
      }
    }
}

TEST_CASE("specific values") {
  CHECK(primitive_prime_divisor(2, 4) == 5);
  CHECK(primitive_prime_divisor(2, 11) == 23);   // 2^11-1 = 23*89
  CHECK(primitive_prime_divisor(3, 5) == 11);    // 3^5-1 = 242 = 2*11^2
  CHECK(primitive_prime_divisor(2, 6) == std::nullopt);
  CHECK(primitive_prime_divisor(3, 6) == 7);     // 728 = 8*7*13; 7 | 3^6-1 only
}
