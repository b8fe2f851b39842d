#ifndef MIG_UTIL_HPP
#define MIG_UTIL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace mig {

// FNV-1a over raw bytes; used for hashing permutations and checksumming files
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; i++) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

bool is_prime(uint64_t n);

// prime factorization by trial division, (prime, multiplicity) pairs in increasing prime order
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

// largest power of p dividing n (the "p-part")
uint64_t p_part(uint64_t n, uint64_t p);

// n with all factors of p removed (the "p'-part")
inline uint64_t p_prime_part(uint64_t n, uint64_t p) { return n / p_part(n, p); }

uint64_t isqrt(uint64_t n);

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);

uint64_t inv_mod(uint64_t a, uint64_t p);  // p prime

// smallest generator of the multiplicative group mod p
uint64_t primitive_root(uint64_t p);

// runs fn(i) for i in [0, n); with jobs > 1 the index space is handed to a small
// thread pool. fn must only write to per-index slots.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn);

std::string read_file(const std::string& path);  // throws mig::Error if unreadable

}  // namespace mig

#endif  // MIG_UTIL_HPP
