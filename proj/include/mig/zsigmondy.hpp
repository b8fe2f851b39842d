#ifndef MIG_ZSIGMONDY_HPP
#define MIG_ZSIGMONDY_HPP

#include <cstdint>
#include <optional>

namespace mig {

// smallest prime dividing q^n - 1 but none of q^m - 1 for 0 < m < n
// (a primitive prime divisor). Requires q >= 2, n >= 3, q^n < 2^63.
// Returns nullopt when none exists; for n >= 3 that happens only at
// (q, n) = (2, 6).
std::optional<uint64_t> primitive_prime_divisor(uint64_t q, uint64_t n);

}  // namespace mig

#endif  // MIG_ZSIGMONDY_HPP
