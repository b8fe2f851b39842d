#include "mig/zsigmondy.hpp"

#include "mig/errors.hpp"
#include "mig/util.hpp"

namespace mig {

std::optional<uint64_t> primitive_prime_divisor(uint64_t q, uint64_t n) {
  if (q < 2 || n < 3) throw Error("primitive_prime_divisor needs q >= 2, n >= 3");
  uint64_t qn = 1;
  for (uint64_t i = 0; i < n; i++) {
    if (qn > (uint64_t(1) << 62) / q) throw Error("q^n out of range");
    qn *= q;
  }
  for (auto& [ell, mult] : factorize(qn - 1)) {
    bool primitive = true;
    for (uint64_t m = 1; m < n && primitive; m++)
      if (pow_mod(q, m, ell) == 1) primitive = false;
    if (primitive) return ell;  // factors come smallest first
  }
  return std::nullopt;
}

}  // namespace mig
