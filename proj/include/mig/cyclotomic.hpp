#ifndef MIG_CYCLOTOMIC_HPP
#define MIG_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mig {

using Rat = mpq_class;
using Int = mpz_class;

// coefficients of the e-th cyclotomic polynomial, low degree first, monic;
// computed by exact division of x^e - 1 by the proper-divisor factors
std::vector<Int> cyclotomic_polynomial(uint64_t e);

uint64_t euler_phi(uint64_t e);

// reduction context for one conductor: canonical forms of x^k mod Phi_e for
// k in [phi(e), e). Shared and cached per conductor.
class CycloContext {
 public:
  static std::shared_ptr<const CycloContext> get(uint64_t e);

  uint64_t conductor() const { return e_; }
  uint64_t phi() const { return phi_; }
  // canonical form of x^k, k in [0, e), as sparse (exponent, coeff) terms
  const std::vector<std::pair<uint32_t, Int>>& power_row(uint64_t k) const;

 private:
  explicit CycloContext(uint64_t e);
  uint64_t e_, phi_;
  std::vector<std::vector<std::pair<uint32_t, Int>>> rows_;  // index k - phi
};

// an element of Q(zeta_e), stored in canonical reduced form: the remainder
// modulo Phi_e as a sparse sorted (exponent, rational) list with all
// exponents below phi(e) and no zero coefficients. Two values with the same
// conductor represent the same algebraic number iff their term lists are
// identical. Mixed-conductor arithmetic lifts both operands to the lcm.
class CycValue {
 public:
  CycValue() = default;  // zero at conductor 1

  static CycValue from_rational(const Rat& r);
  static CycValue from_int(long n) { return from_rational(Rat(n)); }
  // zeta_e^k
  static CycValue root_of_unity(uint64_t e, uint64_t k);
  // sum of c_i * zeta_e^{k_i}; exponents arbitrary (reduced mod e)
  static CycValue from_terms(uint64_t e, const std::vector<std::pair<uint64_t, Rat>>& terms);

  uint64_t conductor() const { return e_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_integer() const;
  Rat rational_value() const;  // throws NonRationalResult if support is not {0}

  CycValue lifted(uint64_t e2) const;  // requires e_ | e2

  CycValue operator+(const CycValue& o) const;
  CycValue operator-(const CycValue& o) const;
  CycValue operator-() const;
  CycValue operator*(const CycValue& o) const;
  CycValue operator*(const Rat& r) const;
  CycValue conj() const;  // complex conjugation zeta -> zeta^-1

  bool operator==(const CycValue& o) const;
  bool operator!=(const CycValue& o) const { return !(*this == o); }

  // deterministic total order on canonical forms (same conductor required);
  // used only to fix row order in tables
  static bool lex_less(const CycValue& a, const CycValue& b);

  // "0", "5", "-2/3", or a sum of terms like "1*z5^1+1*z5^4"
  std::string to_string() const;

  const std::vector<std::pair<uint32_t, Rat>>& terms() const { return terms_; }

 private:
  uint64_t e_ = 1;
  std::vector<std::pair<uint32_t, Rat>> terms_;
};

}  // namespace mig

#endif  // MIG_CYCLOTOMIC_HPP
