#include "doctest.h"

#include "mig/cyclotomic.hpp"
#include "mig/errors.hpp"

using namespace mig;

namespace {
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) out[i + j] += a[i] * b[j];
  return out;
}
}  // namespace

TEST_CASE("small cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});            // x - 1
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});             // x + 1
  CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});          // x^2 + 1
  CHECK(cyclotomic_polynomial(5) == std::vector<Int>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});  // x^4 - x^2 + 1
}

TEST_CASE("product over divisors recovers x^e - 1") {
  for (uint64_t e = 1; e <= 120; e++) {
    std::vector<Int> prod{1};
    for (uint64_t d = 1; d <= e; d++)
      if (e % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    REQUIRE(prod.size() == e + 1);
    CHECK(prod[0] == -1);
    CHECK(prod[e] == 1);
    for (uint64_t j = 1; j < e; j++) CHECK(prod[j] == 0);
    CHECK(cyclotomic_polynomial(e).size() == euler_phi(e) + 1);
  }
}

TEST_CASE("roots of unity sum to zero") {
  for (uint64_t e : {2, 3, 4, 5, 6, 7, 12, 30}) {
    CycValue sum;
    for (uint64_t k = 0; k < e; k++) sum = sum + CycValue::root_of_unity(e, k);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("canonical reduction identities") {
  // zeta_4^2 = -1
  CHECK(CycValue::root_of_unity(4, 2) == CycValue::from_int(-1));
  // zeta_6 = 1 + zeta_3 (both are (1+sqrt(-3))/2... check numerically known identity
  // zeta_6^3 = -1
  auto z6 = CycValue::root_of_unity(6, 1);
  CHECK(z6 * z6 * z6 == CycValue::from_int(-1));
  // golden ratio conjugates: (zeta_5 + zeta_5^4)(zeta_5^2 + zeta_5^3) = -1
  auto a = CycValue::root_of_unity(5, 1) + CycValue::root_of_unity(5, 4);
  auto b = CycValue::root_of_unity(5, 2) + CycValue::root_of_unity(5, 3);
  CHECK(a * b == CycValue::from_int(-1));
  CHECK(a + b == CycValue::from_int(-1));
  // and they are roots of x^2 + x - 1
  CHECK(a * a + a - CycValue::from_int(1) == CycValue());
}

TEST_CASE("multiplication by powers is exponent addition") {
  for (uint64_t e : {7, 12, 30}) {
    for (uint64_t i = 0; i < e; i++)
      for (uint64_t j = 0; j < e; j++)
        CHECK(CycValue::root_of_unity(e, i) * CycValue::root_of_unity(e, j) ==
              CycValue::root_of_unity(e, (i + j) % e));
  }
}

TEST_CASE("conjugation") {
  for (uint64_t e : {5, 8, 12}) {
    for (uint64_t k = 0; k < e; k++) {
      auto z = CycValue::root_of_unity(e, k);
      CHECK(z.conj() == CycValue::root_of_unity(e, (e - k) % e));
      CHECK((z * z.conj()) == CycValue::from_int(1));
      CHECK(z.conj().conj() == z);
    }
  }
  // conjugation fixes rationals
  auto r = CycValue::from_rational(Rat(-7, 3));
  CHECK(r.conj() == r);
}

TEST_CASE("rationality detection") {
  CHECK(CycValue::from_int(5).is_rational());
  CHECK(CycValue::from_int(5).is_integer());
  CHECK(CycValue::from_rational(Rat(1, 2)).is_rational());
  CHECK_FALSE(CycValue::from_rational(Rat(1, 2)).is_integer());
  CHECK(CycValue::from_rational(Rat(1, 2)).rational_value() == Rat(1, 2));

  auto z5 = CycValue::root_of_unity(5, 1);
  CHECK_FALSE(z5.is_rational());
  CHECK_THROWS_AS(z5.rational_value(), NonRationalResult);

  // a hidden rational: zeta_5 + zeta_5^2 + zeta_5^3 + zeta_5^4 = -1
  CycValue sum;
  for (uint64_t k = 1; k < 5; k++) sum = sum + CycValue::root_of_unity(5, k);
  CHECK(sum.is_rational());
  CHECK(sum.rational_value() == -1);
}

TEST_CASE("mixed conductor arithmetic lifts to the lcm") {
  auto i = CycValue::root_of_unity(4, 1);
  auto w = CycValue::root_of_unity(3, 1);
  auto prod = i * w;  // zeta_12^7
  CHECK(prod == CycValue::root_of_unity(12, 7));
  CHECK(prod.conductor() == 12);
  // equality across conductors: zeta_6^3 = -1 at conductor 6 vs conductor 1
  CHECK(CycValue::root_of_unity(6, 3) == CycValue::from_int(-1));
  // sqrt(5) two ways: conductor 5 expression vs conductor 20 expression
  auto sqrt5 =
      CycValue::from_int(1) + (CycValue::root_of_unity(5, 1) + CycValue::root_of_unity(5, 4)) * Rat(2);
  CHECK(sqrt5 * sqrt5 == CycValue::from_int(5));
}

TEST_CASE("lifting preserves values") {
  auto a = CycValue::root_of_unity(5, 2) + CycValue::from_int(3);
  auto b = a.lifted(30);
  CHECK(b.conductor() == 30);
  CHECK(a == b);
  CHECK((b - a).is_zero());
}

TEST_CASE("printing") {
  CHECK(CycValue().to_string() == "0");
  CHECK(CycValue::from_int(42).to_string() == "42");
  CHECK(CycValue::from_rational(Rat(-5, 3)).to_string() == "-5/3");
  // canonical form keeps exponents below phi(5) = 4: 1 + z + z^4 = -z^2 - z^3
  auto v = CycValue::from_int(1) + CycValue::root_of_unity(5, 1) + CycValue::root_of_unity(5, 4);
  CHECK(v.to_string() == "-1*z5^2-1*z5^3");
}

TEST_CASE("high exponents reduce deterministically") {
  // exhaustively: representation of each power of zeta_e is stable under
  // round trips through arithmetic
  for (uint64_t e : {9, 10, 15}) {
    for (uint64_t k = 0; k < e; k++) {
      auto direct = CycValue::root_of_unity(e, k);
      auto stepwise = CycValue::from_int(1);
      for (uint64_t s = 0; s < k; s++) stepwise = stepwise * CycValue::root_of_unity(e, 1);
      CHECK(direct == stepwise);
      CHECK(direct.to_string() == stepwise.to_string());
    }
  }
}
