#include "mig/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mig/errors.hpp"

namespace mig {

uint64_t euler_phi(uint64_t e) {
  uint64_t phi = e;
  for (uint64_t p = 2; p * p <= e; p++) {
    if (e % p == 0) {
      phi -= phi / p;
      while (e % p == 0) e /= p;
    }
  }
  if (e > 1) phi -= phi / e;
  return phi;
}

namespace {

// exact division of polynomials over Z, low degree first; remainder must be 0
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  size_t dn = num.size() - 1, dd = den.size() - 1;
  if (dn < dd) throw InternalError("cyclotomic division underflow");
  std::vector<Int> q(dn - dd + 1);
  for (size_t i = dn - dd + 1; i-- > 0;) {
    Int c = num[i + dd] / den[dd];
    if (c * den[dd] != num[i + dd]) throw InternalError("cyclotomic division not exact");
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j <= dd; j++) num[i + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw InternalError("cyclotomic division has remainder");
  return q;
}

std::vector<Int> cyclotomic_rec(uint64_t e, std::map<uint64_t, std::vector<Int>>& memo) {
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  // x^e - 1
  std::vector<Int> num(e + 1);
  num[0] = -1;
  num[e] = 1;
  for (uint64_t d = 1; d < e; d++) {
    if (e % d == 0) {
      auto phi_d = cyclotomic_rec(d, memo);
      num = poly_divide_exact(std::move(num), phi_d);
    }
  }
  memo[e] = num;
  return num;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(uint64_t e) {
  if (e == 0) throw Error("cyclotomic polynomial needs e >= 1");
  std::map<uint64_t, std::vector<Int>> memo;
  return cyclotomic_rec(e, memo);
}

// ------------------------------------------------------------- CycloContext

CycloContext::CycloContext(uint64_t e) : e_(e), phi_(euler_phi(e)) {
  auto poly = cyclotomic_polynomial(e);
  if (poly.size() != phi_ + 1) throw InternalError("cyclotomic degree mismatch");
  // x^phi = -(poly minus leading term); build rows iteratively as dense
  // integer vectors, store sparse
  if (e_ == phi_) return;  // only e = 1, 2; no rows needed
  std::vector<Int> cur(phi_);  // dense coefficients of x^k reduced
  // start with k = phi
  for (uint64_t j = 0; j < phi_; j++) cur[j] = -poly[j];
  rows_.reserve(e_ - phi_);
  for (uint64_t k = phi_;; k++) {
    std::vector<std::pair<uint32_t, Int>> sparse;
    for (uint64_t j = 0; j < phi_; j++)
      if (cur[j] != 0) sparse.push_back({static_cast<uint32_t>(j), cur[j]});
    rows_.push_back(std::move(sparse));
    if (k + 1 >= e_) break;
    // multiply by x and reduce the overflowing top coefficient
    Int top = cur[phi_ - 1];
    for (uint64_t j = phi_ - 1; j > 0; j--) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (uint64_t j = 0; j < phi_; j++) cur[j] -= top * poly[j];
  }
}

const std::vector<std::pair<uint32_t, Int>>& CycloContext::power_row(uint64_t k) const {
  if (k < phi_ || k >= e_) throw InternalError("power_row outside [phi, e)");
  return rows_[k - phi_];
}

std::shared_ptr<const CycloContext> CycloContext::get(uint64_t e) {
  static std::mutex mu;
  static std::map<uint64_t, std::shared_ptr<const CycloContext>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  auto ctx = std::shared_ptr<const CycloContext>(new CycloContext(e));
  cache[e] = ctx;
  return ctx;
}

// ----------------------------------------------------------------- CycValue

CycValue CycValue::from_rational(const Rat& r) {
  CycValue v;
  v.e_ = 1;
  if (r != 0) v.terms_.push_back({0, r});
  return v;
}

CycValue CycValue::root_of_unity(uint64_t e, uint64_t k) {
  return from_terms(e, {{k, Rat(1)}});
}

CycValue CycValue::from_terms(uint64_t e, const std::vector<std::pair<uint64_t, Rat>>& terms) {
  if (e == 0) throw Error("conductor must be >= 1");
  auto ctx = CycloContext::get(e);
  uint64_t phi = ctx->phi();
  std::map<uint32_t, Rat> acc;
  for (const auto& [k0, c] : terms) {
    if (c == 0) continue;
    uint64_t k = k0 % e;
    if (k < phi) {
      acc[static_cast<uint32_t>(k)] += c;
    } else {
      for (const auto& [j, w] : ctx->power_row(k)) acc[j] += c * Rat(w);
    }
  }
  CycValue v;
  v.e_ = e;
  for (auto& [j, c] : acc) {
    c.canonicalize();
    if (c != 0) v.terms_.push_back({j, c});
  }
  return v;
}

bool CycValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool CycValue::is_integer() const {
  if (!is_rational()) return false;
  return terms_.empty() || terms_[0].second.get_den() == 1;
}

Rat CycValue::rational_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_rational())
    throw NonRationalResult("value is not rational: " + to_string());
  return terms_[0].second;
}

CycValue CycValue::lifted(uint64_t e2) const {
  if (e2 == e_) return *this;
  if (e2 % e_ != 0) throw InternalError("lift target conductor not a multiple");
  uint64_t f = e2 / e_;
  std::vector<std::pair<uint64_t, Rat>> raised;
  raised.reserve(terms_.size());
  for (const auto& [k, c] : terms_) raised.push_back({static_cast<uint64_t>(k) * f, c});
  return from_terms(e2, raised);
}

CycValue CycValue::operator+(const CycValue& o) const {
  uint64_t e = std::lcm(e_, o.e_);
  CycValue a = lifted(e), b = o.lifted(e);
  std::vector<std::pair<uint64_t, Rat>> merged;
  merged.reserve(a.terms_.size() + b.terms_.size());
  for (const auto& [k, c] : a.terms_) merged.push_back({k, c});
  for (const auto& [k, c] : b.terms_) merged.push_back({k, c});
  return from_terms(e, merged);
}

CycValue CycValue::operator-(const CycValue& o) const { return *this + (-o); }

CycValue CycValue::operator-() const {
  CycValue v = *this;
  for (auto& [k, c] : v.terms_) c = -c;
  return v;
}

CycValue CycValue::operator*(const CycValue& o) const {
  uint64_t e = std::lcm(e_, o.e_);
  CycValue a = lifted(e), b = o.lifted(e);
  std::vector<std::pair<uint64_t, Rat>> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      prod.push_back({static_cast<uint64_t>(ka) + kb, ca * cb});
  return from_terms(e, prod);
}

CycValue CycValue::operator*(const Rat& r) const {
  if (r == 0) return CycValue();
  CycValue v = *this;
  for (auto& [k, c] : v.terms_) {
    c *= r;
    c.canonicalize();
  }
  return v;
}

CycValue CycValue::conj() const {
  std::vector<std::pair<uint64_t, Rat>> flipped;
  flipped.reserve(terms_.size());
  for (const auto& [k, c] : terms_)
    flipped.push_back({k == 0 ? 0 : e_ - k, c});
  return from_terms(e_, flipped);
}

bool CycValue::operator==(const CycValue& o) const {
  if (e_ == o.e_) return terms_ == o.terms_;
  uint64_t e = std::lcm(e_, o.e_);
  return lifted(e).terms_ == o.lifted(e).terms_;
}

bool CycValue::lex_less(const CycValue& a, const CycValue& b) {
  if (a.e_ != b.e_) {
    uint64_t e = std::lcm(a.e_, b.e_);
    return lex_less(a.lifted(e), b.lifted(e));
  }
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; i++) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
    int c = cmp(a.terms_[i].second, b.terms_[i].second);
    if (c != 0) return c < 0;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string CycValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream ss;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string cs = c.get_str();
    if (!first && cs[0] != '-') ss << '+';
    if (k == 0) {
      ss << cs;
    } else {
      ss << cs << "*z" << e_ << '^' << k;
    }
    first = false;
  }
  return ss.str();
}

}  // namespace mig
