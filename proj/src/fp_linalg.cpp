#include "mig/fp_linalg.hpp"

#include <utility>

#include "mig/errors.hpp"
#include "mig/util.hpp"

namespace mig {

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}

uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
}

FpMat fp_identity(size_t n) {
  FpMat m(n, FpVec(n, 0));
  for (size_t i = 0; i < n; i++) m[i][i] = 1;
  return m;
}

FpMat fp_transpose(const FpMat& m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  FpMat t(cols, FpVec(rows));
  for (size_t i = 0; i < rows; i++)
    for (size_t j = 0; j < cols; j++) t[j][i] = m[i][j];
  return t;
}

FpMat fp_matmul(const FpMat& a, const FpMat& b, uint64_t p) {
  size_t n = a.size();
  size_t inner = n ? a[0].size() : 0;
  if (inner != b.size()) throw InternalError("matmul shape mismatch");
  size_t cols = b.empty() ? 0 : b[0].size();
  FpMat c(n, FpVec(cols, 0));
  for (size_t i = 0; i < n; i++)
    for (size_t k = 0; k < inner; k++) {
      uint64_t aik = a[i][k];
      if (aik == 0) continue;
      for (size_t j = 0; j < cols; j++)
        c[i][j] = fp_add(c[i][j], fp_mul(aik, b[k][j], p), p);
    }
  return c;
}

std::vector<size_t> fp_rref(FpMat& m, uint64_t p) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; c++) {
    size_t pr = r;
    while (pr < rows && m[pr][c] == 0) pr++;
    if (pr == rows) continue;
    std::swap(m[pr], m[r]);
    uint64_t inv = inv_mod(m[r][c], p);
    for (size_t j = c; j < cols; j++) m[r][j] = fp_mul(m[r][j], inv, p);
    for (size_t i = 0; i < rows; i++) {
      if (i == r || m[i][c] == 0) continue;
      uint64_t f = m[i][c];
      for (size_t j = c; j < cols; j++)
        m[i][j] = fp_sub(m[i][j], fp_mul(f, m[r][j], p), p);
    }
    pivots.push_back(c);
    r++;
  }
  return pivots;
}

FpMat fp_nullspace(const FpMat& m_in, uint64_t p) {
  FpMat m = m_in;
  size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<size_t> pivots = fp_rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  FpMat basis;
  for (size_t fc = 0; fc < cols; fc++) {
    if (is_pivot[fc]) continue;
    FpVec v(cols, 0);
    v[fc] = 1;
    for (size_t r = 0; r < pivots.size(); r++) v[pivots[r]] = fp_sub(0, m[r][fc], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

FpVec fp_charpoly(const FpMat& m_in, uint64_t p) {
  FpMat h = m_in;
  size_t n = h.size();

  // similarity reduction to upper Hessenberg form with deterministic
  // pivoting (first nonzero entry below the subdiagonal)
  for (size_t c = 0; c + 2 < n; c++) {
    size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0) piv++;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (size_t i = 0; i < n; i++) std::swap(h[i][piv], h[i][c + 1]);
    }
    uint64_t inv = inv_mod(h[c + 1][c], p);
    for (size_t r = c + 2; r < n; r++) {
      if (h[r][c] == 0) continue;
      uint64_t f = fp_mul(h[r][c], inv, p);
      // row r -= f * row c+1, compensated by col c+1 += f * col r
      for (size_t j = 0; j < n; j++)
        h[r][j] = fp_sub(h[r][j], fp_mul(f, h[c + 1][j], p), p);
      for (size_t i = 0; i < n; i++)
        h[i][c + 1] = fp_add(h[i][c + 1], fp_mul(f, h[i][r], p), p);
    }
  }

  // p_k(x) = det(x I - H_k) for the leading k-by-k block, expanded along the
  // last row:
  //   p_k = (x - h_kk) p_{k-1} - sum_i h_{i,k} (prod_{j>i} h_{j,j-1}) p_{i-1}
  std::vector<FpVec> pk(n + 1);
  pk[0] = {1};
  for (size_t k = 1; k <= n; k++) {
    const FpVec& prev = pk[k - 1];
    FpVec cur(k + 1, 0);
    uint64_t diag = h[k - 1][k - 1] % p;
    for (size_t t = 0; t < prev.size(); t++) {
      cur[t + 1] = fp_add(cur[t + 1], prev[t], p);
      cur[t] = fp_sub(cur[t], fp_mul(diag, prev[t], p), p);
    }
    uint64_t prod = 1;
    for (size_t i = k - 1; i >= 1; i--) {
      prod = fp_mul(prod, h[i][i - 1], p);
      if (prod == 0) break;  // the subdiagonal chain is broken for good
      uint64_t coeff = fp_mul(h[i - 1][k - 1], prod, p);
      if (coeff == 0) continue;
      const FpVec& pi = pk[i - 1];
      for (size_t t = 0; t < pi.size(); t++)
        cur[t] = fp_sub(cur[t], fp_mul(coeff, pi[t], p), p);
    }
    pk[k] = std::move(cur);
  }
  return pk[n];
}

uint64_t fp_poly_eval(const FpVec& coeffs, uint64_t x, uint64_t p) {
  uint64_t acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = fp_add(fp_mul(acc, x, p), coeffs[i] % p, p);
  return acc;
}

}  // namespace mig
