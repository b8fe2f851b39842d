#include "mig/char_table.hpp"

#include <algorithm>
#include <utility>

#include "mig/errors.hpp"
#include "mig/fp_linalg.hpp"
#include "mig/util.hpp"

namespace mig {

namespace {

// restriction of the row action v -> v M^T to an invariant subspace with
// RREF row basis b; r[s][t] expresses row s of (b M^T) in that basis, read
// off at the pivot columns.  invariance is re-checked exactly
FpMat restrict_action(const FpMat& b, const std::vector<size_t>& pivots, const FpMat& mt,
                      uint64_t p) {
  size_t d = b.size();
  size_t cols = b[0].size();
  FpMat transformed = fp_matmul(b, mt, p);
  FpMat r(d, FpVec(d));
  for (size_t s = 0; s < d; s++)
    for (size_t t = 0; t < d; t++) r[s][t] = transformed[s][pivots[t]];
  for (size_t s = 0; s < d; s++)
    for (size_t j = 0; j < cols; j++) {
      uint64_t acc = 0;
      for (size_t t = 0; t < d; t++) acc = fp_add(acc, fp_mul(r[s][t], b[t][j], p), p);
      if (acc != transformed[s][j]) throw InternalError("subspace is not invariant");
    }
  return r;
}

std::vector<size_t> pivot_columns(const FpMat& rref_basis) {
  std::vector<size_t> pivots(rref_basis.size());
  for (size_t s = 0; s < rref_basis.size(); s++) {
    size_t c = 0;
    while (rref_basis[s][c] == 0) c++;
    pivots[s] = c;
  }
  return pivots;
}

bool row_orthogonality_holds(const CharacterTable& ct) {
  size_t r = ct.irreducibles.size();
  for (size_t i = 0; i < r; i++)
    for (size_t j = i; j < r; j++) {
      Rat ip = inner_product(ct.irreducibles[i], ct.irreducibles[j]);
      if (ip != Rat(i == j ? 1 : 0)) return false;
    }
  return true;
}

bool column_orthogonality_holds(const CharacterTable& ct) {
  const ClassTable& t = *ct.classes;
  size_t r = t.num_classes();
  if (ct.irreducibles.size() != r) return false;
  for (size_t k = 0; k < r; k++)
    for (size_t l = k; l < r; l++) {
      CycValue acc;
      for (const auto& chi : ct.irreducibles)
        acc = acc + chi.values[k] * chi.values[l].conj();
      CycValue want = CycValue::from_rational(k == l ? Rat(t.centralizer_orders[k]) : Rat(0));
      if (!(acc == want)) return false;
    }
  return true;
}

}  // namespace

size_t CharacterTable::trivial_index() const {
  CycValue one = CycValue::from_int(1);
  for (size_t i = 0; i < irreducibles.size(); i++) {
    bool all_one = true;
    for (const auto& v : irreducibles[i].values)
      if (!(v == one)) {
        all_one = false;
        break;
      }
    if (all_one) return i;
  }
  throw InternalError("table has no trivial character");
}

uint64_t dixon_prime(uint64_t exponent, uint64_t order) {
  uint64_t s = isqrt(order);
  if (s * s < order) s++;
  uint64_t bound = 2 * s;
  for (uint64_t p = exponent + 1;; p += exponent)
    if (p > bound && is_prime(p)) return p;
}

CharacterTable character_table(std::shared_ptr<const ClassTable> t_ptr, int jobs) {
  const ClassTable& t = *t_ptr;
  size_t r = t.num_classes();
  uint64_t e = t.exponent;
  uint64_t n = t.order();
  uint64_t p = dixon_prime(e, n);

  auto a = class_mult_tensor(t, jobs);  // a[i][j][k]

  // split F_p^r under the class matrices M_i ((M_i)[j][k] = a[i][j][k]) into
  // the r common eigenvector lines.  small classes first: their matrices are
  // sparser and tend to separate quickly
  std::vector<size_t> split_order;
  for (size_t i = 1; i < r; i++) split_order.push_back(i);
  std::stable_sort(split_order.begin(), split_order.end(),
                   [&](size_t x, size_t y) { return t.sizes[x] < t.sizes[y]; });

  std::vector<FpMat> spaces = {fp_identity(r)};
  for (size_t i : split_order) {
    bool done = true;
    for (const auto& s : spaces)
      if (s.size() > 1) {
        done = false;
        break;
      }
    if (done) break;

    FpMat mt(r, FpVec(r));  // M_i transposed, reduced mod p
    for (size_t j = 0; j < r; j++)
      for (size_t k = 0; k < r; k++) mt[k][j] = a[i][j][k] % p;

    std::vector<FpMat> next;
    for (auto& b : spaces) {
      size_t d = b.size();
      if (d == 1) {
        next.push_back(std::move(b));
        continue;
      }
      std::vector<size_t> pivots = pivot_columns(b);
      FpMat rmat = restrict_action(b, pivots, mt, p);
      FpVec cp = fp_charpoly(rmat, p);
      FpMat rt = fp_transpose(rmat);
      size_t found = 0;
      for (uint64_t lam = 0; lam < p && found < d; lam++) {
        if (fp_poly_eval(cp, lam, p) != 0) continue;
        FpMat shifted = rt;  // left eigenvectors: x R = lam x
        for (size_t s = 0; s < d; s++) shifted[s][s] = fp_sub(shifted[s][s], lam, p);
        FpMat ns = fp_nullspace(shifted, p);
        if (ns.empty()) continue;
        FpMat piece;
        for (const auto& y : ns) {
          FpVec row(r, 0);
          for (size_t s = 0; s < d; s++) {
            if (y[s] == 0) continue;
            for (size_t j = 0; j < r; j++)
              row[j] = fp_add(row[j], fp_mul(y[s], b[s][j], p), p);
          }
          piece.push_back(std::move(row));
        }
        fp_rref(piece, p);
        found += piece.size();
        next.push_back(std::move(piece));
      }
      if (found != d) throw InternalError("eigenspace split lost dimensions");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw InternalError("wrong number of eigenvector lines");
  for (const auto& s : spaces)
    if (s.size() != 1) throw InternalError("class matrices failed to separate");

  // normalize each eigenvector to value 1 at the identity class; these are
  // the central characters omega_k = |C_k| chi(g_k) / chi(1) mod p
  std::vector<uint64_t> inv_size(r);
  for (size_t k = 0; k < r; k++) inv_size[k] = inv_mod(t.sizes[k] % p, p);
  std::vector<FpVec> omegas;
  for (const auto& s : spaces) {
    FpVec w = s[0];
    if (w[0] == 0) throw InternalError("central character vanishes at identity");
    uint64_t inv = inv_mod(w[0], p);
    for (auto& x : w) x = fp_mul(x, inv, p);
    omegas.push_back(std::move(w));
  }

  // degrees: sum_k omega_k omega_{inv k} / |C_k| = |G| / d^2 mod p, and the
  // true degree is the unique square root below p/2 (guaranteed by
  // p > 2 sqrt(|G|) >= 2 d)
  uint64_t z = primitive_root(p);
  uint64_t omega_e = pow_mod(z, (p - 1) / e, p);

  std::vector<ClassFunction> rows;
  for (const auto& w : omegas) {
    uint64_t s = 0;
    for (size_t k = 0; k < r; k++)
      s = fp_add(s, fp_mul(fp_mul(w[k], w[t.inverse_class(k)], p), inv_size[k], p), p);
    if (s == 0) throw InternalError("degree equation degenerated");
    uint64_t target = fp_mul(n % p, inv_mod(s, p), p);
    uint64_t deg = 0;
    for (uint64_t d = 1; 2 * d < p; d++)
      if (fp_mul(d, d, p) == target) {
        deg = d;
        break;
      }
    if (deg == 0) throw InternalError("no admissible degree");

    // chi(g_k) mod p for every class, via chi = d omega / |C|
    std::vector<uint64_t> theta(r);
    for (size_t k = 0; k < r; k++) theta[k] = fp_mul(deg, fp_mul(w[k], inv_size[k], p), p);

    // lift each value exactly: chi(g) = sum m_j zeta_o^j with m_j the
    // eigenvalue multiplicities of the underlying representation at g,
    // recovered by Fourier inversion over the cyclic group <g>
    ClassFunction chi{t_ptr, std::vector<CycValue>(r)};
    for (size_t c = 0; c < r; c++) {
      uint64_t o = t.rep_orders[c];
      uint64_t wo = pow_mod(omega_e, e / o, p);
      std::vector<uint64_t> wo_pow(o);
      wo_pow[0] = 1;
      for (uint64_t j = 1; j < o; j++) wo_pow[j] = fp_mul(wo_pow[j - 1], wo, p);
      uint64_t inv_o = inv_mod(o % p, p);
      CycValue val;
      uint64_t total = 0;
      for (uint64_t j = 0; j < o; j++) {
        uint64_t acc = 0;
        for (uint64_t s2 = 0; s2 < o; s2++) {
          uint64_t cls = t.power_maps[s2][c];
          acc = fp_add(acc, fp_mul(theta[cls], wo_pow[(o - s2 * j % o) % o], p), p);
        }
        uint64_t mult = fp_mul(acc, inv_o, p);
        if (mult > deg) throw InternalError("eigenvalue multiplicity out of range");
        if (mult) {
          val = val + CycValue::root_of_unity(e, j * (e / o) % e) * Rat(mult);
          total += mult;
        }
      }
      if (total != deg) throw InternalError("multiplicities do not sum to the degree");
      chi.values[c] = std::move(val);
    }
    rows.push_back(std::move(chi));
  }

  std::sort(rows.begin(), rows.end(), [](const ClassFunction& x, const ClassFunction& y) {
    Int dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    for (size_t k = 0; k < x.values.size(); k++)
      if (!(x.values[k] == y.values[k])) return CycValue::lex_less(x.values[k], y.values[k]);
    return false;
  });

  CharacterTable ct{t_ptr, std::move(rows)};
  if (!verify_orthogonality(ct))
    throw OrthogonalityFailure("computed table fails exact orthogonality");
  return ct;
}

bool verify_orthogonality(const CharacterTable& ct) {
  return row_orthogonality_holds(ct) && column_orthogonality_holds(ct);
}

}  // namespace mig
