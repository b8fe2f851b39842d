#pragma once

#include <cstdint>
#include <vector>

namespace mig {

// dense linear algebra over a prime field F_p.  entries are always kept
// reduced to [0, p).  p is small (a Dixon prime), so uint64 arithmetic with
// a 128-bit intermediate product is ample.

using FpVec = std::vector<uint64_t>;
using FpMat = std::vector<FpVec>;

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p);

FpMat fp_identity(size_t n);
FpMat fp_transpose(const FpMat& m);
FpMat fp_matmul(const FpMat& a, const FpMat& b, uint64_t p);

// in-place reduced row echelon form; returns the pivot columns.  pivot
// choice is deterministic: leftmost column, then the first row carrying a
// nonzero entry in it.
std::vector<size_t> fp_rref(FpMat& m, uint64_t p);

// basis of {x : m x = 0} with one row per basis vector, emitted in
// increasing free-column order (deterministic)
FpMat fp_nullspace(const FpMat& m, uint64_t p);

// characteristic polynomial det(x I - m), monic, coeffs[k] = coefficient of
// x^k.  uses a similarity reduction to Hessenberg form followed by the
// last-row expansion recurrence, which works over any prime field (tiny
// fields do not have enough points for evaluation/interpolation)
FpVec fp_charpoly(const FpMat& m, uint64_t p);

uint64_t fp_poly_eval(const FpVec& coeffs, uint64_t x, uint64_t p);

}  // namespace mig
