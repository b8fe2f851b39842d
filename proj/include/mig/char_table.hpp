#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mig/class_function.hpp"
#include "mig/class_table.hpp"

namespace mig {

// complete table of exact irreducible characters, rows sorted by
// (degree, lexicographic value order) for stable output
struct CharacterTable {
  std::shared_ptr<const ClassTable> classes;
  std::vector<ClassFunction> irreducibles;

  size_t size() const { return irreducibles.size(); }
  Int degree(size_t i) const { return irreducibles[i].degree(); }
  // index of the trivial character (all values 1)
  size_t trivial_index() const;
};

// the working prime for the modular computation: smallest p with
// p = 1 (mod exponent) and p > 2 ceil(sqrt(order)), so that all eigenvalue
// systems split over F_p and degrees are determined uniquely from d^2 mod p.
// p never divides the group order: an element of order p would force
// p <= exponent < p
uint64_t dixon_prime(uint64_t exponent, uint64_t order);

// compute the table by the modular eigenvector method: split F_p^r under the
// class-multiplication matrices into the common eigenvectors (the central
// characters mod p), read off degrees, then lift each value to an exact sum
// of roots of unity by discrete Fourier inversion over the power map.
// postcondition (checked, throws OrthogonalityFailure): exact first and
// second orthogonality relations hold
CharacterTable character_table(std::shared_ptr<const ClassTable> t, int jobs = 1);

// re-verify both orthogonality relations exactly
bool verify_orthogonality(const CharacterTable& ct);

}  // namespace mig
