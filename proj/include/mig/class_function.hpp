#pragma once

#include <memory>
#include <vector>

#include "mig/class_table.hpp"
#include "mig/cyclotomic.hpp"

namespace mig {

// a class function on a fixed class table, one exact cyclotomic value per
// conjugacy class
struct ClassFunction {
  std::shared_ptr<const ClassTable> table;
  std::vector<CycValue> values;

  const CycValue& at(size_t c) const { return values.at(c); }
  // degree = value at the identity class, always an integer for characters
  Int degree() const { return values.at(0).rational_value().get_num(); }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  bool operator==(const ClassFunction& o) const;
};

ClassFunction trivial_character(std::shared_ptr<const ClassTable> t);

// exact inner product (1/|G|) sum_k |C_k| a(g_k) conj(b(g_k)).  throws
// NonRationalResult if the result is irrational (never happens when either
// argument is a rational linear combination of characters)
Rat inner_product(const ClassFunction& a, const ClassFunction& b);

// squared norm <f, f>; equal to 1 exactly for irreducible characters
Rat norm_squared(const ClassFunction& f);

}  // namespace mig
