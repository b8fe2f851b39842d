#include "mig/class_function.hpp"

#include "mig/errors.hpp"

namespace mig {

namespace {

void require_same_table(const ClassFunction& a, const ClassFunction& b) {
  if (a.table != b.table)
    throw InternalError("class functions live on different class tables");
}

}  // namespace

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  require_same_table(*this, o);
  ClassFunction r{table, {}};
  r.values.reserve(values.size());
  for (size_t k = 0; k < values.size(); k++) r.values.push_back(values[k] + o.values[k]);
  return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  require_same_table(*this, o);
  ClassFunction r{table, {}};
  r.values.reserve(values.size());
  for (size_t k = 0; k < values.size(); k++) r.values.push_back(values[k] - o.values[k]);
  return r;
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  require_same_table(*this, o);
  ClassFunction r{table, {}};
  r.values.reserve(values.size());
  for (size_t k = 0; k < values.size(); k++) r.values.push_back(values[k] * o.values[k]);
  return r;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return table == o.table && values == o.values;
}

ClassFunction trivial_character(std::shared_ptr<const ClassTable> t) {
  ClassFunction f{t, std::vector<CycValue>(t->num_classes(), CycValue::from_int(1))};
  return f;
}

Rat inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_table(a, b);
  const ClassTable& t = *a.table;
  CycValue acc;
  for (size_t k = 0; k < t.num_classes(); k++) {
    CycValue term = a.values[k] * b.values[k].conj();
    acc = acc + term * Rat(t.sizes[k]);
  }
  Rat total = acc.rational_value();
  total /= Rat(t.order());
  total.canonicalize();
  return total;
}

Rat norm_squared(const ClassFunction& f) { return inner_product(f, f); }

}  // namespace mig
