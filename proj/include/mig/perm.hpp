#ifndef MIG_PERM_HPP
#define MIG_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mig/util.hpp"

namespace mig {

constexpr int kMaxDegree = 64;

// permutation of {0, ..., degree-1}, stored as the image array.
// products compose left to right: (a * b) means "apply a, then b",
// i.e. (a * b)[x] = b[a[x]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<uint8_t> images);
  static Perm identity(int degree);

  // external form is 1-based disjoint cycles, e.g. {{1,2,3},{4,5}};
  // fixed points may be omitted
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  // parses "(1,2,3)(4,5)" or "()" (identity); whitespace tolerated
  static Perm parse(int degree, const std::string& text);

  int degree() const { return static_cast<int>(img_.size()); }
  uint8_t operator[](int x) const { return img_[x]; }
  uint8_t apply(int x) const { return img_[x]; }

  Perm operator*(const Perm& rhs) const;  // apply *this, then rhs
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * (*this) * g

  bool is_identity() const;
  uint64_t order() const;  // lcm of cycle lengths
  int smallest_moved_point() const;  // -1 if identity
  int fixed_points() const;

  std::vector<std::vector<int>> cycles() const;  // 1-based, nontrivial only
  std::string to_string() const;                 // cycle form, "()" for identity

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  size_t hash() const { return fnv1a64(img_.data(), img_.size()); }

 private:
  std::vector<uint8_t> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace mig

#endif  // MIG_PERM_HPP
