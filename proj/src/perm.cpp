#include "mig/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "mig/errors.hpp"

namespace mig {

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
  if (degree() > kMaxDegree)
    throw DegreeTooLarge("degree " + std::to_string(degree()) + " exceeds " +
                         std::to_string(kMaxDegree));
  std::vector<bool> seen(img_.size(), false);
  for (uint8_t v : img_) {
    if (v >= img_.size() || seen[v]) throw ParseError("image array is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<uint8_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree > kMaxDegree)
    throw DegreeTooLarge("degree " + std::to_string(degree) + " exceeds " +
                         std::to_string(kMaxDegree));
  std::vector<uint8_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); i++) {
      int a = cyc[i];
      if (a < 1 || a > degree)
        throw PointOutOfRange("point " + std::to_string(a) + " outside [1, " +
                              std::to_string(degree) + "]");
      if (used[a - 1]) throw DuplicatePoint("point " + std::to_string(a) + " repeated");
      used[a - 1] = true;
      int b = cyc[(i + 1) % cyc.size()];
      if (b < 1 || b > degree)
        throw PointOutOfRange("point " + std::to_string(b) + " outside [1, " +
                              std::to_string(degree) + "]");
      img[a - 1] = static_cast<uint8_t>(b - 1);
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse(int degree, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> cur;
  bool in_cycle = false;
  std::string num;
  auto flush_num = [&] {
    if (!num.empty()) {
      cur.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : text) {
    if (isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') {
      if (in_cycle) throw ParseError("nested '(' in permutation: " + text);
      in_cycle = true;
      cur.clear();
    } else if (c == ')') {
      if (!in_cycle) throw ParseError("unmatched ')' in permutation: " + text);
      flush_num();
      if (!cur.empty()) cycles.push_back(cur);
      in_cycle = false;
    } else if (c == ',') {
      flush_num();
    } else if (isdigit(static_cast<unsigned char>(c))) {
      num += c;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in permutation: " + text);
    }
  }
  if (in_cycle || !num.empty()) throw ParseError("truncated permutation: " + text);
  return from_cycles(degree, cycles);
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw DegreeMismatch("product of unequal degrees");
  std::vector<uint8_t> img(img_.size());
  for (size_t x = 0; x < img_.size(); x++) img[x] = rhs.img_[img_[x]];
  Perm p;
  p.img_ = std::move(img);  // composition of permutations needs no re-validation
  return p;
}

Perm Perm::inverse() const {
  std::vector<uint8_t> img(img_.size());
  for (size_t x = 0; x < img_.size(); x++) img[img_[x]] = static_cast<uint8_t>(x);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this * g); }

bool Perm::is_identity() const {
  for (size_t x = 0; x < img_.size(); x++)
    if (img_[x] != x) return false;
  return true;
}

uint64_t Perm::order() const {
  uint64_t ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (size_t x = 0; x < img_.size(); x++) {
    if (seen[x]) continue;
    uint64_t len = 0;
    size_t y = x;
    do {
      seen[y] = true;
      y = img_[y];
      len++;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

int Perm::smallest_moved_point() const {
  for (size_t x = 0; x < img_.size(); x++)
    if (img_[x] != x) return static_cast<int>(x);
  return -1;
}

int Perm::fixed_points() const {
  int n = 0;
  for (size_t x = 0; x < img_.size(); x++) n += (img_[x] == x);
  return n;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (size_t x = 0; x < img_.size(); x++) {
    if (seen[x] || img_[x] == x) continue;
    std::vector<int> cyc;
    size_t y = x;
    do {
      seen[y] = true;
      cyc.push_back(static_cast<int>(y) + 1);
      y = img_[y];
    } while (y != x);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::to_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::ostringstream ss;
  for (const auto& cyc : cycs) {
    ss << '(';
    for (size_t i = 0; i < cyc.size(); i++) {
      if (i) ss << ',';
      ss << cyc[i];
    }
    ss << ')';
  }
  return ss.str();
}

}  // namespace mig
