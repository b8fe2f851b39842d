#ifndef MIG_ERRORS_HPP
#define MIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mig {

// base for everything thrown by this library
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// a point appears twice within one cycle list
struct DuplicatePoint : Error {
  explicit DuplicatePoint(const std::string& msg) : Error(msg) {}
};

// a point is outside [1, degree] in external form
struct PointOutOfRange : Error {
  explicit PointOutOfRange(const std::string& msg) : Error(msg) {}
};

// permutations of different degrees combined
struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

// degree above the supported maximum (64 points)
struct DegreeTooLarge : Error {
  explicit DegreeTooLarge(const std::string& msg) : Error(msg) {}
};

// an enumeration or lattice walk exceeded its configured cap
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// element expected inside a group but is not a member
struct NotInGroup : Error {
  explicit NotInGroup(const std::string& msg) : Error(msg) {}
};

// claimed subgroup is not contained in the claimed parent
struct NotSubgroup : Error {
  explicit NotSubgroup(const std::string& msg) : Error(msg) {}
};

// subgroup passed where a normal subgroup is required
struct NotNormal : Error {
  explicit NotNormal(const std::string& msg) : Error(msg) {}
};

// inner product (or another rational-valued quantity) came out irrational
struct NonRationalResult : Error {
  explicit NonRationalResult(const std::string& msg) : Error(msg) {}
};

// malformed corpus file or permutation string
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// group order computed from generators differs from the recorded order
struct OrderMismatch : Error {
  explicit OrderMismatch(const std::string& msg) : Error(msg) {}
};

// subgroup record has a generator outside the parent group
struct SubgroupNotContained : Error {
  explicit SubgroupNotContained(const std::string& msg) : Error(msg) {}
};

// group name not present in the corpus
struct UnknownGroup : Error {
  explicit UnknownGroup(const std::string& msg) : Error(msg) {}
};

// operation needs subgroup data that is neither supplied nor enumerable
struct NoSubgroupData : Error {
  explicit NoSubgroupData(const std::string& msg) : Error(msg) {}
};

// a computed character table failed its exact orthogonality postcondition
struct OrthogonalityFailure : Error {
  explicit OrthogonalityFailure(const std::string& msg) : Error(msg) {}
};

// violated internal invariant (a bug, not bad input)
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace mig

#endif  // MIG_ERRORS_HPP
