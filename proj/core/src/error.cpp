#include "cyclic/error.hpp"

namespace cyclic {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

const char* to_string(Clause clause) noexcept {
  switch (clause) {
    case Clause::kLength:
      return "wrong length";
    case Clause::kNegative:
      return "negative component";
    case Clause::kSum:
      return "components must sum to k-1";
    case Clause::kLastPositive:
      return "last component must be at least 1";
    case Clause::kBelowSignature:
      return "vector must dominate the signature componentwise";
    case Clause::kNotMonotone:
      return "components must be non-decreasing";
    case Clause::kLastNotQ:
      return "last component must equal q";
    case Clause::kOutOfRange:
      return "component out of range [0, q]";
    case Clause::kMissingMarked:
      return "every marked index must appear among the components";
  }
  return "unknown clause";
}

NotAdmissible::NotAdmissible(Clause clause, const std::string& detail)
    : DomainError(std::string("not admissible: ") + to_string(clause) +
                  (detail.empty() ? "" : " (" + detail + ")")),
      clause_(clause) {}

}  // namespace cyclic
