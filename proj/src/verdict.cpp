#include "sutarski/verdict.hpp"

namespace sutarski {

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::kNone: return "valid";
    case Reason::kSpecMismatch: return "spec-mismatch";
    case Reason::kDimOutOfRange: return "dim-out-of-range";
    case Reason::kNotFixed: return "not-fixed";
    case Reason::kPairNotOrdered: return "pair-not-ordered";
    case Reason::kPairMonotone: return "pair-monotone";
    case Reason::kPairComparable: return "pair-comparable";
    case Reason::kXNotInUp: return "x-not-in-up";
    case Reason::kYNotInDown: return "y-not-in-down";
    case Reason::kPointOutsideSlice: return "point-outside-slice";
    case Reason::kSliceNotAdmissible: return "slice-not-admissible";
    case Reason::kPointsEqual: return "points-equal";
    case Reason::kNotZero: return "not-zero";
    case Reason::kNotAdjacent: return "adjacency";
    case Reason::kXNotUp: return "x-not-up";
    case Reason::kYNotDown: return "y-not-down";
    case Reason::kNotBoundary: return "boundary";
    case Reason::kNoEscape: return "no-escape";
  }
  return "unknown";
}

}  // namespace sutarski
