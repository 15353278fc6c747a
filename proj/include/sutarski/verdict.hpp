#ifndef SUTARSKI_VERDICT_HPP
#define SUTARSKI_VERDICT_HPP

#include <string_view>

namespace sutarski {

/// Machine-readable reason attached to an Invalid verdict.
enum class Reason {
  kNone,
  kSpecMismatch,        // a point or slice does not conform to the lattice
  kDimOutOfRange,       // dimension index outside 1..k
  kNotFixed,            // f(x) != x
  kPairNotOrdered,      // monotonicity witness with x not <= y
  kPairMonotone,        // monotonicity witness with f(x) <= f(y)
  kPairComparable,      // uniqueness witness with x <= y
  kXNotInUp,            // x not in Up(f_s)
  kYNotInDown,          // y not in Down(f_s)
  kPointOutsideSlice,   // a witness point is not in L^k_s
  kSliceNotAdmissible,  // slice is not an i-slice for the required index
  kPointsEqual,         // OV1 needs x != y
  kNotZero,             // some direction required to be zero is not
  kNotAdjacent,         // OV2 needs y_i = x_i + 1
  kXNotUp,              // OV2 needs D_i(x) = up
  kYNotDown,            // OV2 needs D_i(y) = down
  kNotBoundary,         // OV3 needs x_i in {1, n}
  kNoEscape,            // OV3 boundary point whose direction does not leave the grid
};

std::string_view to_string(Reason reason);

/// Valid, or Invalid with a reason.
class Verdict {
 public:
  static Verdict valid() { return Verdict(Reason::kNone); }
  static Verdict invalid(Reason reason) { return Verdict(reason); }

  bool is_valid() const { return reason_ == Reason::kNone; }
  explicit operator bool() const { return is_valid(); }
  Reason reason() const { return reason_; }

  bool operator==(const Verdict&) const = default;

 private:
  explicit Verdict(Reason reason) : reason_(reason) {}
  Reason reason_;
};

}  // namespace sutarski

#endif  // SUTARSKI_VERDICT_HPP
