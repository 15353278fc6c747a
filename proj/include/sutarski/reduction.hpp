#ifndef SUTARSKI_REDUCTION_HPP
#define SUTARSKI_REDUCTION_HPP

#include <stdexcept>

#include "sutarski/function.hpp"
#include "sutarski/opdc.hpp"
#include "sutarski/tarski.hpp"

namespace sutarski {

/// A caller handed over input that breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// up if coord < image, zero if equal, down if greater.
Direction direction_toward(Coord coord, Coord image);

struct ReducedInstance {
  TarskiFunction source;
  DirectionOracle oracle;
};

/// Builds the OPDC instance D_i(x) = direction_toward(x_i, f(x)_i). The
/// oracle is lazy: every D_i(x) query costs exactly one evaluation of f.
ReducedInstance reduce(const TarskiFunction& f);

/// Maps a solution of reduce(f) back to a solution of the Super-Unique-Tarski
/// instance f. Proper solutions map to proper solutions and violations to
/// violations.
///
///   AllZero(x)            -> FixedPoint(x)
///   TwoZeroPoints(s,x,y)  -> SliceUniquenessViolation on the ordering of
///                            {x, y} that is not lattice-ordered, (x, y) first
///   AdjacentUpDown        -> ov2_extract
///   BoundaryEscape        -> never valid for a reduced oracle; rejected
///
/// Throws ContractViolation unless sol verifies against reduce(f). Evaluates
/// f at no more than four distinct points.
SutSolution map_back(const TarskiFunction& f, const OpdcSolution& sol,
                     const OpdcOptions& options = {});

/// Turns an OV2 witness (s, x, y, dim) of reduce(f) into a UTV1 or UTV2
/// witness of f. With g = f_s we have x < g(x) and g(y) < y, so:
///   - g(x) not <= g(g(x))  gives MonotonicityViolation(x, g(x));
///   - else g(g(y)) not <= g(y) gives MonotonicityViolation(g(y), y);
///   - else g(x) is in Up(g), g(y) in Down(g), and
///     g(y)_dim <= y_dim - 1 = x_dim < g(x)_dim, so
///     SliceUniquenessViolation(s, g(x), g(y)).
/// A violation of monotonicity for g is one for f, since g agrees with f on
/// free coordinates and both points share the fixed ones.
///
/// Throws ContractViolation unless check_ov2 validates the tuple.
SutSolution ov2_extract(const TarskiFunction& f, const Slice& s, const Point& x, const Point& y,
                        std::size_t dim, const OpdcOptions& options = {});

}  // namespace sutarski

#endif  // SUTARSKI_REDUCTION_HPP
