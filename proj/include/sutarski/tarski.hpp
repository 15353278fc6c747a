#ifndef SUTARSKI_TARSKI_HPP
#define SUTARSKI_TARSKI_HPP

#include <optional>
#include <utility>
#include <variant>

#include "sutarski/function.hpp"
#include "sutarski/verdict.hpp"

namespace sutarski {

/// Up/Down membership of a point under a (restricted) function.
struct PointClassification {
  bool in_up = false;    // x <= g(x)
  bool in_down = false;  // g(x) <= x

  bool is_fixed() const { return in_up && in_down; }
  bool operator==(const PointClassification&) const = default;
};

/// UT: a fixed point of f.
struct FixedPoint {
  Point x;
  bool operator==(const FixedPoint&) const = default;
};

/// UTV1: x <= y but f(x) is not <= f(y).
struct MonotonicityViolation {
  Point x;
  Point y;
  bool operator==(const MonotonicityViolation&) const = default;
};

/// UTV2: x, y in L^k_s with x not <= y, x in Up(f_s) and y in Down(f_s).
struct SliceUniquenessViolation {
  Slice slice;
  Point x;
  Point y;
  bool operator==(const SliceUniquenessViolation&) const = default;
};

using SutSolution = std::variant<FixedPoint, MonotonicityViolation, SliceUniquenessViolation>;

/// UT is the proper solution; UTV1 and UTV2 are violations.
inline bool is_proper(const SutSolution& sol) { return std::holds_alternative<FixedPoint>(sol); }

template <LatticeMap G>
PointClassification classify(const G& g, const Point& x) {
  Point gx = g(x);
  return {leq(x, gx), leq(gx, x)};
}

bool check_fixed_point(const TarskiFunction& f, const Point& x);

/// The witness iff x <= y and f(x) is not <= f(y). Throws DomainError for
/// points outside the lattice.
std::optional<MonotonicityViolation> check_monotonicity_pair(const TarskiFunction& f,
                                                             const Point& x, const Point& y);

/// The witness iff x is not <= y, x in Up(f_s) and y in Down(f_s). Throws
/// DomainError if x or y is outside L^k_s.
std::optional<SliceUniquenessViolation> check_slice_uniqueness_violation(const TarskiFunction& f,
                                                                         const Slice& s,
                                                                         const Point& x,
                                                                         const Point& y);

/// Never throws; malformed witnesses come back Invalid with a reason.
Verdict verify_sut_solution(const TarskiFunction& f, const SutSolution& sol);

/// First pair (x, y) over the domain of g, in canonical order of x then y,
/// with x <= y and g(x) not <= g(y). Exhaustive, O(|domain|^2) evaluations of
/// cached values.
template <LatticeMap G>
std::optional<std::pair<Point, Point>> find_monotonicity_violation(const G& g) {
  const auto points = slice_points(g.spec(), g.domain());
  std::vector<Point> values;
  values.reserve(points.size());
  for (const auto& x : points) values.push_back(g(x));
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = 0; b < points.size(); ++b) {
      if (leq(points[a], points[b]) && !leq(values[a], values[b])) {
        return std::pair{points[a], points[b]};
      }
    }
  }
  return std::nullopt;
}

template <LatticeMap G>
bool is_monotone(const G& g) {
  return !find_monotonicity_violation(g).has_value();
}

}  // namespace sutarski

#endif  // SUTARSKI_TARSKI_HPP
