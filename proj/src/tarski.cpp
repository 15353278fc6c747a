#include "sutarski/tarski.hpp"

namespace sutarski {

bool check_fixed_point(const TarskiFunction& f, const Point& x) { return f(x) == x; }

std::optional<MonotonicityViolation> check_monotonicity_pair(const TarskiFunction& f,
                                                             const Point& x, const Point& y) {
  f.spec().require(x);
  f.spec().require(y);
  if (!leq(x, y)) return std::nullopt;
  if (leq(f(x), f(y))) return std::nullopt;
  return MonotonicityViolation{x, y};
}

std::optional<SliceUniquenessViolation> check_slice_uniqueness_violation(const TarskiFunction& f,
                                                                         const Slice& s,
                                                                         const Point& x,
                                                                         const Point& y) {
  const auto fs = restrict(f, s);
  for (const Point* p : {&x, &y}) {
    if (!f.spec().contains(*p) || !s.contains(*p)) {
      throw DomainError("point " + to_string(*p) + " is outside slice " + to_string(s));
    }
  }
  if (leq(x, y)) return std::nullopt;
  if (!classify(fs, x).in_up || !classify(fs, y).in_down) return std::nullopt;
  return SliceUniquenessViolation{s, x, y};
}

namespace {

Verdict verify(const TarskiFunction& f, const FixedPoint& sol) {
  if (!f.spec().contains(sol.x)) return Verdict::invalid(Reason::kSpecMismatch);
  return check_fixed_point(f, sol.x) ? Verdict::valid() : Verdict::invalid(Reason::kNotFixed);
}

Verdict verify(const TarskiFunction& f, const MonotonicityViolation& sol) {
  if (!f.spec().contains(sol.x) || !f.spec().contains(sol.y)) {
    return Verdict::invalid(Reason::kSpecMismatch);
  }
  if (!leq(sol.x, sol.y)) return Verdict::invalid(Reason::kPairNotOrdered);
  if (leq(f(sol.x), f(sol.y))) return Verdict::invalid(Reason::kPairMonotone);
  return Verdict::valid();
}

Verdict verify(const TarskiFunction& f, const SliceUniquenessViolation& sol) {
  const auto& spec = f.spec();
  if (!spec.conforms(sol.slice) || !spec.contains(sol.x) || !spec.contains(sol.y)) {
    return Verdict::invalid(Reason::kSpecMismatch);
  }
  if (!sol.slice.contains(sol.x) || !sol.slice.contains(sol.y)) {
    return Verdict::invalid(Reason::kPointOutsideSlice);
  }
  if (leq(sol.x, sol.y)) return Verdict::invalid(Reason::kPairComparable);
  const auto fs = restrict(f, sol.slice);
  if (!classify(fs, sol.x).in_up) return Verdict::invalid(Reason::kXNotInUp);
  if (!classify(fs, sol.y).in_down) return Verdict::invalid(Reason::kYNotInDown);
  return Verdict::valid();
}

}  // namespace

Verdict verify_sut_solution(const TarskiFunction& f, const SutSolution& sol) {
  return std::visit([&](const auto& s) { return verify(f, s); }, sol);
}

}  // namespace sutarski
