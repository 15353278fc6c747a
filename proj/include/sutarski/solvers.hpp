#ifndef SUTARSKI_SOLVERS_HPP
#define SUTARSKI_SOLVERS_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sutarski/function.hpp"
#include "sutarski/opdc.hpp"
#include "sutarski/tarski.hpp"

namespace sutarski {

struct FixedPointSummary {
  std::vector<Point> all_fixed;  // canonical order
  std::optional<Point> least;    // lattice minimum of all_fixed, if attained
  std::optional<Point> greatest; // lattice maximum of all_fixed, if attained
};

/// Exhaustive scan of the domain of g.
template <LatticeMap G>
FixedPointSummary brute_fixed_points(const G& g) {
  FixedPointSummary out;
  for (const auto& x : slice_points(g.spec(), g.domain())) {
    if (g(x) == x) out.all_fixed.push_back(x);
  }
  auto extreme = [&](auto below) -> std::optional<Point> {
    for (const auto& candidate : out.all_fixed) {
      bool ok = true;
      for (const auto& other : out.all_fixed) ok = ok && below(candidate, other);
      if (ok) return candidate;
    }
    return std::nullopt;
  };
  out.least = extreme([](const Point& a, const Point& b) { return leq(a, b); });
  out.greatest = extreme([](const Point& a, const Point& b) { return leq(b, a); });
  return out;
}

/// Kleene iteration ran past its step budget, so f is not monotone.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KleeneResult {
  Point fixed_point;
  std::vector<Point> trace;  // iterates, starting point first, fixed point last
  std::size_t evaluations = 0;

  std::size_t steps() const { return trace.size() - 1; }
};

/// Evaluation budget for Kleene iteration. Along a strictly increasing chain
/// the coordinate sum rises by at least one per step and ranges over
/// [k, k*n], so a monotone f needs at most k(n-1) moves plus the final
/// evaluation that confirms the fixed point.
std::size_t kleene_budget(const LatticeSpec& spec);

/// Iterates x <- f(x) from the bottom point. For monotone f the result is the
/// least fixed point. Throws NonConvergence past kleene_budget() evaluations.
KleeneResult kleene_lfp(const TarskiFunction& f);
/// Dual of kleene_lfp, starting from the top point.
KleeneResult kleene_gfp(const TarskiFunction& f);

struct SliceFixedCount {
  Slice slice;
  std::size_t fixed_points = 0;
};

struct AuditReport {
  std::optional<MonotonicityViolation> monotonicity_violation;
  /// One entry per slice, in enumerate_slices() order.
  std::vector<SliceFixedCount> slice_counts;
  std::optional<SliceUniquenessViolation> uniqueness_violation;

  bool monotone() const { return !monotonicity_violation.has_value(); }
  bool violation_free() const { return monotone() && !uniqueness_violation.has_value(); }
  /// Fixed-point count of the all-free slice.
  std::size_t full_lattice_count() const;
};

/// Complete witness search for a Super-Unique-Tarski instance: all comparable
/// pairs for monotonicity, and for every slice the fixed-point count plus the
/// first incomparable Up/Down pair. The first witness is chosen by slice
/// order, then x, then y, all canonical.
AuditReport brute_sut_audit(const TarskiFunction& f);

/// Every valid witness of each OPDC type, grouped by type (O1, OV1, OV2,
/// OV3) and in canonical order within a type. OV1 pairs are unordered with
/// x before y.
std::vector<OpdcSolution> brute_opdc_solutions(const DirectionOracle& d,
                                               const OpdcOptions& options = {});

}  // namespace sutarski

#endif  // SUTARSKI_SOLVERS_HPP
