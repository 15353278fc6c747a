#include "sutarski/solvers.hpp"

#include <sstream>

namespace sutarski {

std::size_t kleene_budget(const LatticeSpec& spec) {
  return spec.k() * static_cast<std::size_t>(spec.n() - 1) + 1;
}

namespace {

KleeneResult iterate_from(const TarskiFunction& f, Point start, const char* name) {
  const std::size_t budget = kleene_budget(f.spec());
  KleeneResult out;
  out.trace.push_back(std::move(start));
  while (out.evaluations < budget) {
    Point next = f(out.trace.back());
    ++out.evaluations;
    if (next == out.trace.back()) {
      out.fixed_point = std::move(next);
      return out;
    }
    out.trace.push_back(std::move(next));
  }
  std::ostringstream os;
  os << name << ": no fixed point after " << budget
     << " evaluations; the function is not monotone (last iterate " << out.trace.back() << ")";
  throw NonConvergence(os.str());
}

}  // namespace

KleeneResult kleene_lfp(const TarskiFunction& f) {
  return iterate_from(f, f.spec().bottom(), "kleene_lfp");
}

KleeneResult kleene_gfp(const TarskiFunction& f) {
  return iterate_from(f, f.spec().top(), "kleene_gfp");
}

std::size_t AuditReport::full_lattice_count() const {
  for (const auto& entry : slice_counts) {
    if (entry.slice.free_count() == entry.slice.size()) return entry.fixed_points;
  }
  return 0;
}

AuditReport brute_sut_audit(const TarskiFunction& f) {
  AuditReport report;
  if (auto pair = find_monotonicity_violation(f)) {
    report.monotonicity_violation = MonotonicityViolation{pair->first, pair->second};
  }

  for (const auto& s : enumerate_slices(f.spec())) {
    const auto g = restrict(f, s);
    const auto points = slice_points(f.spec(), s);
    std::vector<PointClassification> kinds;
    kinds.reserve(points.size());
    std::size_t fixed = 0;
    for (const auto& x : points) {
      kinds.push_back(classify(g, x));
      fixed += kinds.back().is_fixed() ? 1 : 0;
    }
    report.slice_counts.push_back({s, fixed});

    if (report.uniqueness_violation) continue;
    for (std::size_t a = 0; a < points.size() && !report.uniqueness_violation; ++a) {
      if (!kinds[a].in_up) continue;
      for (std::size_t b = 0; b < points.size(); ++b) {
        if (kinds[b].in_down && !leq(points[a], points[b])) {
          report.uniqueness_violation = SliceUniquenessViolation{s, points[a], points[b]};
          break;
        }
      }
    }
  }
  return report;
}

std::vector<OpdcSolution> brute_opdc_solutions(const DirectionOracle& oracle,
                                               const OpdcOptions& options) {
  const DirectionOracle d = oracle.materialize();
  const auto& spec = d.spec();
  const auto slices = enumerate_slices(spec);
  std::vector<OpdcSolution> out;

  for (const auto& x : spec.points()) {
    if (check_o1(d, x)) out.push_back(AllZero{x});
  }

  for (const auto& s : slices) {
    if (!options.any_slice && !is_some_i_slice(s)) continue;
    const auto points = slice_points(spec, s);
    for (std::size_t a = 0; a < points.size(); ++a) {
      for (std::size_t b = a + 1; b < points.size(); ++b) {
        if (check_ov1(d, s, points[a], points[b], options)) {
          out.push_back(TwoZeroPoints{s, points[a], points[b]});
        }
      }
    }
  }

  for (std::size_t dim = 1; dim <= spec.k(); ++dim) {
    for (const auto& s : slices) {
      if (!options.any_slice && !is_i_slice(s, dim)) continue;
      const auto points = slice_points(spec, s);
      for (const auto& x : points) {
        for (const auto& y : points) {
          if (y[dim - 1] != x[dim - 1] + 1) continue;
          if (check_ov2(d, s, x, y, dim, options)) out.push_back(AdjacentUpDown{s, x, y, dim});
        }
      }
    }
  }

  for (std::size_t dim = 1; dim <= spec.k(); ++dim) {
    for (const auto& s : slices) {
      if (!options.any_slice && !is_i_slice(s, dim)) continue;
      for (const auto& x : slice_points(spec, s)) {
        if (check_ov3(d, s, x, dim, options)) out.push_back(BoundaryEscape{s, x, dim});
      }
    }
  }
  return out;
}

}  // namespace sutarski
