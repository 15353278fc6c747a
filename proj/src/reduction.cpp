#include "sutarski/reduction.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace sutarski {

Direction direction_toward(Coord coord, Coord image) {
  if (coord < image) return Direction::kUp;
  if (coord > image) return Direction::kDown;
  return Direction::kZero;
}

ReducedInstance reduce(const TarskiFunction& f) {
  auto oracle = DirectionOracle::from_callback(
      f.spec(), [f](std::size_t dim, const Point& x) {
        return direction_toward(x[dim - 1], f(x)[dim - 1]);
      });
  return {f, std::move(oracle)};
}

namespace {

/// Wraps f so that each distinct point is evaluated once.
TarskiFunction memoize(const TarskiFunction& f) {
  struct Cache {
    std::mutex mutex;
    std::map<Point, Point> values;
  };
  auto cache = std::make_shared<Cache>();
  return TarskiFunction::from_callback(f.spec(), [f, cache](const Point& x) {
    {
      std::lock_guard lock(cache->mutex);
      if (auto it = cache->values.find(x); it != cache->values.end()) return it->second;
    }
    Point y = f(x);
    std::lock_guard lock(cache->mutex);
    cache->values.emplace(x, y);
    return y;
  });
}

[[noreturn]] void reject(const OpdcSolution& sol, Verdict verdict) {
  static constexpr const char* kNames[] = {"O1", "OV1", "OV2", "OV3"};
  std::ostringstream os;
  os << "map_back: " << kNames[sol.index()] << " witness is not a solution of the reduced instance ("
     << to_string(verdict.reason()) << ")";
  throw ContractViolation(os.str());
}

SutSolution extract(const TarskiFunction& f, const Slice& s, const Point& x, const Point& y,
                    std::size_t dim) {
  const auto g = restrict(f, s);
  const Point gx = g(x);
  const Point gy = g(y);
  if (!less(x, gx) || !less(gy, y)) {
    throw ContractViolation("ov2_extract: direction readings do not give x < f_s(x), f_s(y) < y");
  }
  if (!leq(gx, g(gx))) return MonotonicityViolation{x, gx};
  if (!leq(g(gy), gy)) return MonotonicityViolation{gy, y};
  // gy[dim-1] <= y_dim - 1 = x_dim < gx[dim-1]
  if (!(gy[dim - 1] < gx[dim - 1])) {
    throw ContractViolation("ov2_extract: coordinate separation failed");
  }
  return SliceUniquenessViolation{s, gx, gy};
}

}  // namespace

SutSolution ov2_extract(const TarskiFunction& f, const Slice& s, const Point& x, const Point& y,
                        std::size_t dim, const OpdcOptions& options) {
  const auto cached = memoize(f);
  const AdjacentUpDown witness{s, x, y, dim};
  if (auto v = check_ov2(reduce(cached).oracle, s, x, y, dim, options); !v) reject(witness, v);
  return extract(cached, s, x, y, dim);
}

SutSolution map_back(const TarskiFunction& f, const OpdcSolution& sol, const OpdcOptions& options) {
  const auto cached = memoize(f);
  const auto reduced = reduce(cached);
  if (auto v = verify_opdc_solution(reduced.oracle, sol, options); !v) reject(sol, v);

  struct Visitor {
    const TarskiFunction& f;

    SutSolution operator()(const AllZero& w) const { return FixedPoint{w.x}; }
    SutSolution operator()(const TwoZeroPoints& w) const {
      // Distinct points cannot be ordered both ways.
      if (leq(w.x, w.y)) return SliceUniquenessViolation{w.slice, w.y, w.x};
      return SliceUniquenessViolation{w.slice, w.x, w.y};
    }
    SutSolution operator()(const AdjacentUpDown& w) const {
      return extract(f, w.slice, w.x, w.y, w.dim);
    }
    SutSolution operator()(const BoundaryEscape&) const {
      throw ContractViolation("map_back: a reduced oracle has no valid OV3 witness");
    }
  };
  return std::visit(Visitor{cached}, sol);
}

}  // namespace sutarski
