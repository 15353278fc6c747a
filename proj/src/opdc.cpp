#include "sutarski/opdc.hpp"

#include <stdexcept>
#include <string>

namespace sutarski {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kUp: return "up";
    case Direction::kDown: return "down";
    case Direction::kZero: return "zero";
  }
  return "?";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "up") return Direction::kUp;
  if (text == "down") return Direction::kDown;
  if (text == "zero") return Direction::kZero;
  return std::nullopt;
}

DirectionOracle DirectionOracle::from_table(LatticeSpec spec, Table table) {
  if (table.size() != spec.size()) {
    throw std::invalid_argument("direction table has " + std::to_string(table.size()) +
                                " rows, expected n^k = " + std::to_string(spec.size()));
  }
  for (std::size_t index = 0; index < table.size(); ++index) {
    if (table[index].size() != spec.k()) {
      throw std::invalid_argument("direction table row " + std::to_string(index) + " has " +
                                  std::to_string(table[index].size()) + " entries, expected k = " +
                                  std::to_string(spec.k()));
    }
  }
  return DirectionOracle(spec, std::make_shared<const Table>(std::move(table)), {});
}

DirectionOracle DirectionOracle::from_callback(LatticeSpec spec, Callback callback) {
  if (!callback) throw std::invalid_argument("empty direction callback");
  return DirectionOracle(spec, nullptr, std::move(callback));
}

Direction DirectionOracle::operator()(std::size_t dim, const Point& x) const {
  if (dim < 1 || dim > spec_.k()) {
    throw std::invalid_argument("direction index " + std::to_string(dim) + " outside 1.." +
                                std::to_string(spec_.k()));
  }
  if (table_) return (*table_)[spec_.index_of(x)][dim - 1];
  spec_.require(x);
  return callback_(dim, x);
}

bool DirectionOracle::all_zero(const Point& x) const {
  for (std::size_t dim = 1; dim <= spec_.k(); ++dim) {
    if ((*this)(dim, x) != Direction::kZero) return false;
  }
  return true;
}

const DirectionOracle::Table& DirectionOracle::table() const {
  if (!table_) throw std::logic_error("direction oracle is callback-backed, not a table");
  return *table_;
}

DirectionOracle DirectionOracle::materialize() const {
  if (table_) return *this;
  Table table(spec_.size());
  for (std::size_t index = 0; index < spec_.size(); ++index) {
    const Point x = spec_.point_at(index);
    table[index].reserve(spec_.k());
    for (std::size_t dim = 1; dim <= spec_.k(); ++dim) table[index].push_back((*this)(dim, x));
  }
  return from_table(spec_, std::move(table));
}

bool check_o1(const DirectionOracle& d, const Point& x) { return d.all_zero(x); }

namespace {

bool zero_except(const DirectionOracle& d, const Point& x, std::size_t skip) {
  for (std::size_t j = 1; j <= d.spec().k(); ++j) {
    if (j != skip && d(j, x) != Direction::kZero) return false;
  }
  return true;
}

}  // namespace

Verdict check_ov1(const DirectionOracle& d, const Slice& s, const Point& x, const Point& y,
                  const OpdcOptions& options) {
  const auto& spec = d.spec();
  if (!spec.conforms(s) || !spec.contains(x) || !spec.contains(y)) {
    return Verdict::invalid(Reason::kSpecMismatch);
  }
  if (!options.any_slice && !is_some_i_slice(s)) {
    return Verdict::invalid(Reason::kSliceNotAdmissible);
  }
  if (!s.contains(x) || !s.contains(y)) return Verdict::invalid(Reason::kPointOutsideSlice);
  if (x == y) return Verdict::invalid(Reason::kPointsEqual);
  for (std::size_t j = 1; j <= spec.k(); ++j) {
    if (!s.is_free(j - 1)) continue;
    if (d(j, x) != Direction::kZero || d(j, y) != Direction::kZero) {
      return Verdict::invalid(Reason::kNotZero);
    }
  }
  return Verdict::valid();
}

Verdict check_ov2(const DirectionOracle& d, const Slice& s, const Point& x, const Point& y,
                  std::size_t dim, const OpdcOptions& options) {
  const auto& spec = d.spec();
  if (!spec.conforms(s) || !spec.contains(x) || !spec.contains(y)) {
    return Verdict::invalid(Reason::kSpecMismatch);
  }
  if (dim < 1 || dim > spec.k()) return Verdict::invalid(Reason::kDimOutOfRange);
  if (!options.any_slice && !is_i_slice(s, dim)) {
    return Verdict::invalid(Reason::kSliceNotAdmissible);
  }
  if (!s.contains(x) || !s.contains(y)) return Verdict::invalid(Reason::kPointOutsideSlice);
  if (y[dim - 1] != x[dim - 1] + 1) return Verdict::invalid(Reason::kNotAdjacent);
  if (!zero_except(d, x, dim) || !zero_except(d, y, dim)) {
    return Verdict::invalid(Reason::kNotZero);
  }
  if (d(dim, x) != Direction::kUp) return Verdict::invalid(Reason::kXNotUp);
  if (d(dim, y) != Direction::kDown) return Verdict::invalid(Reason::kYNotDown);
  return Verdict::valid();
}

Verdict check_ov3(const DirectionOracle& d, const Slice& s, const Point& x, std::size_t dim,
                  const OpdcOptions& options) {
  const auto& spec = d.spec();
  if (!spec.conforms(s) || !spec.contains(x)) return Verdict::invalid(Reason::kSpecMismatch);
  if (dim < 1 || dim > spec.k()) return Verdict::invalid(Reason::kDimOutOfRange);
  if (!options.any_slice && !is_i_slice(s, dim)) {
    return Verdict::invalid(Reason::kSliceNotAdmissible);
  }
  if (!s.contains(x)) return Verdict::invalid(Reason::kPointOutsideSlice);
  const Coord xi = x[dim - 1];
  const bool at_bottom = xi == 1;
  const bool at_top = xi == spec.n();
  if (!at_bottom && !at_top) return Verdict::invalid(Reason::kNotBoundary);
  if (!zero_except(d, x, dim)) return Verdict::invalid(Reason::kNotZero);
  const Direction di = d(dim, x);
  if ((at_bottom && di == Direction::kDown) || (at_top && di == Direction::kUp)) {
    return Verdict::valid();
  }
  return Verdict::invalid(Reason::kNoEscape);
}

Verdict verify_opdc_solution(const DirectionOracle& d, const OpdcSolution& sol,
                             const OpdcOptions& options) {
  struct Visitor {
    const DirectionOracle& d;
    const OpdcOptions& options;

    Verdict operator()(const AllZero& s) const {
      if (!d.spec().contains(s.x)) return Verdict::invalid(Reason::kSpecMismatch);
      return check_o1(d, s.x) ? Verdict::valid() : Verdict::invalid(Reason::kNotZero);
    }
    Verdict operator()(const TwoZeroPoints& s) const {
      return check_ov1(d, s.slice, s.x, s.y, options);
    }
    Verdict operator()(const AdjacentUpDown& s) const {
      return check_ov2(d, s.slice, s.x, s.y, s.dim, options);
    }
    Verdict operator()(const BoundaryEscape& s) const {
      return check_ov3(d, s.slice, s.x, s.dim, options);
    }
  };
  return std::visit(Visitor{d, options}, sol);
}

}  // namespace sutarski
