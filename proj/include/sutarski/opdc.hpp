#ifndef SUTARSKI_OPDC_HPP
#define SUTARSKI_OPDC_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "sutarski/lattice.hpp"
#include "sutarski/verdict.hpp"

namespace sutarski {

enum class Direction { kUp, kDown, kZero };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

/// Per-dimension direction functions D_1..D_k over L^k. Dimension indices
/// are 1-based throughout.
class DirectionOracle {
 public:
  using Callback = std::function<Direction(std::size_t dim, const Point& x)>;
  /// Row per point in canonical index order, k directions per row.
  using Table = std::vector<std::vector<Direction>>;

  /// Throws std::invalid_argument on a shape mismatch.
  static DirectionOracle from_table(LatticeSpec spec, Table table);
  static DirectionOracle from_callback(LatticeSpec spec, Callback callback);

  const LatticeSpec& spec() const { return spec_; }

  /// D_dim(x). Throws DomainError for x outside the lattice and
  /// std::invalid_argument for dim outside 1..k.
  Direction operator()(std::size_t dim, const Point& x) const;

  /// D_j(x) = zero for every j in 1..k.
  bool all_zero(const Point& x) const;

  bool is_table() const { return table_ != nullptr; }
  const Table& table() const;
  DirectionOracle materialize() const;

 private:
  DirectionOracle(LatticeSpec spec, std::shared_ptr<const Table> table, Callback cb)
      : spec_(spec), table_(std::move(table)), callback_(std::move(cb)) {}

  LatticeSpec spec_;
  std::shared_ptr<const Table> table_;
  Callback callback_;
};

/// O1: every direction is zero at x.
struct AllZero {
  Point x;
  bool operator==(const AllZero&) const = default;
};

/// OV1: distinct x, y in L^k_s, both zero in every free dimension of s.
struct TwoZeroPoints {
  Slice slice;
  Point x;
  Point y;
  bool operator==(const TwoZeroPoints&) const = default;
};

/// OV2: zero off dimension dim, y_dim = x_dim + 1, D_dim(x) = up, D_dim(y) = down.
struct AdjacentUpDown {
  Slice slice;
  Point x;
  Point y;
  std::size_t dim = 1;
  bool operator==(const AdjacentUpDown&) const = default;
};

/// OV3: zero off dimension dim and D_dim points out of the grid at x.
struct BoundaryEscape {
  Slice slice;
  Point x;
  std::size_t dim = 1;
  bool operator==(const BoundaryEscape&) const = default;
};

using OpdcSolution = std::variant<AllZero, TwoZeroPoints, AdjacentUpDown, BoundaryEscape>;

inline bool is_proper(const OpdcSolution& sol) { return std::holds_alternative<AllZero>(sol); }

struct OpdcOptions {
  /// Accept any slice in OV1/OV2/OV3 instead of only i-slices (the
  /// all-permutation variant).
  bool any_slice = false;
};

bool check_o1(const DirectionOracle& d, const Point& x);

/// The checkers below evaluate D only at the witness points, and only after
/// the structural clauses (spec, index range, slice admissibility, slice
/// membership, adjacency or boundary position) have passed.
Verdict check_ov1(const DirectionOracle& d, const Slice& s, const Point& x, const Point& y,
                  const OpdcOptions& options = {});
Verdict check_ov2(const DirectionOracle& d, const Slice& s, const Point& x, const Point& y,
                  std::size_t dim, const OpdcOptions& options = {});
Verdict check_ov3(const DirectionOracle& d, const Slice& s, const Point& x, std::size_t dim,
                  const OpdcOptions& options = {});

Verdict verify_opdc_solution(const DirectionOracle& d, const OpdcSolution& sol,
                             const OpdcOptions& options = {});

}  // namespace sutarski

#endif  // SUTARSKI_OPDC_HPP
