#ifndef SUTARSKI_LATTICE_HPP
#define SUTARSKI_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sutarski {

using Coord = std::int32_t;

/// Raised when a point or slice does not belong to the domain it is used with.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point of the grid {1..n}^k. Coordinates are 1-based values; storage
/// access through operator[] is 0-based.
///
/// The total order (operator<=>) is the canonical enumeration order:
/// dimension 1 varies fastest, so the last coordinate is most significant.
/// It exists for map keys and deterministic tie-breaking and is unrelated to
/// the lattice order, see leq().
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  Coord operator[](std::size_t pos) const { return coords_[pos]; }
  Coord& operator[](std::size_t pos) { return coords_[pos]; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Coord>& coords() const { return coords_; }

  bool operator==(const Point&) const = default;
  std::strong_ordering operator<=>(const Point& other) const;

 private:
  std::vector<Coord> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& x);
std::string to_string(const Point& x);

/// x <= y in the coordinatewise partial order. Throws std::invalid_argument
/// on a dimension mismatch.
bool leq(const Point& x, const Point& y);

/// Strict part of the lattice order: x <= y and x != y.
bool less(const Point& x, const Point& y);

/// Marker for a free slice entry.
inline constexpr std::nullopt_t kFree = std::nullopt;

/// A slice fixes some coordinates and leaves the others free.
class Slice {
 public:
  using Entry = std::optional<Coord>;

  Slice() = default;
  Slice(std::initializer_list<Entry> entries) : entries_(entries) {}
  explicit Slice(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  static Slice all_free(std::size_t k) { return Slice(std::vector<Entry>(k, kFree)); }

  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t pos) const { return entries_[pos]; }
  bool is_free(std::size_t pos) const { return !entries_[pos].has_value(); }
  std::size_t free_count() const;
  const std::vector<Entry>& entries() const { return entries_; }

  /// True iff x has the slice's value at every fixed position.
  bool contains(const Point& x) const;

  bool operator==(const Slice&) const = default;
  /// Canonical order, consistent with enumerate_slices().
  std::strong_ordering operator<=>(const Slice& other) const;

 private:
  std::vector<Entry> entries_;
};

std::ostream& operator<<(std::ostream& os, const Slice& s);
std::string to_string(const Slice& s);

/// The grid {1..n}^k.
class LatticeSpec {
 public:
  /// Throws std::invalid_argument when n < 1, k < 1, or n^k overflows size_t.
  LatticeSpec(Coord n, std::size_t k);

  Coord n() const { return n_; }
  std::size_t k() const { return k_; }
  /// n^k
  std::size_t size() const { return size_; }

  bool contains(const Point& x) const;
  bool conforms(const Slice& s) const;

  /// Throws DomainError unless contains(x).
  void require(const Point& x) const;
  /// Throws DomainError unless conforms(s).
  void require(const Slice& s) const;

  /// Canonical index sum_i (x_i - 1) * n^(i-1).
  std::size_t index_of(const Point& x) const;
  Point point_at(std::size_t index) const;

  Point bottom() const { return Point(std::vector<Coord>(k_, 1)); }
  Point top() const { return Point(std::vector<Coord>(k_, n_)); }

  /// All points in canonical order.
  std::vector<Point> points() const;

  bool operator==(const LatticeSpec&) const = default;

 private:
  Coord n_;
  std::size_t k_;
  std::size_t size_;
};

/// Points of L^k_s in canonical order (dimension 1 fastest). Throws
/// DomainError if s does not conform to spec.
std::vector<Point> slice_points(const LatticeSpec& spec, const Slice& s);

/// Every one of the (n+1)^k slices, in canonical order (Free sorts before
/// Fixed(1), dimension 1 fastest).
std::vector<Slice> enumerate_slices(const LatticeSpec& spec);

/// s_j is free for every 1-based position j <= dim. Throws
/// std::invalid_argument unless 1 <= dim <= s.size().
bool is_i_slice(const Slice& s, std::size_t dim);

/// True iff is_i_slice(s, i) holds for some i in 1..k, which reduces to s_1
/// being free.
bool is_some_i_slice(const Slice& s);

}  // namespace sutarski

#endif  // SUTARSKI_LATTICE_HPP
