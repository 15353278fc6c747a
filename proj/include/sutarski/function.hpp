#ifndef SUTARSKI_FUNCTION_HPP
#define SUTARSKI_FUNCTION_HPP

#include <concepts>
#include <functional>
#include <memory>
#include <vector>

#include "sutarski/lattice.hpp"

namespace sutarski {

/// A total map f : L^k -> L^k, backed either by an explicit table in
/// canonical index order or by an evaluation callback.
///
/// Copies share the underlying table. Callbacks must be pure and safe to call
/// concurrently; every value they return is checked against the spec.
class TarskiFunction {
 public:
  using Callback = std::function<Point(const Point&)>;

  /// Throws std::invalid_argument if the table has the wrong length or holds
  /// a point outside spec.
  static TarskiFunction from_table(LatticeSpec spec, std::vector<Point> table);
  static TarskiFunction from_callback(LatticeSpec spec, Callback callback);

  const LatticeSpec& spec() const { return spec_; }
  /// The whole lattice, as the all-free slice.
  Slice domain() const { return Slice::all_free(spec_.k()); }

  /// f(x). Throws DomainError if x is not a point of spec.
  Point operator()(const Point& x) const;

  bool is_table() const { return table_ != nullptr; }
  /// Throws std::logic_error for callback-backed functions.
  const std::vector<Point>& table() const;

  /// Table-backed copy with identical values.
  TarskiFunction materialize() const;
  /// Table-backed copy with f(x) replaced by value.
  TarskiFunction with_value(const Point& x, Point value) const;

 private:
  TarskiFunction(LatticeSpec spec, std::shared_ptr<const std::vector<Point>> table, Callback cb)
      : spec_(spec), table_(std::move(table)), callback_(std::move(cb)) {}

  LatticeSpec spec_;
  std::shared_ptr<const std::vector<Point>> table_;
  Callback callback_;
};

/// Same spec and same value at every point.
bool same_values(const TarskiFunction& f, const TarskiFunction& g);

/// f_s: free coordinates follow f, fixed coordinates are copied from s.
class RestrictedFunction {
 public:
  /// Throws DomainError if s does not conform to f's spec.
  RestrictedFunction(TarskiFunction base, Slice slice);

  const LatticeSpec& spec() const { return base_.spec(); }
  const Slice& domain() const { return slice_; }
  const Slice& slice() const { return slice_; }
  const TarskiFunction& base() const { return base_; }

  /// Throws DomainError if x is not in L^k_s.
  Point operator()(const Point& x) const;

 private:
  TarskiFunction base_;
  Slice slice_;
};

RestrictedFunction restrict(const TarskiFunction& f, const Slice& s);

/// Anything that maps the points of a slice domain into the lattice:
/// TarskiFunction (domain = whole lattice) or RestrictedFunction.
template <typename G>
concept LatticeMap = requires(const G& g, const Point& x) {
  { g.spec() } -> std::convertible_to<const LatticeSpec&>;
  { g.domain() } -> std::convertible_to<Slice>;
  { g(x) } -> std::convertible_to<Point>;
};

}  // namespace sutarski

#endif  // SUTARSKI_FUNCTION_HPP
