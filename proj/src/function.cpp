#include "sutarski/function.hpp"

#include <sstream>

namespace sutarski {

TarskiFunction TarskiFunction::from_table(LatticeSpec spec, std::vector<Point> table) {
  if (table.size() != spec.size()) {
    throw std::invalid_argument("function table has " + std::to_string(table.size()) +
                                " entries, expected n^k = " + std::to_string(spec.size()));
  }
  for (std::size_t index = 0; index < table.size(); ++index) {
    if (!spec.contains(table[index])) {
      throw std::invalid_argument("function table entry " + std::to_string(index) + " = " +
                                  to_string(table[index]) + " is not a point of the lattice");
    }
  }
  return TarskiFunction(spec, std::make_shared<const std::vector<Point>>(std::move(table)), {});
}

TarskiFunction TarskiFunction::from_callback(LatticeSpec spec, Callback callback) {
  if (!callback) throw std::invalid_argument("empty function callback");
  return TarskiFunction(spec, nullptr, std::move(callback));
}

Point TarskiFunction::operator()(const Point& x) const {
  if (table_) return (*table_)[spec_.index_of(x)];
  spec_.require(x);
  Point y = callback_(x);
  if (!spec_.contains(y)) {
    std::ostringstream os;
    os << "function callback mapped " << x << " outside the lattice, to " << y;
    throw DomainError(os.str());
  }
  return y;
}

const std::vector<Point>& TarskiFunction::table() const {
  if (!table_) throw std::logic_error("function is callback-backed, not a table");
  return *table_;
}

TarskiFunction TarskiFunction::materialize() const {
  if (table_) return *this;
  std::vector<Point> table;
  table.reserve(spec_.size());
  for (std::size_t index = 0; index < spec_.size(); ++index) {
    table.push_back((*this)(spec_.point_at(index)));
  }
  return from_table(spec_, std::move(table));
}

TarskiFunction TarskiFunction::with_value(const Point& x, Point value) const {
  std::vector<Point> table = materialize().table();
  table[spec_.index_of(x)] = std::move(value);
  return from_table(spec_, std::move(table));
}

bool same_values(const TarskiFunction& f, const TarskiFunction& g) {
  if (!(f.spec() == g.spec())) return false;
  for (std::size_t index = 0; index < f.spec().size(); ++index) {
    Point x = f.spec().point_at(index);
    if (f(x) != g(x)) return false;
  }
  return true;
}

RestrictedFunction::RestrictedFunction(TarskiFunction base, Slice slice)
    : base_(std::move(base)), slice_(std::move(slice)) {
  base_.spec().require(slice_);
}

Point RestrictedFunction::operator()(const Point& x) const {
  if (!spec().contains(x) || !slice_.contains(x)) {
    throw DomainError("point " + to_string(x) + " is outside slice " + to_string(slice_));
  }
  Point y = base_(x);
  for (std::size_t pos = 0; pos < y.size(); ++pos) {
    if (slice_[pos]) y[pos] = *slice_[pos];
  }
  return y;
}

RestrictedFunction restrict(const TarskiFunction& f, const Slice& s) { return {f, s}; }

}  // namespace sutarski
