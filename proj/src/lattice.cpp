#include "sutarski/lattice.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace sutarski {

std::strong_ordering Point::operator<=>(const Point& other) const {
  if (auto c = coords_.size() <=> other.coords_.size(); c != 0) return c;
  for (std::size_t pos = coords_.size(); pos-- > 0;) {
    if (auto c = coords_[pos] <=> other.coords_[pos]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Point& x) {
  os << '(';
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    if (pos) os << ',';
    os << x[pos];
  }
  return os << ')';
}

std::string to_string(const Point& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

bool leq(const Point& x, const Point& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("leq: dimension mismatch " + to_string(x) + " vs " + to_string(y));
  }
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    if (x[pos] > y[pos]) return false;
  }
  return true;
}

bool less(const Point& x, const Point& y) { return x != y && leq(x, y); }

std::size_t Slice::free_count() const {
  std::size_t count = 0;
  for (const auto& e : entries_) count += e.has_value() ? 0 : 1;
  return count;
}

bool Slice::contains(const Point& x) const {
  if (x.size() != entries_.size()) return false;
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    if (entries_[pos] && *entries_[pos] != x[pos]) return false;
  }
  return true;
}

std::strong_ordering Slice::operator<=>(const Slice& other) const {
  if (auto c = entries_.size() <=> other.entries_.size(); c != 0) return c;
  for (std::size_t pos = entries_.size(); pos-- > 0;) {
    Coord a = entries_[pos].value_or(0);
    Coord b = other.entries_[pos].value_or(0);
    if (auto c = a <=> b; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Slice& s) {
  os << '(';
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    if (pos) os << ',';
    if (s[pos])
      os << *s[pos];
    else
      os << '*';
  }
  return os << ')';
}

std::string to_string(const Slice& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

LatticeSpec::LatticeSpec(Coord n, std::size_t k) : n_(n), k_(k), size_(1) {
  if (n < 1) throw std::invalid_argument("lattice side length must be >= 1");
  if (k < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  for (std::size_t d = 0; d < k; ++d) {
    if (size_ > kMax / static_cast<std::size_t>(n)) {
      throw std::invalid_argument("lattice size n^k overflows the index range");
    }
    size_ *= static_cast<std::size_t>(n);
  }
}

bool LatticeSpec::contains(const Point& x) const {
  if (x.size() != k_) return false;
  for (Coord c : x) {
    if (c < 1 || c > n_) return false;
  }
  return true;
}

bool LatticeSpec::conforms(const Slice& s) const {
  if (s.size() != k_) return false;
  for (const auto& e : s.entries()) {
    if (e && (*e < 1 || *e > n_)) return false;
  }
  return true;
}

void LatticeSpec::require(const Point& x) const {
  if (!contains(x)) {
    std::ostringstream os;
    os << "point " << x << " is not in {1.." << n_ << "}^" << k_;
    throw DomainError(os.str());
  }
}

void LatticeSpec::require(const Slice& s) const {
  if (!conforms(s)) {
    std::ostringstream os;
    os << "slice " << s << " does not conform to {1.." << n_ << "}^" << k_;
    throw DomainError(os.str());
  }
}

std::size_t LatticeSpec::index_of(const Point& x) const {
  require(x);
  std::size_t index = 0;
  for (std::size_t pos = k_; pos-- > 0;) {
    index = index * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x[pos] - 1);
  }
  return index;
}

Point LatticeSpec::point_at(std::size_t index) const {
  if (index >= size_) throw DomainError("point index out of range");
  std::vector<Coord> coords(k_);
  for (std::size_t pos = 0; pos < k_; ++pos) {
    coords[pos] = static_cast<Coord>(index % static_cast<std::size_t>(n_)) + 1;
    index /= static_cast<std::size_t>(n_);
  }
  return Point(std::move(coords));
}

std::vector<Point> LatticeSpec::points() const { return slice_points(*this, Slice::all_free(k_)); }

std::vector<Point> slice_points(const LatticeSpec& spec, const Slice& s) {
  spec.require(s);
  std::vector<Coord> coords(spec.k());
  for (std::size_t pos = 0; pos < spec.k(); ++pos) coords[pos] = s[pos].value_or(1);

  std::vector<Point> out;
  while (true) {
    out.emplace_back(coords);
    // Odometer over the free positions, first position fastest.
    std::size_t pos = 0;
    for (; pos < spec.k(); ++pos) {
      if (!s.is_free(pos)) continue;
      if (coords[pos] < spec.n()) {
        ++coords[pos];
        break;
      }
      coords[pos] = 1;
    }
    if (pos == spec.k()) break;
  }
  return out;
}

std::vector<Slice> enumerate_slices(const LatticeSpec& spec) {
  // Entry value 0 encodes Free.
  std::vector<Coord> digits(spec.k(), 0);
  std::vector<Slice> out;
  while (true) {
    std::vector<Slice::Entry> entries(spec.k());
    for (std::size_t pos = 0; pos < spec.k(); ++pos) {
      if (digits[pos] != 0) entries[pos] = digits[pos];
    }
    out.emplace_back(std::move(entries));
    std::size_t pos = 0;
    for (; pos < spec.k(); ++pos) {
      if (digits[pos] < spec.n()) {
        ++digits[pos];
        break;
      }
      digits[pos] = 0;
    }
    if (pos == spec.k()) break;
  }
  return out;
}

bool is_i_slice(const Slice& s, std::size_t dim) {
  if (dim < 1 || dim > s.size()) {
    throw std::invalid_argument("is_i_slice: index " + std::to_string(dim) + " outside 1.." +
                                std::to_string(s.size()));
  }
  for (std::size_t pos = 0; pos < dim; ++pos) {
    if (!s.is_free(pos)) return false;
  }
  return true;
}

bool is_some_i_slice(const Slice& s) { return s.size() > 0 && s.is_free(0); }

}  // namespace sutarski
