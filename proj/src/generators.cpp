#include "sutarski/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sutarski {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

Coord Rng::between(Coord lo, Coord hi) {
  return lo + static_cast<Coord>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Point Rng::point(const LatticeSpec& spec) {
  std::vector<Coord> coords(spec.k());
  for (auto& c : coords) c = between(1, spec.n());
  return Point(std::move(coords));
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kAttractor: return "attractor";
    case GeneratorKind::kRandomMonotone: return "random-monotone";
    case GeneratorKind::kUniqueNotSuper: return "unique-not-super";
    case GeneratorKind::kMutated: return "mutated";
  }
  return "?";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view text) {
  for (auto kind : {GeneratorKind::kAttractor, GeneratorKind::kRandomMonotone,
                    GeneratorKind::kUniqueNotSuper, GeneratorKind::kMutated}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

TarskiFunction gen_attractor(const LatticeSpec& spec, const Point& target) {
  spec.require(target);
  return TarskiFunction::from_callback(spec, [target](const Point& x) {
    Point y = x;
    for (std::size_t pos = 0; pos < y.size(); ++pos) {
      if (y[pos] < target[pos]) ++y[pos];
      else if (y[pos] > target[pos]) --y[pos];
    }
    return y;
  });
}

TarskiFunction monotone_closure(const TarskiFunction& g) {
  const auto& spec = g.spec();
  std::vector<Point> table;
  table.reserve(spec.size());
  std::size_t stride = 1;
  std::vector<std::size_t> strides(spec.k());
  for (auto& s : strides) {
    s = stride;
    stride *= static_cast<std::size_t>(spec.n());
  }
  // Canonical order visits every predecessor x - e_j before x.
  for (std::size_t index = 0; index < spec.size(); ++index) {
    const Point x = spec.point_at(index);
    Point best = g(x);
    for (std::size_t pos = 0; pos < spec.k(); ++pos) {
      if (x[pos] == 1) continue;
      const Point& below = table[index - strides[pos]];
      for (std::size_t c = 0; c < best.size(); ++c) best[c] = std::max(best[c], below[c]);
    }
    table.push_back(std::move(best));
  }
  return TarskiFunction::from_table(spec, std::move(table));
}

TarskiFunction gen_random_monotone(const LatticeSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> table;
  table.reserve(spec.size());
  for (std::size_t index = 0; index < spec.size(); ++index) table.push_back(rng.point(spec));
  return monotone_closure(TarskiFunction::from_table(spec, std::move(table)));
}

TarskiFunction gen_unique_not_super(const LatticeSpec& spec) {
  if (spec.n() < 2 || spec.k() < 2) {
    throw std::invalid_argument("unique-not-super instances need n >= 2 and k >= 2");
  }
  std::vector<Point> table;
  table.reserve(spec.size());
  for (std::size_t index = 0; index < spec.size(); ++index) {
    Point y = spec.point_at(index);
    const Coord a = std::min<Coord>(y[0], 2);
    const Coord b = std::min<Coord>(y[1], 2);
    y[0] = (a == 1 && b == 1) ? 1 : 2;
    y[1] = 2;
    for (std::size_t pos = 2; pos < y.size(); ++pos) y[pos] = std::max<Coord>(y[pos] - 1, 1);
    table.push_back(std::move(y));
  }
  return TarskiFunction::from_table(spec, std::move(table));
}

TarskiFunction gen_mutated(const TarskiFunction& f, std::uint64_t seed, std::size_t count) {
  const auto& spec = f.spec();
  Rng rng(seed);
  std::vector<Point> table = f.materialize().table();
  for (std::size_t m = 0; m < count; ++m) {
    const auto index = static_cast<std::size_t>(rng.below(spec.size()));
    table[index] = rng.point(spec);
  }
  return TarskiFunction::from_table(spec, std::move(table));
}

std::uint64_t mutation_seed(std::uint64_t seed) { return seed ^ 0x9e3779b97f4a7c15ULL; }

TarskiFunction generate(const GeneratorConfig& config) {
  const auto& spec = config.spec;
  if (config.target && !spec.contains(*config.target)) {
    throw std::invalid_argument("target " + to_string(*config.target) + " is outside the lattice");
  }
  switch (config.kind) {
    case GeneratorKind::kAttractor:
      if (!config.target) throw std::invalid_argument("attractor instances need a target point");
      return gen_attractor(spec, *config.target);
    case GeneratorKind::kRandomMonotone:
      return gen_random_monotone(spec, config.seed);
    case GeneratorKind::kUniqueNotSuper:
      return gen_unique_not_super(spec);
    case GeneratorKind::kMutated: {
      const auto base = config.target ? gen_attractor(spec, *config.target)
                                      : gen_random_monotone(spec, config.seed);
      return gen_mutated(base, mutation_seed(config.seed), config.mutations);
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace sutarski
