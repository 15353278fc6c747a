#ifndef SUTARSKI_GENERATORS_HPP
#define SUTARSKI_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "sutarski/function.hpp"

namespace sutarski {

/// Seeded generator with a fixed algorithm: std::mt19937_64 raw output plus
/// rejection sampling for bounded draws, so streams match across standard
/// library implementations.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  Coord between(Coord lo, Coord hi);
  Point point(const LatticeSpec& spec);

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorKind { kAttractor, kRandomMonotone, kUniqueNotSuper, kMutated };

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view text);

struct GeneratorConfig {
  explicit GeneratorConfig(LatticeSpec lattice) : spec(lattice) {}

  LatticeSpec spec;
  GeneratorKind kind = GeneratorKind::kAttractor;
  std::uint64_t seed = 0;
  /// Attractor target; for kMutated, selects an attractor base instead of a
  /// random monotone one.
  std::optional<Point> target;
  std::size_t mutations = 0;
};

/// f(x)_i = x_i + sign(p_i - x_i). Monotone, and every slice restriction has
/// exactly one fixed point: p on the free coordinates. Callback-backed.
TarskiFunction gen_attractor(const LatticeSpec& spec, const Point& target);

/// f(x)_i = max over y <= x of g(y)_i. Monotone for any g; returns g when g
/// is already monotone. Table-backed, computed as a running maximum over the
/// k immediate predecessors of each point.
TarskiFunction monotone_closure(const TarskiFunction& g);

/// monotone_closure of a uniformly random table. Deterministic in
/// (spec, seed).
TarskiFunction gen_random_monotone(const LatticeSpec& spec, std::uint64_t seed);

/// A monotone function with a unique fixed point but a slice with two. On
/// (n=2, k=2) this is the table
///   f(1,1)=(1,2)  f(2,1)=(2,2)  f(1,2)=(2,2)  f(2,2)=(2,2)
/// whose slice (*,1) fixes both (1,1) and (2,1). Larger specs clamp the first
/// two coordinates into {1,2} before applying the table and send every
/// further coordinate one step toward 1. Throws std::invalid_argument for
/// n < 2 or k < 2.
TarskiFunction gen_unique_not_super(const LatticeSpec& spec);

/// Copy of f with `count` table entries, drawn uniformly with replacement,
/// overwritten by uniformly random points. No monotonicity guarantee.
TarskiFunction gen_mutated(const TarskiFunction& f, std::uint64_t seed, std::size_t count);

/// Seed used for the mutation stream of a kMutated config, kept apart from
/// the stream that draws the base instance.
std::uint64_t mutation_seed(std::uint64_t seed);

/// Dispatches on config.kind. Throws std::invalid_argument when an attractor
/// has no target or the target is outside the spec.
TarskiFunction generate(const GeneratorConfig& config);

}  // namespace sutarski

#endif  // SUTARSKI_GENERATORS_HPP
