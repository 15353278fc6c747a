#ifndef SUTARSKI_FUZZ_HPP
#define SUTARSKI_FUZZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sutarski/generators.hpp"
#include "sutarski/io.hpp"
#include "sutarski/opdc.hpp"
#include "sutarski/solvers.hpp"

namespace sutarski {

/// Everything the property pipeline learned about one instance.
struct InstanceCheck {
  AuditReport audit;
  std::vector<OpdcSolution> opdc_solutions;
  /// map_back of opdc_solutions, index-aligned; empty where map_back threw.
  std::vector<std::optional<SutSolution>> mapped;
  /// One line per broken property. Empty means the instance passed.
  std::vector<std::string> failures;
  /// Witness behind the first failure, when there is one.
  std::optional<io::AnySolution> failing_witness;

  bool passed() const { return failures.empty(); }
};

/// audit -> reduce -> enumerate -> map_back -> verify, plus the checks tied to
/// them: every mapped witness verifies, proper maps to proper and violation
/// to violation, violation-free instances reduce to violation-free oracles,
/// no boundary escape exists, and instance and witness files round-trip.
InstanceCheck check_instance(const TarskiFunction& f);

/// The generator configuration the fuzzer uses for a seed. Kinds rotate with
/// the seed: attractor, random-monotone, mutated random-monotone, mutated
/// attractor, unique-not-super (random-monotone when n < 2 or k < 2).
GeneratorConfig fuzz_config(const LatticeSpec& spec, std::uint64_t seed);

struct FuzzOptions {
  LatticeSpec spec{3, 2};
  std::uint64_t first_seed = 0;
  std::size_t seeds = 100;
  std::size_t workers = 1;
};

struct FuzzFailure {
  std::uint64_t seed = 0;
  std::vector<std::string> messages;
  std::string instance_text;
  std::optional<std::string> witness_text;
};

struct FuzzReport {
  std::size_t instances = 0;
  std::size_t opdc_witnesses = 0;
  /// Ordered by seed regardless of worker count.
  std::vector<FuzzFailure> failures;
};

FuzzReport run_fuzz(const FuzzOptions& options);

}  // namespace sutarski

#endif  // SUTARSKI_FUZZ_HPP
