#include "sutarski/fuzz.hpp"

#include <algorithm>
#include <thread>

#include "sutarski/reduction.hpp"

namespace sutarski {

namespace {

void record(InstanceCheck& check, std::string message,
            std::optional<io::AnySolution> witness = std::nullopt) {
  if (check.failures.empty() && witness) check.failing_witness = std::move(witness);
  check.failures.push_back(std::move(message));
}

template <typename Solution>
std::string describe(const Solution& sol) {
  std::string text = io::serialize_witness(sol);
  text.pop_back();
  return text;
}

}  // namespace

InstanceCheck check_instance(const TarskiFunction& f) {
  InstanceCheck check;
  const TarskiFunction table = f.materialize();
  check.audit = brute_sut_audit(table);
  const auto reduced = reduce(table);
  check.opdc_solutions = brute_opdc_solutions(reduced.oracle);

  bool has_violation = false;
  for (const auto& sol : check.opdc_solutions) {
    if (std::holds_alternative<BoundaryEscape>(sol)) {
      record(check, "boundary escape found in a reduced oracle: " + describe(sol), sol);
    }
    if (!is_proper(sol)) has_violation = true;

    std::optional<SutSolution> mapped;
    try {
      mapped = map_back(table, sol);
    } catch (const std::exception& e) {
      record(check, "map_back rejected " + describe(sol) + ": " + e.what(), sol);
    }
    if (mapped) {
      if (auto v = verify_sut_solution(table, *mapped); !v) {
        record(check,
               "mapped witness " + describe(*mapped) + " is invalid (" +
                   std::string(to_string(v.reason())) + "), from " + describe(sol),
               *mapped);
      }
      if (is_proper(sol) != is_proper(*mapped)) {
        record(check, "type not preserved: " + describe(sol) + " -> " + describe(*mapped), sol);
      }
      const auto text = io::serialize_witness(*mapped);
      if (io::serialize_witness(std::get<SutSolution>(io::parse_witness(text).solution)) != text) {
        record(check, "witness round-trip changed " + describe(*mapped), *mapped);
      }
    }
    const auto text = io::serialize_witness(sol);
    if (io::serialize_witness(std::get<OpdcSolution>(io::parse_witness(text).solution)) != text) {
      record(check, "witness round-trip changed " + describe(sol), sol);
    }
    check.mapped.push_back(std::move(mapped));
  }

  if (check.audit.violation_free() && has_violation) {
    record(check, "violation-free instance reduced to an oracle with OPDC violations");
  }

  const auto text = io::serialize_instance(table);
  const auto parsed = io::parse_instance(text).function;
  if (!same_values(parsed, table) || io::serialize_instance(parsed) != text) {
    record(check, "instance round-trip is not the identity");
  }
  return check;
}

GeneratorConfig fuzz_config(const LatticeSpec& spec, std::uint64_t seed) {
  GeneratorConfig config{spec};
  config.seed = seed;
  Rng rng(seed);
  switch (seed % 5) {
    case 0:
      config.kind = GeneratorKind::kAttractor;
      config.target = rng.point(spec);
      break;
    case 1:
      config.kind = GeneratorKind::kRandomMonotone;
      break;
    case 2:
      config.kind = GeneratorKind::kMutated;
      config.mutations = 1 + seed % 3;
      break;
    case 3:
      config.kind = GeneratorKind::kMutated;
      config.target = rng.point(spec);
      config.mutations = 1 + seed % 3;
      break;
    default:
      config.kind = spec.n() >= 2 && spec.k() >= 2 ? GeneratorKind::kUniqueNotSuper
                                                    : GeneratorKind::kRandomMonotone;
      break;
  }
  return config;
}

FuzzReport run_fuzz(const FuzzOptions& options) {
  struct Slot {
    std::size_t witnesses = 0;
    std::optional<FuzzFailure> failure;
  };
  std::vector<Slot> slots(options.seeds);

  auto work = [&](std::size_t worker, std::size_t stride) {
    for (std::size_t i = worker; i < options.seeds; i += stride) {
      const std::uint64_t seed = options.first_seed + i;
      const auto config = fuzz_config(options.spec, seed);
      const auto f = generate(config).materialize();
      FuzzFailure failure{seed, {}, io::serialize_instance(f, io::generator_metadata(config)), {}};
      try {
        const auto check = check_instance(f);
        slots[i].witnesses = check.opdc_solutions.size();
        if (check.passed()) continue;
        failure.messages = check.failures;
        if (check.failing_witness) {
          const auto hash = io::instance_hash(f);
          failure.witness_text = std::visit(
              [&](const auto& sol) { return io::serialize_witness(sol, hash); },
              *check.failing_witness);
        }
      } catch (const std::exception& e) {
        failure.messages.push_back(std::string("pipeline error: ") + e.what());
      }
      slots[i].failure = std::move(failure);
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, options.seeds));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  FuzzReport report;
  report.instances = options.seeds;
  for (auto& slot : slots) {
    report.opdc_witnesses += slot.witnesses;
    if (slot.failure) report.failures.push_back(std::move(*slot.failure));
  }
  return report;
}

}  // namespace sutarski
