#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "sutarski/fuzz.hpp"
#include "sutarski/generators.hpp"
#include "sutarski/io.hpp"
#include "sutarski/reduction.hpp"
#include "sutarski/solvers.hpp"

namespace sutarski::cli {

namespace {

/// Bad input file, stale witness, unusable arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Point parse_target(const std::string& text) {
  std::vector<Coord> coords;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(static_cast<Coord>(std::stoi(item, &used)));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--target: expected comma-separated integers, got \"" + text + "\"");
    }
  }
  return Point(std::move(coords));
}

io::InstanceFile load_instance(const std::string& path) {
  try {
    return io::parse_instance(io::read_file(path));
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

io::WitnessFile load_witness(const std::string& path, const TarskiFunction& f) {
  io::WitnessFile w;
  try {
    w = io::parse_witness(io::read_file(path));
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (w.instance_hash && *w.instance_hash != io::instance_hash(f)) {
    throw UsageError(path + ": witness was produced for a different instance (instance_hash " +
                     *w.instance_hash + " does not match " + io::instance_hash(f) + ")");
  }
  return w;
}

struct GenOptions {
  std::string kind;
  Coord n = 0;
  std::size_t k = 0;
  std::string target;
  std::uint64_t seed = 0;
  std::size_t mutations = 1;
  std::string output;
};

int run_gen(const GenOptions& opt, std::ostream& out) {
  auto kind = parse_generator_kind(opt.kind);
  if (!kind) throw UsageError("--kind: unknown generator \"" + opt.kind + "\"");
  GeneratorConfig config{LatticeSpec(opt.n, opt.k)};
  config.kind = *kind;
  config.seed = opt.seed;
  config.mutations = opt.mutations;
  if (!opt.target.empty()) config.target = parse_target(opt.target);
  try {
    const auto f = generate(config);
    io::write_file(opt.output, io::serialize_instance(f, io::generator_metadata(config)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "wrote " << opt.output << "\n";
  return kExitOk;
}

int run_reduce(const std::string& instance, const std::string& output, std::ostream& out) {
  const auto file = load_instance(instance);
  const auto reduced = reduce(file.function);
  io::write_file(output, io::serialize_oracle(reduced.oracle, io::instance_hash(file.function)));
  out << "wrote " << output << "\n";
  return kExitOk;
}

int run_solve(const std::string& instance, const std::string& method, std::ostream& out,
              std::ostream& err) {
  const auto f = load_instance(instance).function;
  const auto hash = io::instance_hash(f);
  if (method == "kleene-lfp" || method == "kleene-gfp") {
    try {
      const auto result = method == "kleene-lfp" ? kleene_lfp(f) : kleene_gfp(f);
      out << io::serialize_witness(SutSolution{FixedPoint{result.fixed_point}}, hash);
      return kExitOk;
    } catch (const NonConvergence& e) {
      err << e.what() << "\n";
      return kExitFailure;
    }
  }
  if (method != "brute") throw UsageError("--method: unknown solver \"" + method + "\"");
  const auto summary = brute_fixed_points(f);
  if (!summary.all_fixed.empty()) {
    const Point& x = summary.least ? *summary.least : summary.all_fixed.front();
    out << io::serialize_witness(SutSolution{FixedPoint{x}}, hash);
    return kExitOk;
  }
  // No fixed point at all, so f cannot be monotone.
  const auto pair = find_monotonicity_violation(f);
  out << io::serialize_witness(SutSolution{MonotonicityViolation{pair->first, pair->second}}, hash);
  return kExitOk;
}

int run_verify(const std::string& instance, const std::string& witness, bool any_slice,
               std::ostream& out, std::ostream& err) {
  const auto f = load_instance(instance).function;
  const auto w = load_witness(witness, f);
  const Verdict verdict = std::visit(
      [&](const auto& sol) {
        if constexpr (std::is_same_v<std::decay_t<decltype(sol)>, SutSolution>) {
          return verify_sut_solution(f, sol);
        } else {
          return verify_opdc_solution(reduce(f).oracle, sol, OpdcOptions{any_slice});
        }
      },
      w.solution);
  if (verdict) {
    out << "valid\n";
    return kExitOk;
  }
  err << "invalid: " << to_string(verdict.reason()) << "\n";
  return kExitFailure;
}

int run_audit(const std::string& instance, std::ostream& out) {
  const auto f = load_instance(instance).function;
  const auto report = brute_sut_audit(f);
  out << "lattice: n=" << f.spec().n() << " k=" << f.spec().k() << "\n";
  if (report.monotonicity_violation) {
    out << "monotone: no (x=" << report.monotonicity_violation->x
        << " y=" << report.monotonicity_violation->y << ")\n";
  } else {
    out << "monotone: yes\n";
  }
  out << "fixed points (full lattice): " << report.full_lattice_count() << "\n";
  std::size_t non_unique = 0;
  for (const auto& entry : report.slice_counts) non_unique += entry.fixed_points == 1 ? 0 : 1;
  out << "slices: " << report.slice_counts.size() << ", without a unique fixed point: " << non_unique
      << "\n";
  for (const auto& entry : report.slice_counts) {
    out << "  slice " << entry.slice << ": " << entry.fixed_points << "\n";
  }
  if (report.uniqueness_violation) {
    const auto& v = *report.uniqueness_violation;
    out << "UTV2: slice=" << v.slice << " x=" << v.x << " y=" << v.y << "\n";
  }
  out << "verdict: " << (report.violation_free() ? "violation-free" : "violations found") << "\n";
  return kExitOk;
}

int run_map_back(const std::string& instance, const std::string& witness, bool any_slice,
                 std::ostream& out, std::ostream& err) {
  const auto f = load_instance(instance).function;
  const auto w = load_witness(witness, f);
  const auto* sol = std::get_if<OpdcSolution>(&w.solution);
  if (!sol) throw UsageError(witness + ": map-back needs an opdc witness");
  try {
    out << io::serialize_witness(map_back(f, *sol, OpdcOptions{any_slice}), io::instance_hash(f));
    return kExitOk;
  } catch (const ContractViolation& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
}

struct FuzzCommand {
  Coord n = 3;
  std::size_t k = 2;
  std::size_t seeds = 100;
  std::uint64_t first_seed = 0;
  std::size_t workers = 1;
  std::string out_dir;
};

int run_fuzz_command(const FuzzCommand& opt, std::ostream& out, std::ostream& err) {
  FuzzOptions options{LatticeSpec(opt.n, opt.k), opt.first_seed, opt.seeds, opt.workers};
  const auto report = run_fuzz(options);
  out << "fuzz: n=" << opt.n << " k=" << opt.k << " seeds=" << report.instances
      << " opdc-witnesses=" << report.opdc_witnesses << " failures=" << report.failures.size()
      << "\n";
  if (report.failures.empty()) return kExitOk;

  std::string dir = opt.out_dir;
  if (dir.empty()) {
    const char* env = std::getenv(kCounterexampleDirEnv);
    dir = env && *env ? env : "counterexamples";
  }
  std::filesystem::create_directories(dir);
  for (const auto& failure : report.failures) {
    const std::string stem = dir + "/seed-" + std::to_string(failure.seed);
    io::write_file(stem + "-instance.json", failure.instance_text);
    if (failure.witness_text) io::write_file(stem + "-witness.json", *failure.witness_text);
    std::string log;
    for (const auto& m : failure.messages) log += m + "\n";
    io::write_file(stem + "-failures.txt", log);
    err << "seed " << failure.seed << ": " << failure.messages.front() << "\n";
  }
  err << "counterexamples written to " << dir << "\n";
  return kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Super-Unique-Tarski instances, OPDC reduction, solvers and verifiers"};
  app.require_subcommand(1);
  int status = kExitOk;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--kind", gen.kind, "attractor | random-monotone | unique-not-super | mutated")
      ->required();
  gen_cmd->add_option("--n", gen.n, "side length")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--k", gen.k, "dimension count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--target", gen.target, "attractor target, e.g. 2,2");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--mutations", gen.mutations, "entries to rewrite (mutated)");
  gen_cmd->add_option("-o,--output", gen.output, "output file")->required();
  gen_cmd->callback([&] { status = run_gen(gen, out); });

  std::string instance, witness, output, method = "brute";
  bool any_slice = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "write the OPDC direction table of an instance");
  reduce_cmd->add_option("instance", instance)->required();
  reduce_cmd->add_option("-o,--output", output, "output file")->required();
  reduce_cmd->callback([&] { status = run_reduce(instance, output, out); });

  auto* solve_cmd = app.add_subcommand("solve", "print a solution witness");
  solve_cmd->add_option("instance", instance)->required();
  solve_cmd->add_option("--method", method, "kleene-lfp | kleene-gfp | brute");
  solve_cmd->callback([&] { status = run_solve(instance, method, out, err); });

  auto* verify_cmd = app.add_subcommand("verify", "check a sut or opdc witness");
  verify_cmd->add_option("instance", instance)->required();
  verify_cmd->add_option("witness", witness)->required();
  verify_cmd->add_flag("--any-slice", any_slice, "accept any slice in OV1-OV3");
  verify_cmd->callback([&] { status = run_verify(instance, witness, any_slice, out, err); });

  auto* audit_cmd = app.add_subcommand("audit", "exhaustive monotonicity and slice audit");
  audit_cmd->add_option("instance", instance)->required();
  audit_cmd->callback([&] { status = run_audit(instance, out); });

  auto* map_cmd = app.add_subcommand("map-back", "map an OPDC witness to a Super-Unique-Tarski one");
  map_cmd->add_option("instance", instance)->required();
  map_cmd->add_option("witness", witness)->required();
  map_cmd->add_flag("--any-slice", any_slice, "accept any slice in OV1-OV3");
  map_cmd->callback([&] { status = run_map_back(instance, witness, any_slice, out, err); });

  FuzzCommand fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "run the property pipeline over seeded instances");
  fuzz_cmd->add_option("--n", fuzz.n, "side length")->required()->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--k", fuzz.k, "dimension count")->required()->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seeds", fuzz.seeds, "number of seeds")->required();
  fuzz_cmd->add_option("--first-seed", fuzz.first_seed, "first seed");
  fuzz_cmd->add_option("--workers", fuzz.workers, "worker threads")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--out", fuzz.out_dir,
                       std::string("counterexample directory (default $") + kCounterexampleDirEnv +
                           " or ./counterexamples)");
  fuzz_cmd->callback([&] { status = run_fuzz_command(fuzz, out, err); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}

}  // namespace sutarski::cli
