#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "sutarski/io.hpp"

using namespace sutarski;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sutarski");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("sutarski_cli_" + std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

}  // namespace

TEST_CASE("gen then solve finds the attractor target") {
  TempDir dir;
  const auto inst = dir / "att.json";
  auto r = run({"gen", "--kind", "attractor", "--n", "3", "--k", "2", "--target", "2,2", "-o", inst});
  REQUIRE(r.code == cli::kExitOk);

  r = run({"solve", inst});
  CHECK(r.code == cli::kExitOk);
  const auto w = io::parse_witness(r.out);
  CHECK(std::get<SutSolution>(w.solution) == SutSolution{FixedPoint{{2, 2}}});

  for (const char* method : {"kleene-lfp", "kleene-gfp"}) {
    r = run({"solve", inst, "--method", method});
    CHECK(r.code == cli::kExitOk);
    CHECK(std::get<SutSolution>(io::parse_witness(r.out).solution) == SutSolution{FixedPoint{{2, 2}}});
  }

  io::write_file(dir / "w.json", r.out);
  r = run({"verify", inst, dir / "w.json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "valid\n");
}

TEST_CASE("verify rejects a non-fixed point") {
  TempDir dir;
  const auto inst = dir / "att.json";
  REQUIRE(run({"gen", "--kind", "attractor", "--n", "3", "--k", "2", "--target", "2,2", "-o", inst}).code == 0);
  io::write_file(dir / "w.json", R"({"format_version":1,"problem":"sut","type":"UT","x":[1,1]})");
  const auto r = run({"verify", inst, dir / "w.json"});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err == "invalid: not-fixed\n");
}

TEST_CASE("stale witnesses are rejected as usage errors") {
  TempDir dir;
  REQUIRE(run({"gen", "--kind", "attractor", "--n", "3", "--k", "2", "--target", "2,2", "-o", dir / "a.json"}).code == 0);
  REQUIRE(run({"gen", "--kind", "attractor", "--n", "3", "--k", "2", "--target", "1,1", "-o", dir / "b.json"}).code == 0);
  const auto solved = run({"solve", dir / "a.json"});
  io::write_file(dir / "w.json", solved.out);
  const auto r = run({"verify", dir / "b.json", dir / "w.json"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("different instance") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  TempDir dir;
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--kind", "attractor", "--n", "3", "--k", "2", "-o", dir / "x.json"}).code ==
        cli::kExitUsage);
  CHECK(run({"gen", "--kind", "chaos", "--n", "3", "--k", "2", "-o", dir / "x.json"}).code ==
        cli::kExitUsage);
  CHECK(run({"gen", "--kind", "attractor", "--n", "3", "--k", "2", "--target", "2,x", "-o",
             dir / "x.json"})
            .code == cli::kExitUsage);
  CHECK(run({"gen", "--kind", "unique-not-super", "--n", "3", "--k", "1", "-o", dir / "x.json"}).code ==
        cli::kExitUsage);
  CHECK(run({"solve", dir / "missing.json"}).code == cli::kExitUsage);
  io::write_file(dir / "bad.json", "{\"format_version\": 1}");
  CHECK(run({"audit", dir / "bad.json"}).code == cli::kExitUsage);
  CHECK(run({"fuzz", "--n", "0", "--k", "2", "--seeds", "1"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("audit reports on unique-not-super") {
  TempDir dir;
  REQUIRE(run({"gen", "--kind", "unique-not-super", "--n", "2", "--k", "2", "-o", dir / "u.json"}).code == 0);
  const auto r = run({"audit", dir / "u.json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("monotone: yes") != std::string::npos);
  CHECK(r.out.find("fixed points (full lattice): 1") != std::string::npos);
  CHECK(r.out.find("UTV2: slice=(*,1) x=(2,1) y=(1,1)") != std::string::npos);
  CHECK(r.out.find("verdict: violations found") != std::string::npos);
}

TEST_CASE("reduce and map-back") {
  TempDir dir;
  io::write_file(dir / "nm1.json",
                 R"({"format_version":1,"n":3,"k":1,"representation":"table","values":[[3],[1],[1]]})");
  auto r = run({"reduce", dir / "nm1.json", "-o", dir / "d.json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto d = io::parse_oracle(io::read_file(dir / "d.json"));
  CHECK(d(1, {1}) == Direction::kUp);
  CHECK(d(1, {2}) == Direction::kDown);

  io::write_file(dir / "ov2.json",
                 R"({"format_version":1,"problem":"opdc","type":"OV2","slice":["*"],"x":[1],"y":[2],"i":1})");
  r = run({"verify", dir / "nm1.json", dir / "ov2.json"});
  CHECK(r.code == cli::kExitOk);
  r = run({"map-back", dir / "nm1.json", dir / "ov2.json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(std::get<SutSolution>(io::parse_witness(r.out).solution) ==
        SutSolution{MonotonicityViolation{{1}, {3}}});

  io::write_file(dir / "bad.json",
                 R"({"format_version":1,"problem":"opdc","type":"OV2","slice":["*"],"x":[2],"y":[3],"i":1})");
  CHECK(run({"map-back", dir / "nm1.json", dir / "bad.json"}).code == cli::kExitFailure);
  CHECK(run({"verify", dir / "nm1.json", dir / "bad.json"}).err == "invalid: x-not-up\n");

  io::write_file(dir / "sut.json", R"({"format_version":1,"problem":"sut","type":"UT","x":[1]})");
  CHECK(run({"map-back", dir / "nm1.json", dir / "sut.json"}).code == cli::kExitUsage);

  r = run({"solve", dir / "nm1.json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(std::get<SutSolution>(io::parse_witness(r.out).solution) ==
        SutSolution{MonotonicityViolation{{1}, {2}}});
  CHECK(run({"solve", dir / "nm1.json", "--method", "kleene-lfp"}).code == cli::kExitFailure);
}

TEST_CASE("fuzz is clean and deterministic") {
  const auto a = run({"fuzz", "--n", "3", "--k", "2", "--seeds", "100"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out.find("failures=0") != std::string::npos);
  const auto b = run({"fuzz", "--n", "3", "--k", "2", "--seeds", "100", "--workers", "4"});
  CHECK(b.out == a.out);
}

TEST_CASE("gen is deterministic") {
  TempDir dir;
  for (const char* name : {"a.json", "b.json"})
    REQUIRE(run({"gen", "--kind", "mutated", "--n", "3", "--k", "2", "--seed", "9", "--mutations", "2",
                 "-o", dir / name})
                .code == 0);
  CHECK(io::read_file(dir / "a.json") == io::read_file(dir / "b.json"));
}
