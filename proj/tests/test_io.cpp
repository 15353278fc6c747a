#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "sutarski/generators.hpp"
#include "sutarski/io.hpp"
#include "sutarski/reduction.hpp"

using namespace sutarski;

namespace {

constexpr std::string_view kIdentityText =
    "{\n  \"format_version\": 1,\n  \"n\": 2,\n  \"k\": 1,\n  \"representation\": \"table\",\n"
    "  \"values\": [\n    [1],\n    [2]\n  ]\n}\n";

std::string parse_message(std::string_view text) {
  try {
    (void)io::parse_instance(text);
  } catch (const io::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("instance text is canonical") {
  CHECK(io::serialize_instance(oracle::identity(2, 1)) == kIdentityText);
  const auto parsed = io::parse_instance(kIdentityText);
  CHECK(parsed.metadata.is_null());
  CHECK(same_values(parsed.function, oracle::identity(2, 1)));
  // Hash frozen from an external sha256 of the text above.
  CHECK(io::instance_hash(oracle::identity(2, 1)) ==
        "sha256:04aaad20648ba200848b50ae9c327a60d604fd4d1358905ca0661a9faf920a68");
}

TEST_CASE("instance round trip") {
  GeneratorConfig config(LatticeSpec(3, 2));
  config.target = Point{2, 2};
  const auto metadata = io::generator_metadata(config);
  const auto text = io::serialize_instance(gen_attractor(config.spec, {2, 2}), metadata);
  const auto parsed = io::parse_instance(text);
  CHECK(same_values(parsed.function, oracle::att3()));
  CHECK(parsed.metadata == metadata);
  CHECK(parsed.metadata["kind"] == "attractor");
  CHECK(io::serialize_instance(parsed.function, parsed.metadata) == text);
  CHECK(io::instance_hash(parsed.function) == io::instance_hash(oracle::att3()));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = gen_mutated(gen_random_monotone(LatticeSpec(3, 3), seed), seed, 2);
    const auto once = io::serialize_instance(f);
    CHECK(io::serialize_instance(f) == once);
    CHECK(io::serialize_instance(io::parse_instance(once).function) == once);
  }
}

TEST_CASE("metadata does not change the hash") {
  GeneratorConfig config(LatticeSpec(3, 2));
  config.kind = GeneratorKind::kRandomMonotone;
  config.seed = 4;
  const auto f = generate(config);
  const auto parsed = io::parse_instance(io::serialize_instance(f, io::generator_metadata(config)));
  CHECK(io::instance_hash(parsed.function) == io::instance_hash(f));
  CHECK(io::instance_hash(f) != io::instance_hash(oracle::att3()));
}

TEST_CASE("instance parse errors name the field") {
  CHECK(parse_message(R"({"format_version":1,"n":3,"k":2,"representation":"table","values":[[1,1]]})")
            .find("values: expected n^k = 9 entries, got 1") != std::string::npos);
  CHECK(parse_message(R"({"format_version":1,"n":2,"k":1,"representation":"table","values":[[1],[3]]})")
            .find("values[1][0]") != std::string::npos);
  CHECK(parse_message(R"({"format_version":2,"n":2,"k":1,"representation":"table","values":[[1],[2]]})")
            .find("format_version") != std::string::npos);
  CHECK(parse_message(R"({"format_version":1,"n":2,"k":1,"representation":"table","values":[[1],[2,1]]})")
            .find("values[1]") != std::string::npos);
  CHECK(parse_message(R"({"format_version":1,"n":0,"k":1,"representation":"table","values":[]})") != "");
  CHECK(parse_message(R"({"format_version":1,"n":2,"k":1,"representation":"lazy","values":[[1],[2]]})")
            .find("representation") != std::string::npos);
  CHECK(parse_message("{\"format_version\": 1,\n  oops}") != "");
  CHECK(parse_message("[]") != "");
}

TEST_CASE("witness round trip") {
  const std::string hash = io::instance_hash(oracle::att3());
  const std::vector<SutSolution> sut = {
      FixedPoint{{2, 2}}, MonotonicityViolation{{1, 1}, {2, 1}},
      SliceUniquenessViolation{{kFree, 1}, {2, 1}, {1, 1}}};
  for (const auto& sol : sut) {
    for (const auto& h : {std::optional<std::string>{}, std::optional<std::string>{hash}}) {
      const auto text = io::serialize_witness(sol, h);
      const auto back = io::parse_witness(text);
      CHECK(std::get<SutSolution>(back.solution) == sol);
      CHECK(back.instance_hash == h);
      CHECK(io::serialize_witness(std::get<SutSolution>(back.solution), h) == text);
    }
  }
  const std::vector<OpdcSolution> opdc = {
      AllZero{{2, 2}}, TwoZeroPoints{{kFree, 3}, {1, 3}, {2, 3}},
      AdjacentUpDown{{kFree, kFree}, {1, 2}, {2, 1}, 1}, BoundaryEscape{{kFree, kFree}, {3, 1}, 2}};
  for (const auto& sol : opdc) {
    const auto text = io::serialize_witness(sol);
    CHECK(std::get<OpdcSolution>(io::parse_witness(text).solution) == sol);
  }
  CHECK(io::serialize_witness(SutSolution{SliceUniquenessViolation{{kFree, 1}, {2, 1}, {1, 1}}}) ==
        "{\"format_version\":1,\"problem\":\"sut\",\"type\":\"UTV2\",\"slice\":[\"*\",1],"
        "\"x\":[2,1],\"y\":[1,1]}\n");
  CHECK(io::serialize_witness(OpdcSolution{AdjacentUpDown{{kFree}, {1}, {2}, 1}}) ==
        "{\"format_version\":1,\"problem\":\"opdc\",\"type\":\"OV2\",\"slice\":[\"*\"],"
        "\"x\":[1],\"y\":[2],\"i\":1}\n");
}

TEST_CASE("witness parse errors") {
  CHECK_THROWS_AS(io::parse_witness(R"({"format_version":1,"problem":"sut","type":"UT2","x":[1]})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_witness(R"({"format_version":1,"problem":"sut","type":"UTV1","x":[1]})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_witness(R"({"format_version":1,"problem":"opdc","type":"OV3","x":[1],"slice":["*"]})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_witness(R"({"format_version":1,"problem":"nope","type":"UT","x":[1]})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_witness("not json"), io::ParseError);
  // Shape only: coordinates outside the lattice are the verifier's business.
  CHECK_NOTHROW(io::parse_witness(R"({"format_version":1,"problem":"sut","type":"UT","x":[9,9]})"));
}

TEST_CASE("oracle round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = gen_mutated(gen_random_monotone(LatticeSpec(3, 2), seed), seed, 2);
    const auto d = reduce(f).oracle;
    const auto text = io::serialize_oracle(d, io::instance_hash(f));
    const auto back = io::parse_oracle(text);
    CHECK(back.table() == d.materialize().table());
    CHECK(io::serialize_oracle(back, io::instance_hash(f)) == text);
  }
  CHECK_THROWS_AS(io::parse_oracle(R"({"format_version":1,"n":2,"k":1,"representation":"directions","values":[["up"],["left"]]})"),
                  io::ParseError);
}

TEST_CASE("file helpers") {
  const auto path = (std::filesystem::temp_directory_path() / "sutarski_io_helper_test.json").string();
  io::write_file(path, kIdentityText);
  CHECK(io::read_file(path) == kIdentityText);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::read_file("/nonexistent/dir/file.json"), std::runtime_error);
}
