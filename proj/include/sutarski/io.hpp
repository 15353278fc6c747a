#ifndef SUTARSKI_IO_HPP
#define SUTARSKI_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "sutarski/function.hpp"
#include "sutarski/generators.hpp"
#include "sutarski/opdc.hpp"
#include "sutarski/tarski.hpp"

namespace sutarski::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Malformed file. The message names the offending field, or the line and
/// column for JSON syntax errors.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance file, keys in this order:
//   format_version, n, k, representation ("table"), values, metadata?
// values holds n^k points as 1-based coordinate lists in canonical index
// order. The text is canonical: one value row per line, compact elsewhere,
// trailing newline.

struct InstanceFile {
  TarskiFunction function;
  Json metadata;  // null when absent
};

/// Callback-backed functions are materialized first.
std::string serialize_instance(const TarskiFunction& f, const Json& metadata = nullptr);
InstanceFile parse_instance(std::string_view text);

/// "sha256:<hex>" of the instance text without metadata.
std::string instance_hash(const TarskiFunction& f);

/// Provenance block for a generated instance.
Json generator_metadata(const GeneratorConfig& config);

// Direction-oracle file, keys in this order:
//   format_version, n, k, representation ("directions"), source_hash?, values
// Each row lists D_1(x)..D_k(x) as "up" / "down" / "zero".

std::string serialize_oracle(const DirectionOracle& d,
                             const std::optional<std::string>& source_hash = std::nullopt);
DirectionOracle parse_oracle(std::string_view text);

// Witness file, keys in this order:
//   format_version, problem ("sut" | "opdc"), type, instance_hash?, slice?,
//   x, y?, i?
// type is one of UT, UTV1, UTV2 (sut) or O1, OV1, OV2, OV3 (opdc). Slices
// mix integers with "*" for free entries; i is a 1-based dimension index.

using AnySolution = std::variant<SutSolution, OpdcSolution>;

struct WitnessFile {
  AnySolution solution;
  std::optional<std::string> instance_hash;
};

std::string_view type_tag(const SutSolution& sol);
std::string_view type_tag(const OpdcSolution& sol);

std::string serialize_witness(const SutSolution& sol,
                              const std::optional<std::string>& instance_hash = std::nullopt);
std::string serialize_witness(const OpdcSolution& sol,
                              const std::optional<std::string>& instance_hash = std::nullopt);
/// Shape-checks the payload; lattice membership is left to the verifiers.
WitnessFile parse_witness(std::string_view text);

/// Whole-file helpers. Throw std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace sutarski::io

#endif  // SUTARSKI_IO_HPP
