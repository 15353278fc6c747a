#include "sutarski/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

namespace sutarski::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& require_key(const Json& doc, const char* key) {
  if (!doc.is_object()) fail("<root>", "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(key, "missing");
  return *it;
}

std::int64_t require_int(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) fail(field, "expected an integer");
  return value.get<std::int64_t>();
}

void check_version(const Json& doc) {
  const auto version = require_int(require_key(doc, "format_version"), "format_version");
  if (version != kFormatVersion) {
    fail("format_version", "unknown format_version " + std::to_string(version) + " (supported: " +
                               std::to_string(kFormatVersion) + ")");
  }
}

LatticeSpec parse_spec(const Json& doc) {
  const auto n = require_int(require_key(doc, "n"), "n");
  const auto k = require_int(require_key(doc, "k"), "k");
  if (n < 1 || n > std::numeric_limits<Coord>::max()) fail("n", "must be a positive integer");
  if (k < 1) fail("k", "must be a positive integer");
  try {
    return LatticeSpec(static_cast<Coord>(n), static_cast<std::size_t>(k));
  } catch (const std::invalid_argument& e) {
    fail("n,k", e.what());
  }
}

void check_representation(const Json& doc, const char* expected) {
  const auto& rep = require_key(doc, "representation");
  if (!rep.is_string() || rep.get<std::string>() != expected) {
    fail("representation", std::string("expected \"") + expected + "\"");
  }
}

Point parse_point(const Json& value, const std::string& field) {
  if (!value.is_array()) fail(field, "expected a list of coordinates");
  std::vector<Coord> coords;
  for (std::size_t pos = 0; pos < value.size(); ++pos) {
    const auto c = require_int(value[pos], field + "[" + std::to_string(pos) + "]");
    if (c < std::numeric_limits<Coord>::min() || c > std::numeric_limits<Coord>::max()) {
      fail(field + "[" + std::to_string(pos) + "]", "coordinate out of range");
    }
    coords.push_back(static_cast<Coord>(c));
  }
  return Point(std::move(coords));
}

Point parse_lattice_point(const Json& value, const std::string& field, const LatticeSpec& spec) {
  Point x = parse_point(value, field);
  if (x.size() != spec.k()) {
    fail(field, "expected " + std::to_string(spec.k()) + " coordinates, got " +
                    std::to_string(x.size()));
  }
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    if (x[pos] < 1 || x[pos] > spec.n()) {
      fail(field + "[" + std::to_string(pos) + "]",
           "coordinate " + std::to_string(x[pos]) + " outside [1," + std::to_string(spec.n()) + "]");
    }
  }
  return x;
}

const Json& require_rows(const Json& doc, const LatticeSpec& spec) {
  const auto& values = require_key(doc, "values");
  if (!values.is_array()) fail("values", "expected a list");
  if (values.size() != spec.size()) {
    fail("values", "expected n^k = " + std::to_string(spec.size()) + " entries, got " +
                       std::to_string(values.size()));
  }
  return values;
}

Json point_json(const Point& x) { return Json(x.coords()); }

Json slice_json(const Slice& s) {
  Json out = Json::array();
  for (const auto& e : s.entries()) {
    if (e)
      out.push_back(*e);
    else
      out.push_back("*");
  }
  return out;
}

Slice parse_slice(const Json& value) {
  if (!value.is_array()) fail("slice", "expected a list of integers and \"*\"");
  std::vector<Slice::Entry> entries;
  for (std::size_t pos = 0; pos < value.size(); ++pos) {
    const auto& e = value[pos];
    const std::string field = "slice[" + std::to_string(pos) + "]";
    if (e.is_string()) {
      if (e.get<std::string>() != "*") fail(field, "expected an integer or \"*\"");
      entries.emplace_back(kFree);
    } else {
      const auto v = require_int(e, field);
      if (v < std::numeric_limits<Coord>::min() || v > std::numeric_limits<Coord>::max()) {
        fail(field, "value out of range");
      }
      entries.emplace_back(static_cast<Coord>(v));
    }
  }
  return Slice(std::move(entries));
}

// Top-level keys one per line, each row of `rows_key` on its own line.
std::string write_document(const Json& doc, const char* rows_key) {
  std::string out = "{\n";
  std::size_t remaining = doc.size();
  for (const auto& [key, value] : doc.items()) {
    out += "  " + Json(key).dump() + ": ";
    if (key == rows_key && !value.empty()) {
      out += "[\n";
      for (std::size_t row = 0; row < value.size(); ++row) {
        out += "    " + value[row].dump();
        out += row + 1 < value.size() ? ",\n" : "\n";
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += --remaining > 0 ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

Json instance_document(const TarskiFunction& f, const Json& metadata) {
  const auto table = f.materialize().table();
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["n"] = f.spec().n();
  doc["k"] = f.spec().k();
  doc["representation"] = "table";
  Json values = Json::array();
  for (const auto& y : table) values.push_back(point_json(y));
  doc["values"] = std::move(values);
  if (!metadata.is_null()) doc["metadata"] = metadata;
  return doc;
}

std::string sha256_hex(std::string_view text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int b = 0; b < length; ++b) {
    std::snprintf(buf, sizeof buf, "%02x", digest[b]);
    hex += buf;
  }
  return hex;
}

}  // namespace

std::string serialize_instance(const TarskiFunction& f, const Json& metadata) {
  return write_document(instance_document(f, metadata), "values");
}

InstanceFile parse_instance(std::string_view text) {
  const Json doc = parse_json(text);
  check_version(doc);
  const LatticeSpec spec = parse_spec(doc);
  check_representation(doc, "table");
  const auto& values = require_rows(doc, spec);
  std::vector<Point> table;
  table.reserve(spec.size());
  for (std::size_t index = 0; index < values.size(); ++index) {
    table.push_back(parse_lattice_point(values[index], "values[" + std::to_string(index) + "]", spec));
  }
  Json metadata = nullptr;
  if (auto it = doc.find("metadata"); it != doc.end()) metadata = *it;
  return {TarskiFunction::from_table(spec, std::move(table)), std::move(metadata)};
}

std::string instance_hash(const TarskiFunction& f) {
  return "sha256:" + sha256_hex(serialize_instance(f));
}

Json generator_metadata(const GeneratorConfig& config) {
  Json meta;
  meta["kind"] = std::string(to_string(config.kind));
  meta["seed"] = config.seed;
  meta["rng"] = std::string(Rng::kAlgorithm);
  if (config.target) meta["target"] = point_json(*config.target);
  if (config.kind == GeneratorKind::kMutated) meta["mutations"] = config.mutations;
  return meta;
}

std::string serialize_oracle(const DirectionOracle& d, const std::optional<std::string>& source_hash) {
  const auto table = d.materialize().table();
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["n"] = d.spec().n();
  doc["k"] = d.spec().k();
  doc["representation"] = "directions";
  if (source_hash) doc["source_hash"] = *source_hash;
  Json values = Json::array();
  for (const auto& row : table) {
    Json r = Json::array();
    for (auto dir : row) r.push_back(std::string(to_string(dir)));
    values.push_back(std::move(r));
  }
  doc["values"] = std::move(values);
  return write_document(doc, "values");
}

DirectionOracle parse_oracle(std::string_view text) {
  const Json doc = parse_json(text);
  check_version(doc);
  const LatticeSpec spec = parse_spec(doc);
  check_representation(doc, "directions");
  const auto& values = require_rows(doc, spec);
  DirectionOracle::Table table(spec.size());
  for (std::size_t index = 0; index < values.size(); ++index) {
    const std::string field = "values[" + std::to_string(index) + "]";
    const auto& row = values[index];
    if (!row.is_array() || row.size() != spec.k()) {
      fail(field, "expected a list of " + std::to_string(spec.k()) + " directions");
    }
    for (std::size_t pos = 0; pos < row.size(); ++pos) {
      auto dir = row[pos].is_string() ? parse_direction(row[pos].get<std::string>()) : std::nullopt;
      if (!dir) fail(field + "[" + std::to_string(pos) + "]", "expected \"up\", \"down\" or \"zero\"");
      table[index].push_back(*dir);
    }
  }
  return DirectionOracle::from_table(spec, std::move(table));
}

std::string_view type_tag(const SutSolution& sol) {
  static constexpr std::string_view kTags[] = {"UT", "UTV1", "UTV2"};
  return kTags[sol.index()];
}

std::string_view type_tag(const OpdcSolution& sol) {
  static constexpr std::string_view kTags[] = {"O1", "OV1", "OV2", "OV3"};
  return kTags[sol.index()];
}

namespace {

Json witness_header(std::string_view problem, std::string_view tag,
                    const std::optional<std::string>& hash) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["problem"] = std::string(problem);
  doc["type"] = std::string(tag);
  if (hash) doc["instance_hash"] = *hash;
  return doc;
}

}  // namespace

std::string serialize_witness(const SutSolution& sol, const std::optional<std::string>& hash) {
  Json doc = witness_header("sut", type_tag(sol), hash);
  std::visit(
      [&](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, SliceUniquenessViolation>) doc["slice"] = slice_json(w.slice);
        doc["x"] = point_json(w.x);
        if constexpr (!std::is_same_v<W, FixedPoint>) doc["y"] = point_json(w.y);
      },
      sol);
  return doc.dump() + "\n";
}

std::string serialize_witness(const OpdcSolution& sol, const std::optional<std::string>& hash) {
  Json doc = witness_header("opdc", type_tag(sol), hash);
  std::visit(
      [&](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (!std::is_same_v<W, AllZero>) doc["slice"] = slice_json(w.slice);
        doc["x"] = point_json(w.x);
        if constexpr (std::is_same_v<W, TwoZeroPoints> || std::is_same_v<W, AdjacentUpDown>) {
          doc["y"] = point_json(w.y);
        }
        if constexpr (std::is_same_v<W, AdjacentUpDown> || std::is_same_v<W, BoundaryEscape>) {
          doc["i"] = w.dim;
        }
      },
      sol);
  return doc.dump() + "\n";
}

WitnessFile parse_witness(std::string_view text) {
  const Json doc = parse_json(text);
  check_version(doc);
  const auto& problem = require_key(doc, "problem");
  const auto& type = require_key(doc, "type");
  if (!problem.is_string()) fail("problem", "expected \"sut\" or \"opdc\"");
  if (!type.is_string()) fail("type", "expected a solution type tag");
  const std::string p = problem.get<std::string>();
  const std::string t = type.get<std::string>();

  WitnessFile out{SutSolution{}, std::nullopt};
  if (auto it = doc.find("instance_hash"); it != doc.end()) {
    if (!it->is_string()) fail("instance_hash", "expected a string");
    out.instance_hash = it->get<std::string>();
  }
  auto point = [&](const char* key) { return parse_point(require_key(doc, key), key); };
  auto slice = [&] { return parse_slice(require_key(doc, "slice")); };
  auto dim = [&]() -> std::size_t {
    const auto i = require_int(require_key(doc, "i"), "i");
    if (i < 1) fail("i", "dimension indices are 1-based");
    return static_cast<std::size_t>(i);
  };

  if (p == "sut") {
    if (t == "UT") out.solution = SutSolution{FixedPoint{point("x")}};
    else if (t == "UTV1") out.solution = SutSolution{MonotonicityViolation{point("x"), point("y")}};
    else if (t == "UTV2") out.solution = SutSolution{SliceUniquenessViolation{slice(), point("x"), point("y")}};
    else fail("type", "unknown sut solution type \"" + t + "\"");
  } else if (p == "opdc") {
    if (t == "O1") out.solution = OpdcSolution{AllZero{point("x")}};
    else if (t == "OV1") out.solution = OpdcSolution{TwoZeroPoints{slice(), point("x"), point("y")}};
    else if (t == "OV2") out.solution = OpdcSolution{AdjacentUpDown{slice(), point("x"), point("y"), dim()}};
    else if (t == "OV3") out.solution = OpdcSolution{BoundaryEscape{slice(), point("x"), dim()}};
    else fail("type", "unknown opdc solution type \"" + t + "\"");
  } else {
    fail("problem", "expected \"sut\" or \"opdc\", got \"" + p + "\"");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace sutarski::io
