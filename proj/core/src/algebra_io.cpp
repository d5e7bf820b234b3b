#include "vinberg/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "vinberg/errors.hpp"

namespace vinberg {

namespace {

using nlohmann::json;

Rational parse_coefficient(const json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw ParseError("coefficient must be a rational string, got " + value.dump());
}

}  // namespace

LieAlgebra parse_algebra(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("names") || !doc["names"].is_array()) {
    throw ParseError("algebra document needs a 'names' array");
  }
  std::vector<std::string> names;
  for (const auto& n : doc["names"]) {
    if (!n.is_string()) throw ParseError("basis names must be strings");
    names.push_back(n.get<std::string>());
  }
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() != names.size()) {
      throw ParseError("'dim' does not match the number of names");
    }
  }

  std::vector<BasisBracket> brackets;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw ParseError("'brackets' must be an array");
    const std::size_t n = names.size();
    auto lookup = [&](const json& name) -> std::size_t {
      if (!name.is_string()) throw ParseError("bracket operands must be basis names");
      for (std::size_t i = 0; i < n; ++i) {
        if (names[i] == name.get<std::string>()) return i;
      }
      throw ParseError("unknown basis name '" + name.get<std::string>() + "'");
    };
    for (const auto& entry : doc["brackets"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_object()) {
        throw ParseError("bracket entries are [name, name, {name: coefficient}]: " + entry.dump());
      }
      BasisBracket br{lookup(entry[0]), lookup(entry[1]), RVector(n)};
      for (const auto& [key, value] : entry[2].items()) {
        br.value[lookup(json(key))] += parse_coefficient(value);
      }
      brackets.push_back(std::move(br));
    }
  }
  try {
    return LieAlgebra(std::move(names), brackets);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

LieAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_algebra(text.str());
}

std::string algebra_to_json(const LieAlgebra& algebra) {
  nlohmann::ordered_json doc;
  doc["dim"] = algebra.dim();
  doc["names"] = algebra.names();
  doc["brackets"] = nlohmann::ordered_json::array();
  for (const auto& br : algebra.nonzero_brackets()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < algebra.dim(); ++k) {
      if (!br.value[k].is_zero()) coeffs[algebra.name(k)] = br.value[k].str();
    }
    doc["brackets"].push_back({algebra.name(br.i), algebra.name(br.j), coeffs});
  }
  return doc.dump(2);
}

}  // namespace vinberg
