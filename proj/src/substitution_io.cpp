#include "substkit/substitution_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "substkit/error.hpp"

namespace substkit {

using ojson = nlohmann::ordered_json;

namespace {

std::vector<std::string> string_array(const ojson& value, const std::string& what) {
  if (!value.is_array()) fail(ErrorCode::ParseError, what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) fail(ErrorCode::ParseError, what + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

SubstitutionDef parse_definition(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::ParseError, "definition must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "alphabet" && key != "lambda" && key != "rules")
      fail(ErrorCode::ParseError, "unexpected key '" + key + "'");
  for (const char* key : {"alphabet", "lambda", "rules"})
    if (!doc.contains(key)) fail(ErrorCode::ParseError, std::string("missing key '") + key + "'");

  SubstitutionDef def;
  def.alphabet = string_array(doc["alphabet"], "alphabet");
  const auto& lambda = doc["lambda"];
  if (!lambda.is_number_integer()) fail(ErrorCode::ParseError, "lambda must be an integer");
  def.lambda = lambda.get<std::int64_t>();
  const auto& rules = doc["rules"];
  if (!rules.is_object()) fail(ErrorCode::ParseError, "rules must be an object");
  for (const auto& [key, word] : rules.items())
    def.rules.emplace_back(key, string_array(word, "rule for '" + key + "'"));
  return def;
}

Substitution parse_substitution(std::string_view text) { return Substitution::from_def(parse_definition(text)); }

Substitution load_substitution(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_substitution(buffer.str());
}

std::string emit_definition(const Substitution& sub) {
  // one rule per line keeps the files diffable
  const auto def = sub.to_def();
  std::string out = "{\n  \"alphabet\": " + ojson(def.alphabet).dump() + ",\n";
  out += "  \"lambda\": " + std::to_string(def.lambda) + ",\n  \"rules\": {\n";
  for (std::size_t i = 0; i < def.rules.size(); ++i) {
    out += "    " + ojson(def.rules[i].first).dump() + ": " + ojson(def.rules[i].second).dump();
    out += i + 1 < def.rules.size() ? ",\n" : "\n";
  }
  out += "  }\n}\n";
  return out;
}

void save_substitution(const Substitution& sub, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path.string() + "'");
  out << emit_definition(sub);
}

}  // namespace substkit
