#include "substkit/fixtures.hpp"

#include <map>
#include <string>

#include "substkit/error.hpp"
#include "substkit/substitution_io.hpp"

namespace substkit {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& fixture_texts();
}

namespace {

const std::map<std::string_view, std::string_view>& descriptions() {
  static const std::map<std::string_view, std::string_view> d{
      {"baum_sweet", "Baum-Sweet sequence; synchronizing, not primitive (d -> dd)"},
      {"thue_morse", "Thue-Morse sequence; bijective (external reference case)"},
      {"rudin_shapiro", "Rudin-Shapiro substitution; quasi-bijective, not bijective"},
      {"three_letter_cover", "three letters, c = 2, h = 1; the minimal sets overlap"},
      {"adda_bccb", "length 4, c = 2, h = 1; the minimal sets form a partition"},
      {"height_two", "length 3 with c = h = 2"},
      {"bijective_s3", "bijective on three letters; column group S3, extension of height 2"},
  };
  return d;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> list = [] {
    std::vector<Fixture> out;
    for (const auto& [name, text] : detail::fixture_texts()) out.push_back({name, descriptions().at(name), text});
    return out;
  }();
  return list;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  fail(ErrorCode::ParseError, "unknown fixture '" + std::string(name) + "'");
}

Substitution load_fixture(std::string_view name) { return parse_substitution(fixture(name).text); }

}  // namespace substkit
