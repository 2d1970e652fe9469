#pragma once

#include <string_view>
#include <vector>

#include "substkit/substitution.hpp"

namespace substkit {

struct Fixture {
  std::string_view name;
  std::string_view description;
  std::string_view text;  // the file contents, byte for byte
};

const std::vector<Fixture>& fixtures();

/// Throws ParseError for an unknown name.
const Fixture& fixture(std::string_view name);

Substitution load_fixture(std::string_view name);

}  // namespace substkit
