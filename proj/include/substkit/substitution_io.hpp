#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "substkit/substitution.hpp"

namespace substkit {

/// Parses the JSON definition format. Structural problems are ParseError;
/// the semantic checks of validate() are not applied here.
SubstitutionDef parse_definition(std::string_view text);

/// parse_definition followed by validation.
Substitution parse_substitution(std::string_view text);

Substitution load_substitution(const std::filesystem::path& path);

/// Canonical JSON text (two-space indent, trailing newline). Feeding the
/// result back through parse_substitution returns an equal substitution.
std::string emit_definition(const Substitution& sub);

void save_substitution(const Substitution& sub, const std::filesystem::path& path);

}  // namespace substkit
