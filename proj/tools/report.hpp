#pragma once

// Result trees for the command-line front end and their renderings.

#include <string>

#include "json.hpp"
#include "substkit/correlation.hpp"

namespace substkit::cli {

using Report = nlohmann::ordered_json;

/// Indented "key: value" listing of a result tree.
std::string render_text(const Report& report);

std::string render_json(const Report& report);

/// Columns N, re(mean), im(mean), abs(mean).
std::string render_csv(const CorrelationReport& report);

/// log-log polyline of |mean| against N.
std::string render_svg(const CorrelationReport& report, const std::string& title);

Report complex_value(Complex z);

}  // namespace substkit::cli
