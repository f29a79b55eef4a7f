#pragma once

#include <string>
#include <string_view>

#include "kgamma/bruinier.hpp"

namespace kgamma {

enum class OutputFormat { Text, Json, Csv };

/// "text" / "json" / "csv"; anything else throws std::invalid_argument.
OutputFormat parse_format(std::string_view s);

/// Stable JSON schema for a report:
///   {d, n, k_exact: "p/q", k_float, bound, is_integer, verdict}
/// k_float round-trips bit-exactly; text and CSV render floats with `digits`
/// significant digits instead.
std::string render_report(const KReport& r, OutputFormat f, int digits = 6);
std::string render_table(const VerdictTable& t, OutputFormat f, int digits = 6);

/// Inverse of render_report(Json). passes_bound is recomputed exactly from
/// k_exact and bound; congruence_ok is not part of the schema.
KReport parse_report_json(const std::string& s);

}  // namespace kgamma
