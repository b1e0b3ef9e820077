#pragma once

#include <string>
#include <string_view>

#include "mspin/orbits.hpp"

namespace mspin {

enum class Format { Json, Csv };

/// Format from "json" or "csv"; ParseError otherwise.
Format parse_format(std::string_view name);

/// {signature:{g,l_h,l_p}, m, total, orbits:[{type:{g,delta,n_h,n_p}, size,
/// representative}], checks:{partition, soundness, completeness}}
std::string census_to_json(const CensusReport& report);

/// Header g,l_h,l_p,m,delta,n_h0..,n_p0..,size,representative and one row
/// per orbit; representatives are ';'-separated.
std::string census_to_csv(const CensusReport& report);

std::string emit_report(const CensusReport& report, Format format);

/// ParseError on malformed input.
CensusReport census_from_json(const std::string& text);

/// The CSV carries no flags or total; both are recomputed from the rows.
/// Needs at least one row.
CensusReport census_from_csv(const std::string& text);

}  // namespace mspin
