// Deterministic text serialization: signal files (one "re,im" sample per
// line), CSV fragments, and JSON conversions for the report types.
#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "qosc/contraction.hpp"
#include "qosc/report.hpp"
#include "qosc/transform.hpp"

namespace qosc {

/// Shortest exact decimal form of a double (round-trips bit-exactly).
std::string format_double(double x);

std::string format_complex_csv(std::complex<double> z);  // "re,im"

/// Parses one sample per line, "re" or "re,im"; '#' comments and blank lines
/// are skipped. Throws std::runtime_error when the count differs from dim.
Signal read_signal(std::istream& in, Irrep ir);
Signal read_signal_file(const std::string& path, Irrep ir);

void write_signal(std::ostream& out, const Signal& s);

nlohmann::json to_json(const Report& rep);
nlohmann::json to_json(const ContractionReport& rep);

}  // namespace qosc
