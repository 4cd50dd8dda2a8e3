#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tqclear {

/// Filesystem failure carrying the path it happened on.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Number formatted with 12 significant digits; the one format all CSV and
/// report output goes through, so reruns are byte-identical.
std::string format_g12(double v);

/// format_g12 followed by strtod: the value a reader of our CSV output will
/// see. Aggregates are computed on these so that re-parsing a rows file and
/// re-aggregating reproduces the aggregate file exactly.
double roundtrip_g12(double v);

/// One CSV line (no quoting; fields must not contain commas or newlines).
std::string csv_line(const std::vector<std::string>& fields);

/// Splits one CSV line produced by csv_line.
std::vector<std::string> csv_split(const std::string& line);

/// Writes content to path, throwing std::runtime_error with the path on
/// failure.
void write_text_file(const std::string& path, const std::string& content);

/// Reads a whole file, throwing std::runtime_error with the path on failure.
std::string read_text_file(const std::string& path);

}  // namespace tqclear
