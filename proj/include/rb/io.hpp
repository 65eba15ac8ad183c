#pragma once

#include <map>
#include <string>
#include <vector>

namespace rb {

/// %.12g formatting used by every emitted data file.
std::string fmt(double value);

/** Writes a CSV file: '#'-prefixed provenance lines, a '# columns:' line,
 * then comma-separated rows at 12 significant digits. */
void write_csv(const std::string& path, const std::vector<std::string>& header_lines,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

/// Flat "key = value" config file; '#' comments and blank lines ignored.
std::map<std::string, std::string> read_key_values(const std::string& path);

}  // namespace rb
