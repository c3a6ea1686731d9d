#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace scimap::io {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);
long long parse_integer(std::string_view text);

std::string csv_field(std::string_view text);
/// Splits one CSV line, honoring double-quoted fields.
std::vector<std::string> parse_csv_line(std::string_view line);

std::ofstream open_output(const std::filesystem::path& path);
std::ifstream open_input(const std::filesystem::path& path);

}  // namespace scimap::io
