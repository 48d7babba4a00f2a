#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace ruelle::io {

/// Reads a whole file; throws Error(Parse) when it cannot be opened.
std::string read_file(const std::string& path);

/// Splits on newlines, strips "#" comments and surrounding whitespace, and
/// drops blank lines. Each entry keeps its 1-based source line number.
struct Line {
  int number;
  std::string text;
};
std::vector<Line> significant_lines(std::string_view text);

std::vector<std::string> split_whitespace(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string trim(std::string_view s);

/// If `line` starts with "<key>:" returns true and stores the remainder.
bool strip_key(std::string_view line, std::string_view key, std::string& rest);

double parse_double(std::string_view token, int line_number = 0);
long parse_int(std::string_view token, int line_number = 0);
/// "re,im" or a bare real.
std::complex<double> parse_complex_pair(std::string_view token);

/// Twelve significant digits, fixed across platforms.
std::string format_double(double x);
std::string format_complex(std::complex<double> z);

}  // namespace ruelle::io
