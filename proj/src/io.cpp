#include "ruelle/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ruelle/errors.hpp"

namespace ruelle::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

bool strip_key(std::string_view line, std::string_view key, std::string& rest) {
  if (line.size() <= key.size() || line.substr(0, key.size()) != key || line[key.size()] != ':')
    return false;
  rest = trim(line.substr(key.size() + 1));
  return true;
}

namespace {
std::string where(int line_number) {
  return line_number > 0 ? " (line " + std::to_string(line_number) + ")" : "";
}
}  // namespace

double parse_double(std::string_view token, int line_number) {
  std::string s(token);
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
    throw Error(ErrorCode::Parse, "expected a real number, got '" + s + "'" + where(line_number));
  return v;
}

long parse_int(std::string_view token, int line_number) {
  std::string s(token);
  char* end = nullptr;
  errno = 0;
  long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
    throw Error(ErrorCode::Parse, "expected an integer, got '" + s + "'" + where(line_number));
  return v;
}

std::complex<double> parse_complex_pair(std::string_view token) {
  auto parts = split(token, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() != 2)
    throw Error(ErrorCode::Parse, "expected 're,im', got '" + std::string(token) + "'");
  return {parse_double(parts[0]), parse_double(parts[1])};
}

std::string format_double(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  return format_double(z.real()) + "," + format_double(z.imag());
}

}  // namespace ruelle::io
