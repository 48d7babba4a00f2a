#include "ruelle/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"

namespace ruelle {

std::vector<Letter> reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(reduce(letters)) {}

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back({it->gen, -it->exp});
  return Word(std::move(inv));
}

int Word::max_generator() const noexcept {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> cat = u.letters();
  cat.insert(cat.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(cat));
}

int exponent_sum(const Word& w) noexcept {
  int s = 0;
  for (const auto& l : w.letters()) s += l.exp;
  return s;
}

bool Presentation::is_wirtinger_valid() const noexcept {
  if (static_cast<int>(relators.size()) != num_generators - 1) return false;
  return std::all_of(relators.begin(), relators.end(),
                     [](const Word& r) { return exponent_sum(r) == 0; });
}

void Presentation::validate_wirtinger() const {
  if (static_cast<int>(relators.size()) != num_generators - 1)
    throw Error(ErrorCode::WirtingerViolation,
                "expected " + std::to_string(num_generators - 1) + " relators for " +
                    std::to_string(num_generators) + " generators, found " +
                    std::to_string(relators.size()));
  for (std::size_t j = 0; j < relators.size(); ++j) {
    int s = exponent_sum(relators[j]);
    if (s != 0)
      throw Error(ErrorCode::WirtingerViolation, "relator " + std::to_string(j + 1) +
                                                     " has exponent sum " + std::to_string(s));
  }
}

int abelianize(const Presentation&, const Word& w) { return exponent_sum(w); }

namespace {

std::string to_upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool has_upper(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isupper(c); });
}

class TokenTable {
 public:
  explicit TokenTable(const std::vector<std::string>& names) {
    single_letters_ = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& name = names[i];
      if (has_upper(name))
        throw Error(ErrorCode::Parse, "generator name '" + name + "' must be lowercase");
      if (to_upper(name) == name)
        throw Error(ErrorCode::Parse, "generator name '" + name + "' has no inverse spelling");
      if (!lookup_.emplace(name, Letter{static_cast<int>(i), 1}).second)
        throw Error(ErrorCode::Parse, "duplicate generator name '" + name + "'");
      lookup_.emplace(to_upper(name), Letter{static_cast<int>(i), -1});
      if (name.size() != 1) single_letters_ = false;
    }
  }

  std::optional<Letter> find(const std::string& token) const {
    auto it = lookup_.find(token);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  void append(const std::string& token, std::vector<Letter>& out, int line) const {
    if (auto l = find(token)) {
      out.push_back(*l);
      return;
    }
    if (single_letters_ && token.size() > 1) {
      for (char c : token) {
        auto l = find(std::string(1, c));
        if (!l) throw unknown(std::string(1, c), line);
        out.push_back(*l);
      }
      return;
    }
    throw unknown(token, line);
  }

 private:
  static Error unknown(const std::string& token, int line) {
    return Error(ErrorCode::UnknownGenerator,
                 "unknown generator token '" + token + "' (line " + std::to_string(line) + ")");
  }

  std::map<std::string, Letter> lookup_;
  bool single_letters_ = true;
};

}  // namespace

Presentation parse_presentation(std::string_view text, ParseOptions options) {
  auto lines = io::significant_lines(text);
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty presentation");

  Presentation p;
  std::string rest;
  if (!io::strip_key(lines.front().text, "gens", rest))
    throw Error(ErrorCode::Parse, "first line must be 'gens: ...'");
  p.generator_names = io::split_whitespace(rest);
  if (p.generator_names.empty()) throw Error(ErrorCode::Parse, "no generators declared");
  p.num_generators = static_cast<int>(p.generator_names.size());
  TokenTable table(p.generator_names);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (io::strip_key(line.text, "mode", rest)) {
      if (rest != "wirtinger")
        throw Error(ErrorCode::Parse, "unknown mode '" + rest + "' (line " +
                                          std::to_string(line.number) + ")");
      p.wirtinger = true;
    } else if (io::strip_key(line.text, "rel", rest)) {
      std::vector<Letter> letters;
      for (const auto& tok : io::split_whitespace(rest)) table.append(tok, letters, line.number);
      Word w(std::move(letters));
      if (w.empty())
        throw Error(ErrorCode::EmptyRelator,
                    "relator on line " + std::to_string(line.number) + " is empty after reduction");
      p.relators.push_back(std::move(w));
    } else {
      throw Error(ErrorCode::Parse, "unrecognized line " + std::to_string(line.number) + ": '" +
                                        line.text + "'");
    }
  }
  if (options.require_wirtinger) p.wirtinger = true;
  if (p.wirtinger) p.validate_wirtinger();
  return p;
}

Presentation load_presentation(const std::string& path, ParseOptions options) {
  return parse_presentation(io::read_file(path), options);
}

std::string to_string(const Presentation& p, const Word& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    const auto& name = p.generator_names.at(static_cast<std::size_t>(l.gen));
    out += l.exp > 0 ? name : to_upper(name);
  }
  return out;
}

std::string serialize(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& n : p.generator_names) out += " " + n;
  out += "\n";
  if (p.wirtinger) out += "mode: wirtinger\n";
  for (const auto& r : p.relators) out += "rel: " + to_string(p, r) + "\n";
  return out;
}

}  // namespace ruelle
