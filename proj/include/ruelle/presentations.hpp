#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ruelle {

/// One letter of a free-group word: generator index and exponent +1 / -1.
struct Letter {
  int gen = 0;
  int exp = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group on the generators of a
/// presentation. Reduction happens on construction, so two Words compare
/// equal exactly when they are the same element of the free group.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(int gen, int exp = 1) { return Word({Letter{gen, exp}}); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  /// Largest generator index used, or -1 for the empty word.
  int max_generator() const noexcept;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
std::vector<Letter> reduce(const std::vector<Letter>& letters);

Word multiply(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

/// Total exponent sum of w, i.e. the power of t under the Hurewicz map when
/// every generator abelianizes to t.
int exponent_sum(const Word& w) noexcept;

struct Presentation {
  int num_generators = 0;
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  bool wirtinger = false;

  /// Throws Error(WirtingerViolation) unless relator count is n - 1 and every
  /// relator has exponent sum zero.
  void validate_wirtinger() const;
  bool is_wirtinger_valid() const noexcept;
};

struct ParseOptions {
  /// Apply the Wirtinger checks even when the file lacks "mode: wirtinger".
  bool require_wirtinger = false;
};

/// Parses the line format
///   gens: x y
///   mode: wirtinger      (optional)
///   rel: x y X Y
/// Tokens are whitespace separated; an uppercase token is the inverse of the
/// generator of the same lowercase name. When every generator name is a single
/// letter a relator token may also be a run of letters ("xyXY").
Presentation parse_presentation(std::string_view text, ParseOptions options = {});
Presentation load_presentation(const std::string& path, ParseOptions options = {});
std::string serialize(const Presentation& p);

/// Power of t that w maps to under the Hurewicz map. Requires a Wirtinger-valid
/// presentation.
int abelianize(const Presentation& p, const Word& w);

std::string to_string(const Presentation& p, const Word& w);

}  // namespace ruelle
