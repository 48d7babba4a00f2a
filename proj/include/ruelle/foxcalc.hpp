#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ruelle/laurent.hpp"
#include "ruelle/presentations.hpp"

namespace ruelle {

/// Finite C-linear combination of reduced words: an element of C[F_n].
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(const Word& w, cplx c = 1.0);  // NOLINT

  static GroupRingElement one() { return GroupRingElement(Word{}); }

  const std::map<Word, cplx>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  cplx coeff(const Word& w) const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement& operator*=(cplx c);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(GroupRingElement a, cplx c) { return a *= c; }

  double max_abs_coeff() const noexcept;

 private:
  void add_term(const Word& w, cplx c);
  std::map<Word, cplx> terms_;
};

bool approx_equal(const GroupRingElement& a, const GroupRingElement& b, double tol);

/// Fox derivative d(word)/d(x_gen) in C[F_n]. Throws IndexOutOfRange if `gen`
/// or any letter of `word` is outside [0, num_generators).
GroupRingElement fox_derivative(const Word& word, int gen, int num_generators);

/// A unitary representation of the group, either as one r x r matrix per
/// generator or as a character xi of the abelianization (rank 1, every
/// generator maps to xi).
class TwistData {
 public:
  static TwistData character(cplx xi);
  static TwistData matrices(std::vector<CMatrix> images);
  static TwistData trivial(int rank = 1);

  int rank() const noexcept { return rank_; }
  bool is_character() const noexcept { return character_.has_value(); }
  std::optional<cplx> character_value() const { return character_; }
  /// Number of generator images, or nullopt for a character.
  std::optional<int> num_images() const;

  /// Image of generator `gen` raised to `exp` (+1 or -1); inverses use the
  /// conjugate transpose.
  CMatrix image(int gen, int exp = 1) const;
  CMatrix evaluate(const Word& w) const;

  /// Throws CuspidalityViolation for a character equal to 1.
  void require_cuspidal_character() const;
  /// Throws RankMismatch if the images do not cover `num_generators`.
  void check_generators(int num_generators) const;
  /// Throws NotRepresentation unless every relator maps to the identity.
  void check_representation(const Presentation& p, double tol = 1e-9) const;

 private:
  int rank_ = 1;
  std::optional<cplx> character_;
  std::vector<CMatrix> images_;
};

/// File format:
///   rank: r
///   char: re im            (rank 1; a single line applies to every generator)
/// or, per generator, r lines of 2r reals (row-major re/im pairs).
TwistData parse_twist(std::string_view text);
TwistData load_twist(const std::string& path);

/// The specialization C[F_n] -> M_r(C[t, t^-1]) sending a word w to
/// rho(w) t^{abelianize(w)}.
LaurentMatrix phi(const GroupRingElement& e, const TwistData& rho,
                  std::optional<int> expected_rank = std::nullopt);

struct BoundaryMatrices {
  LaurentMatrix d2;  // (n-1) r x n r, blocks Phi(dr_j / dx_i)
  LaurentMatrix d1;  // n r x r, blocks Phi(x_i - 1)
};

/// Boundary maps of the twisted chain complex of the presentation 2-complex,
/// with chains as row vectors acted on from the right.
BoundaryMatrices boundary_matrices(const Presentation& p, const TwistData& rho);

}  // namespace ruelle
