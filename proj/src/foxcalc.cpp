#include "ruelle/foxcalc.hpp"

#include <cmath>

#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"

namespace ruelle {

GroupRingElement::GroupRingElement(const Word& w, cplx c) { add_term(w, c); }

void GroupRingElement::add_term(const Word& w, cplx c) {
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) <= kTrim) terms_.erase(it);
}

cplx GroupRingElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? cplx{} : it->second;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(cplx c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = std::abs(it->second) <= kTrim ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

double GroupRingElement::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

bool approx_equal(const GroupRingElement& a, const GroupRingElement& b, double tol) {
  return (a - b).max_abs_coeff() <= tol;
}

GroupRingElement fox_derivative(const Word& word, int gen, int num_generators) {
  if (gen < 0 || gen >= num_generators)
    throw Error(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(gen) +
                                                " outside [0, " + std::to_string(num_generators) + ")");
  if (word.max_generator() >= num_generators)
    throw Error(ErrorCode::IndexOutOfRange, "word uses a generator outside the presentation");

  // d(uv) = du + u dv, expanded letter by letter. The word is reduced, so
  // every prefix is already a reduced word.
  GroupRingElement out;
  std::vector<Letter> prefix;
  for (const auto& l : word.letters()) {
    if (l.gen == gen) {
      if (l.exp > 0) {
        out += GroupRingElement(Word(prefix));
      } else {
        auto with = prefix;
        with.push_back(l);
        out -= GroupRingElement(Word(std::move(with)));
      }
    }
    prefix.push_back(l);
  }
  return out;
}

namespace {

double unitarity_defect(const CMatrix& u) {
  CMatrix d = u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

}  // namespace

TwistData TwistData::character(cplx xi) {
  if (std::abs(std::abs(xi) - 1.0) > 1e-12)
    throw Error(ErrorCode::NotUnitary, "character value must have modulus 1, got |xi| = " +
                                           io::format_double(std::abs(xi)));
  TwistData t;
  t.rank_ = 1;
  t.character_ = xi;
  return t;
}

TwistData TwistData::matrices(std::vector<CMatrix> images) {
  if (images.empty()) throw Error(ErrorCode::RankMismatch, "twist has no generator images");
  const auto r = images.front().rows();
  if (r == 0) throw Error(ErrorCode::RankMismatch, "twist rank must be positive");
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& u = images[i];
    if (u.rows() != r || u.cols() != r)
      throw Error(ErrorCode::RankMismatch, "generator image " + std::to_string(i) + " is not " +
                                               std::to_string(r) + "x" + std::to_string(r));
    if (unitarity_defect(u) > 1e-9)
      throw Error(ErrorCode::NotUnitary, "generator image " + std::to_string(i) + " is not unitary");
  }
  TwistData t;
  t.rank_ = static_cast<int>(r);
  t.images_ = std::move(images);
  return t;
}

TwistData TwistData::trivial(int rank) {
  if (rank == 1) return character(1.0);
  TwistData t;
  t.rank_ = rank;
  t.character_.reset();
  return t;
}

std::optional<int> TwistData::num_images() const {
  if (character_ || images_.empty()) return std::nullopt;
  return static_cast<int>(images_.size());
}

CMatrix TwistData::image(int gen, int exp) const {
  if (character_) {
    CMatrix m(1, 1);
    m(0, 0) = exp > 0 ? *character_ : std::conj(*character_);
    return m;
  }
  if (images_.empty()) return CMatrix::Identity(rank_, rank_);  // trivial of rank > 1
  if (gen < 0 || gen >= static_cast<int>(images_.size()))
    throw Error(ErrorCode::RankMismatch, "twist has no image for generator " + std::to_string(gen));
  return exp > 0 ? images_[gen] : CMatrix(images_[gen].adjoint());
}

CMatrix TwistData::evaluate(const Word& w) const {
  if (character_) {
    CMatrix m(1, 1);
    m(0, 0) = std::pow(*character_, exponent_sum(w));
    return m;
  }
  CMatrix acc = CMatrix::Identity(rank_, rank_);
  for (const auto& l : w.letters()) acc = acc * image(l.gen, l.exp);
  return acc;
}

void TwistData::require_cuspidal_character() const {
  if (character_ && std::abs(*character_ - 1.0) <= 1e-12)
    throw Error(ErrorCode::CuspidalityViolation, "character xi = 1 is not cuspidal");
}

void TwistData::check_generators(int num_generators) const {
  if (auto n = num_images(); n && *n != num_generators)
    throw Error(ErrorCode::RankMismatch, "twist gives " + std::to_string(*n) +
                                             " generator images but the presentation has " +
                                             std::to_string(num_generators) + " generators");
}

void TwistData::check_representation(const Presentation& p, double tol) const {
  check_generators(p.num_generators);
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    CMatrix d = evaluate(p.relators[j]) - CMatrix::Identity(rank_, rank_);
    if (d.cwiseAbs().maxCoeff() > tol)
      throw Error(ErrorCode::NotRepresentation,
                  "relator " + std::to_string(j + 1) + " does not map to the identity");
  }
}

TwistData parse_twist(std::string_view text) {
  auto lines = io::significant_lines(text);
  std::string rest;
  if (lines.empty() || !io::strip_key(lines.front().text, "rank", rest))
    throw Error(ErrorCode::Parse, "twist file must start with 'rank: r'");
  long r = io::parse_int(rest, lines.front().number);
  if (r <= 0) throw Error(ErrorCode::RankMismatch, "twist rank must be positive");

  std::vector<cplx> chars;
  std::vector<CMatrix> images;
  std::size_t i = 1;
  while (i < lines.size()) {
    if (io::strip_key(lines[i].text, "char", rest)) {
      if (r != 1) throw Error(ErrorCode::RankMismatch, "'char:' lines require rank 1");
      auto toks = io::split_whitespace(rest);
      if (toks.size() != 2)
        throw Error(ErrorCode::Parse, "'char:' needs two reals (line " +
                                          std::to_string(lines[i].number) + ")");
      chars.emplace_back(io::parse_double(toks[0], lines[i].number),
                         io::parse_double(toks[1], lines[i].number));
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(r) > lines.size())
      throw Error(ErrorCode::Parse, "incomplete matrix block at line " + std::to_string(lines[i].number));
    CMatrix u(r, r);
    for (long row = 0; row < r; ++row, ++i) {
      auto toks = io::split_whitespace(lines[i].text);
      if (static_cast<long>(toks.size()) != 2 * r)
        throw Error(ErrorCode::Parse, "expected " + std::to_string(2 * r) + " reals on line " +
                                          std::to_string(lines[i].number));
      for (long col = 0; col < r; ++col)
        u(row, col) = cplx(io::parse_double(toks[2 * col], lines[i].number),
                           io::parse_double(toks[2 * col + 1], lines[i].number));
    }
    images.push_back(std::move(u));
  }
  if (!chars.empty() && !images.empty())
    throw Error(ErrorCode::Parse, "twist file mixes 'char:' lines and matrix blocks");
  if (chars.size() == 1) return TwistData::character(chars.front());
  if (!chars.empty()) {
    for (const auto& c : chars) {
      CMatrix m(1, 1);
      m(0, 0) = c;
      images.push_back(m);
    }
  }
  if (images.empty()) throw Error(ErrorCode::Parse, "twist file has no generator images");
  return TwistData::matrices(std::move(images));
}

TwistData load_twist(const std::string& path) { return parse_twist(io::read_file(path)); }

LaurentMatrix phi(const GroupRingElement& e, const TwistData& rho, std::optional<int> expected_rank) {
  const int r = rho.rank();
  if (expected_rank && *expected_rank != r)
    throw Error(ErrorCode::RankMismatch, "twist has rank " + std::to_string(r) + ", expected " +
                                             std::to_string(*expected_rank));
  LaurentMatrix out(r, r);
  for (const auto& [w, c] : e.terms()) {
    CMatrix m = rho.evaluate(w) * c;
    int power = exponent_sum(w);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out(i, j) += LaurentPoly::monomial(m(i, j), power);
  }
  return out;
}

BoundaryMatrices boundary_matrices(const Presentation& p, const TwistData& rho) {
  rho.check_generators(p.num_generators);
  const int n = p.num_generators;
  const int m = static_cast<int>(p.relators.size());
  const int r = rho.rank();

  BoundaryMatrices b{LaurentMatrix(m * r, n * r), LaurentMatrix(n * r, r)};
  for (int i = 0; i < n; ++i) {
    auto xi_minus_one = GroupRingElement(Word::generator(i)) - GroupRingElement::one();
    b.d1.set_block(i * r, 0, phi(xi_minus_one, rho, r));
  }
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      b.d2.set_block(j * r, i * r, phi(fox_derivative(p.relators[j], i, n), rho, r));
  return b;
}

}  // namespace ruelle
