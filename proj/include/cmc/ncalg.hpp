#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmc/matrix.hpp"
#include "cmc/quiver.hpp"

namespace cmc {

/// A word is a sequence of letter names: "x"/"y" for the free algebra, arrow
/// names for path algebras.
using Word = std::vector<std::string>;

/// Length first, then lexicographic on letters.
struct LengthLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string word_to_string(const Word& w);
/// Splits at uppercase/lowercase letters, keeping trailing digits with them
/// ("X0Y1wv" -> X0, Y1, w, v).
Word parse_word(const std::string& s);
Word concat(const Word& a, const Word& b);
Word reversed(const Word& w);

class NCElement {
 public:
  using Terms = std::map<Word, Scalar, LengthLex>;

  explicit NCElement(int m = 1) : m_(m) {}
  static NCElement word(const Word& w, int m, const Scalar& c);
  static NCElement word(const Word& w, int m) { return word(w, m, Scalar::one(m)); }
  static NCElement constant(const Scalar& c);

  int conductor() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero

  void add_term(const Word& w, const Scalar& c);

  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  NCElement& operator*=(const Scalar& s);
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(NCElement a, const Scalar& s) { return a *= s; }
  friend NCElement operator*(const Scalar& s, NCElement a) { return a *= s; }
  friend NCElement operator*(const NCElement& a, const NCElement& b);
  friend bool operator==(const NCElement& a, const NCElement& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int m_;
  Terms terms_;
};

/// a -> a^tau on the free algebra: reverses every word.
NCElement reverse_involution(const NCElement& p);

/// Matrices indexed by letter name.
using LetterMatrices = std::map<std::string, Matrix>;

/// u_0 = start, u_k = M(letter_k) u_{k-1}.
Matrix evaluate_on_vector(const Word& w, const LetterMatrices& mats, const Matrix& start);
Matrix evaluate_on_vector(const NCElement& p, const LetterMatrices& mats, const Matrix& start);
/// The operator of w acting on column vectors: M(last) ... M(first).
Matrix word_operator(const Word& w, const LetterMatrices& mats, std::size_t dim, int m);
Matrix element_operator(const NCElement& p, const LetterMatrices& mats, std::size_t dim);

/// All words over `alphabet` of length <= d, length-lex order (alphabet order
/// within a length).
std::vector<Word> enumerate_words(const std::vector<std::string>& alphabet, int d);

/// Composable arrow words starting at vertex `from` (action orientation), of
/// length <= max_len, optionally ending at `to`. Length-lex order.
std::vector<Word> enumerate_paths(const Quiver& q, int from, int max_len,
                                  std::optional<int> to = std::nullopt);

/// End vertex of a composable path started at `from`, or nullopt.
std::optional<int> path_end(const Quiver& q, int from, const Word& w);

/// Name of the trivial path at a vertex: "e" + label ("e0", "einf").
std::string idempotent_name(const Quiver& q, int v);

/// Path-algebra normalization: words may mix arrows and idempotent letters;
/// non-composable words vanish, idempotents next to arrows are absorbed and a
/// word of idempotents collapses to one.
NCElement path_reduce(const Quiver& q, const NCElement& p);

}  // namespace cmc
