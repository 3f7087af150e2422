#include "doctest.h"

#include <algorithm>

#include "cmc/ncalg.hpp"

using namespace cmc;

namespace {
NCElement w(const std::string& s, long c = 1) { return NCElement::word(parse_word(s), 1, Scalar(c, 1)); }
}  // namespace

TEST_CASE("reverse involution") {
  CHECK(reverse_involution(w("xy")) == w("yx"));
  CHECK(reverse_involution(w("xxy")) == w("yxx"));
  CHECK(reverse_involution(w("xy") + w("yxx", 2)) == w("yx") + w("xxy", 2));
  NCElement p = w("xyy", 3) - w("y") + w("", 5);
  CHECK(reverse_involution(reverse_involution(p)) == p);
  CHECK((w("x") * w("y") - w("y") * w("x")).degree() == 2);
}

TEST_CASE("evaluation on vectors") {
  LetterMatrices M{{"x", Matrix::from_ints({{0, 0}, {0, 1}})}, {"y", Matrix::from_ints({{0, 1}, {-1, 0}})}};
  Matrix v = Matrix::from_ints({{1}, {-1}});
  CHECK(evaluate_on_vector(Word{}, M, v) == v);
  CHECK(evaluate_on_vector(parse_word("xy"), M, v) == Matrix::from_ints({{-1}, {0}}));
  LetterMatrices one{{"x", Matrix::from_ints({{0}})}};
  CHECK(evaluate_on_vector(parse_word("x"), one, Matrix::from_ints({{1}})) == Matrix::from_ints({{0}}));
  CHECK_THROWS_AS(evaluate_on_vector(parse_word("x"), one, v), ShapeMismatch);

  // Right-action associativity over all pairs of words of total length <= 4.
  auto words = enumerate_words({"x", "y"}, 4);
  for (const auto& p : words)
    for (const auto& q : words) {
      if (p.size() + q.size() > 4) continue;
      CHECK(evaluate_on_vector(concat(p, q), M, v) ==
            evaluate_on_vector(q, M, evaluate_on_vector(p, M, v)));
    }
}

TEST_CASE("enumeration") {
  auto w2 = enumerate_words({"x", "y"}, 2);
  REQUIRE(w2.size() == 7);
  CHECK(word_to_string(w2[0]).empty());
  CHECK(word_to_string(w2[3]) == "xx");
  CHECK(word_to_string(w2[4]) == "xy");
  CHECK(word_to_string(w2[6]) == "yy");
  for (int d = 0; d <= 8; ++d) CHECK(enumerate_words({"x", "y"}, d).size() == (1u << (d + 1)) - 1);
  CHECK(enumerate_words({"x", "y"}, 0).size() == 1);

  Quiver q = framed_double_cyclic(2);
  auto paths = enumerate_paths(q, 1, 2, 1);
  std::vector<std::string> names;
  for (const auto& p : paths) names.push_back(word_to_string(p));
  auto has = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
  CHECK(has(""));
  CHECK(has("X0Y0"));
  CHECK(has("Y1X1"));
  CHECK(has("wv"));
  CHECK(has("X0X1"));
  CHECK(has("Y1Y0"));
  CHECK(names.size() == 6);
  CHECK(parse_word("X10Y1wv") == Word{"X10", "Y1", "w", "v"});
  CHECK(path_end(q, 1, parse_word("X0Y0")) == 1);
  CHECK_FALSE(path_end(q, 1, parse_word("Y0")));
}
