#include "doctest.h"

#include "cmc/matrix.hpp"

using namespace cmc;

TEST_CASE("rank, kernel, solve") {
  Matrix a = Matrix::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  auto ker = kernel_basis(a);
  REQUIRE(ker.size() == 1);
  CHECK((a * ker[0]).is_zero());
  Matrix b = Matrix::from_ints({{6}, {12}, {2}});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_FALSE(solve(a, Matrix::from_ints({{1}, {0}, {0}})));
  CHECK(image_basis(a).cols() == 2);
}

TEST_CASE("inverse and shapes") {
  Matrix a = Matrix::from_ints({{2, 1}, {1, 1}});
  CHECK(a * inverse(a) == Matrix::identity(2, 1));
  CHECK_THROWS_AS(inverse(Matrix::from_ints({{1, 1}, {1, 1}})), SingularMatrix);
  CHECK_THROWS_AS(a * Matrix(3, 1, 1), ShapeMismatch);
  Matrix e(0, 0, 1);
  CHECK(rank(e) == 0);
  CHECK(kernel_basis(Matrix(0, 2, 1)).size() == 2);
}

TEST_CASE("intertwiners") {
  Matrix x = Matrix::from_ints({{0, 1}, {0, 0}});
  auto s = intertwiner_space({x}, {x});
  CHECK(s.size() == 2);
  Matrix y = Matrix::from_ints({{0, 0}, {1, 0}});
  // x and y are conjugate by the swap.
  auto t = intertwiner_space({x}, {y});
  CHECK(t.size() == 2);
}

TEST_CASE("cyclotomic entries") {
  Scalar z = Scalar::root_of_unity(3, 1);
  Matrix a = Matrix::diagonal({z, z * z}, 3);
  CHECK(a * inverse(a) == Matrix::identity(2, 3));
  CHECK(a.trace() == Scalar(-1, 3));
}
