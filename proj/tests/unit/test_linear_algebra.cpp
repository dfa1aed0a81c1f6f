#include "doctest.h"
#include "oddakh/linear_algebra.hpp"

using namespace oddakh;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size(), c = rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) m.add(i, j++, v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("sparse matrix arithmetic keeps no zeros") {
  Matrix a = from_rows({{1, 2}, {0, -1}});
  Matrix b = from_rows({{-1, -2}, {0, 1}});
  CHECK((a + b).is_zero());
  CHECK((a + b).nonzeros() == 0);
  CHECK(a * Matrix::identity(2) == a);
  CHECK((a * a) == from_rows({{1, 0}, {0, 1}}));
  CHECK(a.transpose().at(1, 0) == 2);
  CHECK_THROWS(a * Matrix(3, 3));
}

TEST_CASE("rank and kernel") {
  const Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  Vector y(3, Rational(0));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) y[r] += m.at(r, c) * ker[0][c];
  for (const auto& v : y) CHECK(v == 0);
  CHECK(ker[0][2] == 1);
  CHECK(independent_columns(m) == std::vector<std::size_t>{0, 1});
  CHECK(rank(Matrix(0, 5)) == 0);
}

TEST_CASE("solving with independent columns") {
  const DenseMatrix a_cols = {{1, 0, 1}, {0, 1, 1}};
  auto sol = solve_full_column_rank(a_cols, {{2, 3, 5}}, 3);
  REQUIRE(sol);
  CHECK((*sol)[0] == Vector{2, 3});
  CHECK_FALSE(solve_full_column_rank(a_cols, {{1, 0, 0}}, 3));
  CHECK_THROWS(solve_full_column_rank({{1, 1}, {2, 2}}, {{1, 1}}, 2));
}

TEST_CASE("invariant factors") {
  CHECK(invariant_factors(from_rows({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
  CHECK(invariant_factors(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == std::vector<Integer>{2, 6, 12});
  CHECK(invariant_factors(from_rows({{1, 1}, {1, -1}})) == std::vector<Integer>{1, 2});
  CHECK(invariant_factors(Matrix(2, 2)).empty());
}

TEST_CASE("GF(2) rank and linear systems") {
  Gf2Matrix m(3, 3);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  m.set(2, 0, true);
  m.set(2, 2, true);
  CHECK(m.rank() == 2);
  CHECK((m * m).get(0, 2));

  const std::vector<Gf2Equation> eqs = {{{0, 1}, true}, {{1, 2}, false}};
  auto sol = solve_gf2(3, eqs, [](std::size_t) { return false; });
  REQUIRE(sol);
  CHECK(((*sol)[0] ^ (*sol)[1]) == true);
  CHECK(((*sol)[1] ^ (*sol)[2]) == false);
  CHECK_FALSE(solve_gf2(2, {{{0, 1}, true}, {{0, 1}, false}}, [](std::size_t) { return false; }));

  auto other = solve_gf2(3, eqs, [](std::size_t) { return true; });
  REQUIRE(other);
  CHECK(((*other)[0] ^ (*other)[1]) == true);
  CHECK(*other != *sol);
}
