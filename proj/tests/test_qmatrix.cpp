#include <doctest.h>

#include "core/qmatrix.hpp"

using namespace psh;

namespace {
QMatrix mat(std::vector<std::vector<int>> rows) {
  std::vector<std::vector<Rat>> q;
  for (auto& r : rows) q.emplace_back(r.begin(), r.end());
  return QMatrix::from_rows(q);
}
}  // namespace

TEST_CASE("rational parse and print round trip") {
  CHECK(rat_str(rat_parse("3/6")) == "1/2");
  CHECK(rat_str(rat_parse("-4/2")) == "-2");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK(rat_str(Rat(1, 3) + Rat(1, 6)) == "1/2");
  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse("x"), Error);
  CHECK_THROWS_AS(rat_parse(""), Error);
}

TEST_CASE("product and identity") {
  auto a = mat({{1, 2}, {3, 4}});
  CHECK(a * QMatrix::identity(2) == a);
  CHECK(QMatrix::identity(2) * a == a);
  auto b = mat({{0, 1}, {1, 0}});
  CHECK(a * b == mat({{2, 1}, {4, 3}}));
  CHECK((a - a).is_zero());
}

TEST_CASE("zero-dimensional shapes compose") {
  QMatrix z03(0, 3), z30(3, 0);
  CHECK((z03 * z30).rows() == 0);
  CHECK((z30 * z03) == QMatrix(3, 3));
  CHECK(QMatrix::identity(0).is_identity());
  CHECK(z03.rank() == 0);
  CHECK(z03.kernel_basis().cols() == 3);  // everything is in the kernel
}

TEST_CASE("rref rank against hand-computed examples") {
  CHECK(mat({{1, 2}, {2, 4}}).rank() == 1);
  CHECK(mat({{1, 2}, {3, 4}}).rank() == 2);
  CHECK(mat({{0, 0}, {0, 0}}).rank() == 0);
  CHECK(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).rank() == 2);
}

TEST_CASE("rank is invariant under random row operations") {
  // Oracle: rank of a product with an invertible matrix is unchanged.
  auto a = mat({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  auto u = mat({{1, 5, 0}, {0, 1, 0}, {7, 0, 1}});  // unitriangular-ish, det 1
  CHECK(u.is_invertible());
  CHECK((u * a).rank() == a.rank());
  CHECK((a * u).rank() == a.rank());
}

TEST_CASE("kernel basis spans the kernel exactly") {
  auto a = mat({{1, 2, 3}, {4, 5, 6}});
  auto k = a.kernel_basis();
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
  // dimension formula
  CHECK(a.rank() + k.cols() == a.cols());
}

TEST_CASE("column space basis is canonical") {
  auto a = mat({{1, 2}, {2, 4}});
  auto b = mat({{2, 4}, {4, 8}});  // same column space, different matrices
  CHECK(a.column_space_basis() == b.column_space_basis());
  CHECK(a.column_space_basis().cols() == 1);
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  auto a = mat({{1, 2}, {3, 4}});
  auto rhs = mat({{5}, {11}});
  auto x = a.solve_must(rhs);
  CHECK(a * x == rhs);
  auto sing = mat({{1, 2}, {2, 4}});
  CHECK(!sing.solve(mat({{1}, {0}})).has_value());
  auto consistent = sing.solve(mat({{1}, {2}}));
  REQUIRE(consistent.has_value());
  CHECK(sing * *consistent == mat({{1}, {2}}));
}

TEST_CASE("inverse multiplies to the identity") {
  auto a = mat({{1, 2}, {3, 5}});
  CHECK((a * a.inverse()).is_identity());
  CHECK((a.inverse() * a).is_identity());
  CHECK_THROWS_AS(mat({{1, 2}, {2, 4}}).inverse(), Error);
}

TEST_CASE("exactness survives scale mixing") {
  // 1/3 + 1/6 style accumulation that floating point would smear.
  QMatrix a(1, 1), b(1, 1);
  a.at(0, 0) = Rat(1, 3);
  b.at(0, 0) = Rat(1, 6);
  QMatrix s = a + b;
  CHECK(s.at(0, 0) == Rat(1, 2));
  QMatrix big(1, 1);
  big.at(0, 0) = rat_parse("1000000000000000000000001/3");
  CHECK(rat_str((big * Rat(3)).at(0, 0)) == "1000000000000000000000001");
}

TEST_CASE("subspace split: projection kills the subspace and fixes the complement") {
  auto basis = mat({{1, 0}, {2, 1}, {0, 3}}).column_space_basis();
  auto split = split_off_subspace(basis, 3);
  CHECK((split.projection * split.basis).is_zero());
  CHECK((split.projection * split.complement).is_identity());
  CHECK(split.basis.cols() + split.complement.cols() == 3);
  // basis and complement together span the ambient space
  CHECK(QMatrix::hstack(split.basis, split.complement).rank() == 3);
}

TEST_CASE("coords_in_basis reconstructs vectors") {
  auto basis = mat({{1, 1}, {0, 1}, {1, 0}});
  auto v = mat({{3}, {1}, {2}});
  auto c = coords_in_basis(basis, v);
  CHECK(basis * c == v);
}

TEST_CASE("block_diag and stacks") {
  auto a = mat({{1}});
  auto b = mat({{2, 0}, {0, 2}});
  auto d = QMatrix::block_diag({a, b});
  CHECK(d.rows() == 3);
  CHECK(d.at(0, 0) == 1);
  CHECK(d.at(1, 1) == 2);
  CHECK(d.at(0, 1) == 0);
  CHECK(QMatrix::vstack(a, mat({{5}})) == mat({{1}, {5}}));
  CHECK(QMatrix::hstack(a, mat({{5}})) == mat({{1, 5}}));
}

TEST_CASE("block system solves one-block commutation equations") {
  // X commuting with diag(1, 2) must be diagonal
  BlockSystem sys;
  int b = sys.add_block(2, 2);
  auto a = mat({{1, 0}, {0, 2}});
  auto i2 = QMatrix::identity(2);
  sys.add_zero_equation({{b, a, i2}, {b, i2 * Rat(-1), a}});
  auto sols = sys.solution_basis();
  REQUIRE(sols.cols() == 2);
  for (int c = 0; c < 2; ++c) {
    auto x = sys.unpack(sols, c, b);
    CHECK(a * x == x * a);
    CHECK(x.at(0, 1) == 0);
    CHECK(x.at(1, 0) == 0);
  }
}

TEST_CASE("block system couples several unknown blocks") {
  // X = 2 Y as 1x1 blocks: solutions form a line
  BlockSystem sys;
  int x = sys.add_block(1, 1);
  int y = sys.add_block(1, 1);
  auto one = QMatrix::identity(1);
  sys.add_zero_equation({{x, one, one}, {y, one * Rat(-2), one}});
  auto sols = sys.solution_basis();
  REQUIRE(sols.cols() == 1);
  auto xv = sys.unpack(sols, 0, x);
  auto yv = sys.unpack(sols, 0, y);
  CHECK(xv.at(0, 0) == yv.at(0, 0) * 2);
  CHECK_FALSE(xv.is_zero());
}

TEST_CASE("block system with no equations returns the full space") {
  BlockSystem sys;
  sys.add_block(2, 3);
  CHECK(sys.solution_basis().cols() == 6);
}
