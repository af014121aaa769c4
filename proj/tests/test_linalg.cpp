#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieder/linalg.hpp"

using namespace lieder;

namespace {

Matrix random_matrix(std::mt19937& rng, int rows, int cols, int density_pct) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> pct(0, 99);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (pct(rng) < density_pct) m.set(r, c, rat(num(rng), den(rng)));
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-6/4") == rat(-3, 2));
  CHECK(parse_rational("7") == rat(7));
  CHECK(to_string(rat(-3, 2)) == "-3/2");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("+2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rref on the 2x2 identity") {
  Matrix m = Matrix::identity(2);
  RrefResult r = rref(m);
  CHECK(r.reduced == m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<int>{0, 1});
}

TEST_CASE("rref of the all-ones 2x2 matrix") {
  Matrix m = Matrix::from_rows({{1, 1}, {1, 1}});
  RrefResult r = rref(m);
  CHECK(r.reduced == Matrix::from_rows({{1, 1}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<int>{0});
}

TEST_CASE("rref of the zero matrix") {
  Matrix m(3, 3);
  RrefResult r = rref(m);
  CHECK(r.reduced == m);
  CHECK(r.rank == 0);
  CHECK(r.pivots.empty());
}

TEST_CASE("kernel of the all-ones 2x2 matrix") {
  Subspace k = kernel_basis(Matrix::from_rows({{1, 1}, {1, 1}}));
  REQUIRE(k.dim() == 1);
  SparseVec expect{{0, rat(1)}, {1, rat(-1)}};
  CHECK(k.basis()[0] == expect);
}

TEST_CASE("kernel of identity and of a zero map") {
  CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);
  Subspace k = kernel_basis(Matrix(2, 3));
  CHECK(k.dim() == 3);
  CHECK(k == Subspace::full(3));
}

TEST_CASE("char_poly on small fixed matrices") {
  // diag(2,3) -> x^2 - 5x + 6
  auto p = char_poly(Matrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(p == std::vector<Rational>{rat(6), rat(-5), rat(1)});
  // [[0,2],[1,0]] -> x^2 - 2
  p = char_poly(Matrix::from_rows({{0, 2}, {1, 0}}));
  CHECK(p == std::vector<Rational>{rat(-2), rat(0), rat(1)});
  // [5] -> x - 5
  p = char_poly(Matrix::from_rows({{5}}));
  CHECK(p == std::vector<Rational>{rat(-5), rat(1)});
  CHECK_THROWS_AS(char_poly(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("rational eigen pairs") {
  SUBCASE("diagonal with repeats") {
    auto pairs = rational_eigen_pairs(
        Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].value == 1);
    CHECK(pairs[0].space.dim() == 2);
    CHECK(pairs[1].value == 2);
    CHECK(pairs[1].space.dim() == 1);
  }
  SUBCASE("irrational spectrum is absent") {
    auto pairs = rational_eigen_pairs(Matrix::from_rows({{0, 2}, {1, 0}}));
    CHECK(pairs.empty());
  }
  SUBCASE("nilpotent block") {
    auto pairs = rational_eigen_pairs(Matrix::from_rows({{0, 1}, {0, 0}}));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].value == 0);
    SparseVec e0{{0, rat(1)}};
    REQUIRE(pairs[0].space.dim() == 1);
    CHECK(pairs[0].space.basis()[0] == e0);
  }
  SUBCASE("fractional eigenvalue") {
    auto pairs = rational_eigen_pairs(Matrix::from_rows({{rat(1, 2)}}));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].value == rat(1, 2));
  }
}

TEST_CASE("subspace intersection") {
  Subspace full2 = Subspace::full(2);
  Subspace x(2, {SparseVec{{0, rat(1)}}});
  Subspace y(2, {SparseVec{{1, rat(1)}}});
  Subspace diag(2, {SparseVec{{0, rat(1)}, {1, rat(1)}}});

  CHECK(intersect(full2, diag) == diag);
  CHECK(intersect(x, y).dim() == 0);
  CHECK(intersect(full2, diag) == intersect(diag, full2));
  CHECK(intersect(Subspace::full(2), diag) == diag);
  CHECK_THROWS_AS(intersect(x, Subspace::full(3)), DimensionMismatch);

  Subspace span2(2, {SparseVec{{0, rat(1)}}, SparseVec{{1, rat(1)}}});
  CHECK(intersect(span2, diag) == diag);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(rng, 1 + trial % 7, 1 + (trial * 3) % 8, 55);
    RrefResult r = rref(m);
    Subspace k = kernel_basis(m);
    CHECK(r.rank + k.dim() == m.cols());
    RrefResult again = rref(r.reduced);
    CHECK(again.reduced == r.reduced);
    CHECK(again.pivots == r.pivots);
    // every kernel vector really is annihilated
    for (const auto& v : k.basis()) CHECK(vec_is_zero(m.apply(v)));
  }
}

TEST_CASE("eigen pairs satisfy m v = lambda v exactly") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 4;
    Matrix m = random_matrix(rng, n, n, 60);
    for (const auto& [lam, space] : rational_eigen_pairs(m)) {
      for (const auto& v : space.basis()) {
        SparseVec lhs = m.apply(v);
        SparseVec rhs = vec_scaled(v, lam);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("char_poly of triangular matrices is the product of diagonal factors") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 5;
    Matrix m(n, n);
    std::vector<Rational> diag;
    for (int i = 0; i < n; ++i) {
      Rational d = rat(num(rng), den(rng));
      diag.push_back(d);
      m.set(i, i, d);
      for (int j = i + 1; j < n; ++j) m.set(i, j, rat(num(rng)));
    }
    // expected = prod (x - d_i), expanded by repeated convolution
    std::vector<Rational> expect{rat(1)};
    for (const Rational& d : diag) {
      std::vector<Rational> next(expect.size() + 1, Rational(0));
      for (std::size_t k = 0; k < expect.size(); ++k) {
        next[k + 1] += expect[k];
        next[k] += -d * expect[k];
      }
      expect = next;
    }
    CHECK(char_poly(m) == expect);
  }
}

TEST_CASE("inverse round-trips and rejects singular input") {
  std::mt19937 rng(515);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 1 + trial % 5;
    // unit lower-triangular times unit upper-triangular is invertible
    Matrix m = Matrix::identity(n);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) m.set(i, j, rat(num(rng), 1 + (i + j) % 3));
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) lower.set(i, j, rat(num(rng)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) upper.set(i, j, rat(num(rng)));
    Matrix a = lower.multiply(upper);
    CHECK(a.multiply(invert(a)) == Matrix::identity(n));
    CHECK(invert(a).multiply(a) == Matrix::identity(n));
  }
  CHECK_THROWS_AS(invert(Matrix::from_rows({{1, 1}, {1, 1}})),
                  DimensionMismatch);
  CHECK_THROWS_AS(invert(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("intersection dimension bound on random subspaces") {
  std::mt19937 rng(8181);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 5;
    Matrix ma = random_matrix(rng, 1 + trial % 3, n, 60);
    Matrix mb = random_matrix(rng, 1 + (trial + 1) % 3, n, 60);
    std::vector<SparseVec> ra, rb;
    for (int r = 0; r < ma.rows(); ++r) ra.push_back(ma.row(r));
    for (int r = 0; r < mb.rows(); ++r) rb.push_back(mb.row(r));
    Subspace a(n, ra), b(n, rb);
    Subspace meet = intersect(a, b);
    CHECK(meet.dim() >= a.dim() + b.dim() - n);
    CHECK(meet.dim() <= std::min(a.dim(), b.dim()));
    for (const auto& v : meet.basis()) {
      CHECK(a.contains(v));
      CHECK(b.contains(v));
    }
  }
}

TEST_CASE("subspace membership and coordinates") {
  Subspace s(3, {SparseVec{{0, rat(1)}, {2, rat(2)}}, SparseVec{{1, rat(1)}}});
  SparseVec in{{0, rat(2)}, {1, rat(-1)}, {2, rat(4)}};
  CHECK(s.contains(in));
  auto coords = s.coordinates(in);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == 2);
  CHECK((*coords)[1] == -1);
  SparseVec out{{2, rat(1)}};
  CHECK(!s.contains(out));
  CHECK(!s.coordinates(out).has_value());
}
