#include <doctest.h>

#include <random>

#include "groupcodes/fp_matrix.hpp"
#include "oracle.hpp"

using namespace groupcodes;

namespace {

FpMatrix random_matrix(Scalar p, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

// Rank as log_p of the number of distinct vectors in the row space.
std::size_t brute_rank(const FpMatrix& m) {
  const std::size_t count = oracle::as_set(oracle::span_all(m)).size();
  std::size_t r = 0;
  for (std::size_t c = 1; c < count; c *= m.p()) ++r;
  return r;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(3, 5) == 1);
  for (Scalar x = 1; x < 7; ++x) CHECK(f.mul(x, f.inv(x)) == 1);
  CHECK(f.pow(3, 6) == 1);
  bool thrown = false;
  try {
    f.inv(0);
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::kDivisionByZero;
  }
  CHECK(thrown);
}

TEST_CASE("rank agrees with counting the row space") {
  std::mt19937_64 rng(11);
  for (Scalar p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const FpMatrix m = random_matrix(p, 1 + trial % 4, 1 + trial % 5, rng);
      CHECK(rank(m) == brute_rank(m));
      CHECK(row_space(m).rows() == rank(m));
      CHECK(oracle::words(row_space(m)) == oracle::words(m));
    }
  }
}

TEST_CASE("null spaces solve their defining equations") {
  std::mt19937_64 rng(12);
  for (Scalar p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const FpMatrix m = random_matrix(p, 2 + trial % 4, 3 + trial % 3, rng);
      const FpMatrix left = left_null_space(m);
      CHECK(left.rows() + rank(m) == m.rows());
      CHECK((left * m).is_zero());
      const FpMatrix right = right_null_space(m);
      CHECK(right.rows() + rank(m) == m.cols());
      CHECK((m * right.transpose()).is_zero());
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(13);
  int invertible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar p = trial % 2 ? 3 : 5;
    const FpMatrix m = random_matrix(p, 4, 4, rng);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 4));
    if (inv) {
      ++invertible;
      CHECK(*inv * m == FpMatrix::identity(p, 4));
      CHECK(m * *inv == FpMatrix::identity(p, 4));
    }
    const FpVector x{1, 0, 2, 1};
    const FpVector b = vec_mat(x, m);
    const auto y = solve_left(m, b);
    REQUIRE(y.has_value());
    CHECK(vec_mat(*y, m) == b);
  }
  CHECK(invertible > 10);

  FpMatrix singular(2, 2, 2);
  singular(0, 0) = 1;
  CHECK_FALSE(inverse(singular).has_value());
  CHECK_FALSE(solve_left(singular, FpVector{0, 1}).has_value());

  const auto empty = inverse(FpMatrix(2, 0, 0));
  REQUIRE(empty.has_value());
  CHECK(empty->rows() == 0);
}

TEST_CASE("row space intersection matches enumeration") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    const FpMatrix a = random_matrix(3, 2, 4, rng);
    const FpMatrix b = random_matrix(3, 3, 4, rng);
    const auto wa = oracle::words(a);
    const auto wb = oracle::words(b);
    std::set<FpVector> both;
    for (const auto& v : wa)
      if (wb.count(v)) both.insert(v);
    CHECK(oracle::words(intersect_row_spaces(a, b)) == both);
  }
}

TEST_CASE("echelon basis insertion and coordinates") {
  EchelonBasis basis(3, 4);
  CHECK(basis.insert(FpVector{1, 2, 0, 1}));
  CHECK(basis.insert(FpVector{0, 1, 1, 0}));
  CHECK_FALSE(basis.insert(FpVector{1, 0, 1, 1}));  // first + 2·second
  CHECK(basis.rank() == 2);
  CHECK(basis.contains(FpVector{2, 1, 0, 2}));
  CHECK_FALSE(basis.contains(FpVector{0, 0, 0, 1}));
  const FpMatrix m = basis.to_matrix();
  const FpVector v{1, 0, 1, 1};
  const auto c = basis.coordinates(v);
  REQUIRE(c.has_value());
  CHECK(vec_mat(*c, m) == v);
}

TEST_CASE("transpose, stacking and arithmetic") {
  const FpMatrix a = FpMatrix::from_rows(5, 3, {{1, 2, 3}, {4, 0, 1}});
  CHECK(a.transpose().transpose() == a);
  CHECK(a.transpose()(2, 0) == 3);
  CHECK(vstack(a, a).rows() == 4);
  CHECK((a + scaled(a, 4)).is_zero());
  CHECK((a - a).is_zero());
}
