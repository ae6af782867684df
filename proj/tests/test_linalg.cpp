#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homalg/matrix.hpp"

using namespace homalg;

namespace {

template <class K>
Matrix<K> from_rows(std::size_t r, std::size_t c, std::vector<long long> v) {
  Matrix<K> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = K(v[i * c + j]);
  return m;
}

template <class K>
Matrix<K> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long long> d(-3, 3);
  Matrix<K> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = K(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(Matrix<Rational>::identity(2).rank() == 2);
  CHECK(Matrix<Rational>::zero(3, 4).rank() == 0);
  CHECK(from_rows<Rational>(2, 2, {1, 2, 2, 4}).rank() == 1);
}

TEST_CASE("kernel basics") {
  CHECK(Matrix<Rational>::identity(4).kernel_basis().cols() == 0);
  CHECK(Matrix<Rational>::zero(3, 3).kernel_basis().cols() == 3);
  auto k = from_rows<Rational>(1, 2, {1, 1}).kernel_basis();
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == -k.at(1, 0));
  CHECK(!is_zero(k.at(0, 0)));
}

TEST_CASE("solve") {
  auto b = from_rows<Rational>(2, 1, {5, 7});
  auto x = Matrix<Rational>::identity(2).solve(b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto m = from_rows<Rational>(1, 2, {1, 1});
  auto y = m.solve(from_rows<Rational>(1, 1, {1}));
  REQUIRE(y.has_value());
  CHECK(m * *y == from_rows<Rational>(1, 1, {1}));

  CHECK(!from_rows<Rational>(1, 1, {0}).solve(from_rows<Rational>(1, 1, {1})).has_value());
}

TEST_CASE("kronecker") {
  auto i2 = Matrix<Rational>::identity(2), i3 = Matrix<Rational>::identity(3);
  CHECK(i2.kronecker(i3) == Matrix<Rational>::identity(6));
  auto a = from_rows<Rational>(2, 2, {1, 2, 3, 4});
  CHECK(a.kronecker(Matrix<Rational>::identity(1)) == a);
  auto n = from_rows<Rational>(2, 2, {0, 1, 0, 0});
  auto nn = n.kronecker(n);
  Matrix<Rational> expect(4, 4);
  expect.at(0, 3) = 1;  // e1(x)e1 <- e2(x)e2
  CHECK(nn == expect);
}

TEST_CASE("rank-nullity and kernel contract, random") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    auto m = random_matrix<Rational>(rng, r, c);
    auto k = m.kernel_basis();
    CHECK(m.rank() + k.cols() == c);
    CHECK((m * k).is_zero());
    CHECK(k.rank() == k.cols());
  }
}

TEST_CASE("kronecker rank multiplicativity") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 15; ++t) {
    auto a = random_matrix<Rational>(rng, 1 + rng() % 3, 1 + rng() % 3);
    auto b = random_matrix<Rational>(rng, 1 + rng() % 3, 1 + rng() % 3);
    CHECK(a.kronecker(b).rank() == a.rank() * b.rank());
  }
}

TEST_CASE("prime field arithmetic") {
  Fp::set_modulus(5);
  CHECK(Fp(7) == Fp(2));
  CHECK((Fp(3) / Fp(2)).value() == 4);  // 3 * 3 = 9 = 4, inverse of 2 is 3
  CHECK((Fp(4) * Fp(4)) == Fp(1));
  CHECK_THROWS(Fp(0).inverse());
  for (long long v = 1; v < 5; ++v) CHECK(Fp(v) * Fp(v).inverse() == Fp(1));
  CHECK_THROWS(Fp::set_modulus(6));
  Fp::set_modulus(5);

  auto m = from_rows<Fp>(2, 2, {1, 2, 3, 4});
  CHECK(m.rank() == 2);
  CHECK(from_rows<Fp>(2, 2, {1, 2, 2, 4}).rank() == 1);
  // rank depends on characteristic: [[1,1],[1,1+5]] is singular mod 5
  CHECK(from_rows<Fp>(2, 2, {1, 1, 1, 6}).rank() == 1);
  CHECK(from_rows<Rational>(2, 2, {1, 1, 1, 6}).rank() == 2);
}

TEST_CASE("quotient space projection/lift") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 25; ++t) {
    std::size_t n = 1 + rng() % 5;
    auto span = random_matrix<Rational>(rng, n, rng() % 4);
    auto q = quotient_by(span, n);
    CHECK(q.dim() == n - column_basis(span).cols());
    CHECK(q.proj * q.lift == Matrix<Rational>::identity(q.dim()));
    CHECK((q.proj * span).is_zero());
  }
}

TEST_CASE("rational string io") {
  CHECK(rational_from_string("3/7") == Rational(3) / 7);
  CHECK(to_string(Rational(-9) / 6) == "-3/2");
  CHECK_THROWS(rational_from_string("x"));
}
