#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homalg/samples.hpp"

using namespace homalg;

TEST_CASE("field as one-vertex path algebra") {
  Quiver q;
  q.vertices = 1;
  auto a = path_algebra<Rational>(q, {});
  CHECK(a->dim() == 1);
  CHECK(*a == *ground_field<Rational>());
}

TEST_CASE("kA2 path algebra") {
  auto a = sample_kA2<Rational>();
  REQUIRE(a->dim() == 3);
  CHECK(a->labels() == std::vector<std::string>{"e1", "e2", "a"});
  auto e1 = a->basis_vector(0), e2 = a->basis_vector(1), ar = a->basis_vector(2);
  CHECK(a->product(e1, e1) == e1);
  CHECK(a->product(e1, e2) == std::vector<Rational>(3, 0));
  CHECK(a->product(ar, e1) == ar);  // traverse e1 first, then the arrow
  CHECK(a->product(e2, ar) == ar);
  CHECK(a->product(ar, e2) == std::vector<Rational>(3, 0));
  CHECK(a->product(ar, ar) == std::vector<Rational>(3, 0));
}

TEST_CASE("dual numbers path algebra") {
  auto a = sample_dual_numbers<Rational>();
  REQUIRE(a->dim() == 2);
  auto x = a->basis_vector(1);
  CHECK(a->product(x, x) == std::vector<Rational>(2, 0));
  CHECK(a->product(a->unit(), x) == x);
}

TEST_CASE("commutativity relation identifies parallel paths") {
  // commutative square: ba = dc
  Quiver q;
  q.vertices = 4;
  q.arrows = {{0, 1, "a"}, {1, 3, "b"}, {0, 2, "c"}, {2, 3, "d"}};
  std::vector<PathRelation<Rational>> rel{{{{Rational(1), {"a", "b"}}, {Rational(-1), {"c", "d"}}}}};
  auto alg = path_algebra<Rational>(q, rel);
  CHECK(alg->dim() == 9);  // 4 vertices + 4 arrows + one diagonal class
  auto norel = path_algebra<Rational>(q, {});
  CHECK(norel->dim() == 10);
}

TEST_CASE("infinite-dimensional quotient rejected") {
  Quiver q;
  q.vertices = 1;
  q.arrows = {{0, 0, "x"}};
  CHECK_THROWS(path_algebra<Rational>(q, {}, 12));
}

TEST_CASE("bad structure constants rejected") {
  // e1*e1 = e2, e2 anything = 0, unit would have to be... take unit = e1:
  // fails associativity/unit checks.
  std::vector<Rational> c(8, 0);
  c[(0 * 2 + 0) * 2 + 1] = 1;
  CHECK_THROWS(make_algebra<Rational>(2, {"u", "v"}, c, {Rational(1), Rational(0)}));
}

TEST_CASE("opposite") {
  auto a = sample_kA2<Rational>();
  CHECK(*opposite(opposite(a)) == *a);
  auto dn = sample_dual_numbers<Rational>();
  CHECK(*opposite(dn) == *dn);  // commutative

  // opposite of kA2 = path algebra of the reversed quiver (same basis order)
  Quiver rev;
  rev.vertices = 2;
  rev.arrows = {{1, 0, "a"}};
  auto b = path_algebra<Rational>(rev, {});
  auto ao = opposite(a);
  CHECK(b->dim() == ao->dim());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(b->c(i, j, k) == ao->c(i, j, k));
}

TEST_CASE("upper triangular sample is associative and unital") {
  auto a = sample_upper_triangular<Rational>();
  CHECK(a->dim() == 3);
  auto e12 = a->basis_vector(1);
  CHECK(a->product(e12, e12) == std::vector<Rational>(3, 0));
}

TEST_CASE("enveloping algebra") {
  auto k = ground_field<Rational>();
  CHECK(*enveloping(k, k) == *k);
  auto a = sample_kA2<Rational>();
  auto env = enveloping(a, a);
  CHECK(env->dim() == 9);
  // unit acts as identity is checked at construction; spot-check a product:
  // (e1 (x) e2^op)(a (x) a^op) = e1*a (x) (a*e2)^op-side... exercised via validate()
}

TEST_CASE("left and right multiplication matrices") {
  auto a = sample_kA2<Rational>();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      // L_{e_i e_j} = L_{e_i} L_{e_j}, R_{e_i e_j} = R_{e_j} R_{e_i}
      std::vector<Rational> p = a->product(a->basis_vector(i), a->basis_vector(j));
      CHECK(a->left_mult(p) == a->left_mult_basis(i) * a->left_mult_basis(j));
      CHECK(a->right_mult(p) == a->right_mult_basis(j) * a->right_mult_basis(i));
    }
  CHECK(a->left_mult(a->unit()) == Matrix<Rational>::identity(3));
}

TEST_CASE("radical over Q") {
  auto r = sample_kA2<Rational>()->radical_basis();
  REQUIRE(r.cols() == 1);  // span of the arrow
  CHECK(is_zero(r.at(0, 0)));
  CHECK(is_zero(r.at(1, 0)));
  CHECK(!is_zero(r.at(2, 0)));

  CHECK(sample_dual_numbers<Rational>()->radical_basis().cols() == 1);
  CHECK(sample_upper_triangular<Rational>()->radical_basis().cols() == 1);
  CHECK(sample_c2_group_algebra<Rational>()->radical_basis().cols() == 0);
  CHECK(sample_mat2<Rational>()->radical_basis().cols() == 0);
  CHECK(ground_field<Rational>()->radical_basis().cols() == 0);
}

TEST_CASE("radical in small characteristic") {
  Fp::set_modulus(2);
  // F_2[C_2] is local: radical spanned by 1+g
  auto r = sample_c2_group_algebra<Fp>()->radical_basis();
  REQUIRE(r.cols() == 1);
  CHECK(r.at(0, 0) == r.at(1, 0));
  CHECK(!is_zero(r.at(0, 0)));
  CHECK(sample_mat2<Fp>()->radical_basis().cols() == 0);
  CHECK(sample_kA2<Fp>()->radical_basis().cols() == 1);

  Fp::set_modulus(3);
  CHECK(sample_c2_group_algebra<Fp>()->radical_basis().cols() == 0);
  // F_3[C_3]: cyclic group of order 3, local in characteristic 3
  const std::size_t n = 3;
  std::vector<Fp> c(n * n * n, Fp(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[(i * n + j) * n + (i + j) % n] = Fp(1);
  auto c3 = make_algebra<Fp>(n, {"1", "g", "g2"}, std::move(c), {Fp(1), Fp(0), Fp(0)});
  CHECK(c3->radical_basis().cols() == 2);
}
