#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homalg/module.hpp"
#include "homalg/samples.hpp"

using namespace homalg;
using R = Rational;

namespace {

// Indecomposables over kA2 (arrow a: vertex1 -> vertex2).
struct KA2Modules {
  AlgebraPtr<R> alg = sample_kA2<R>();
  ModuleRep<R> reg = regular_module(alg, Side::Left);
  ModuleRep<R> p1, p2, s1;
  KA2Modules() {
    Matrix<R> e1(3, 1), e2(3, 1);
    e1.at(0, 0) = 1;
    e2.at(1, 0) = 1;
    p1 = submodule(reg, spin(reg, e1));  // dim 2: {e1, a}
    p2 = submodule(reg, spin(reg, e2));  // dim 1: {e2} = S2
    s1 = top(p1).rep;                    // dim 1
  }
};

}  // namespace

TEST_CASE("module validation") {
  auto alg = sample_dual_numbers<R>();
  auto reg = regular_module(alg, Side::Left);
  CHECK_NOTHROW(make_module(alg, Side::Left, reg.dim, reg.action));
  // x acting as identity is not a module structure (x^2 = 0 but I^2 = I)
  std::vector<Matrix<R>> bad{Matrix<R>::identity(1), Matrix<R>::identity(1)};
  CHECK_THROWS(make_module(alg, Side::Left, 1, bad));
  // right regular module satisfies the flipped law
  CHECK_NOTHROW(make_module(alg, Side::Right, 2, regular_module(alg, Side::Right).action));
  auto ut = sample_upper_triangular<R>();
  CHECK_NOTHROW(make_module(ut, Side::Left, 3, regular_module(ut, Side::Left).action));
  CHECK_NOTHROW(make_module(ut, Side::Right, 3, regular_module(ut, Side::Right).action));
  CHECK_THROWS(make_module(ut, Side::Right, 3, regular_module(ut, Side::Left).action));
}

TEST_CASE("kA2 projectives and homs") {
  KA2Modules m;
  CHECK(m.p1.dim == 2);
  CHECK(m.p2.dim == 1);
  CHECK(m.s1.dim == 1);
  CHECK(hom_space(m.p1, m.p2).empty());
  CHECK(hom_space(m.p2, m.p1).size() == 1);  // the radical inclusion
  CHECK(hom_space(m.p1, m.s1).size() == 1);
  CHECK(hom_space(m.s1, m.p2).empty());  // Schur between non-isomorphic simples
  CHECK(hom_space(m.p1, m.p1).size() == 1);
  CHECK(hom_space(m.reg, m.reg).size() == 3);  // End(A) = A^op
}

TEST_CASE("free-module adjunction dim hom(A, M) = dim M") {
  KA2Modules m;
  for (const auto& mod : {m.reg, m.p1, m.p2, m.s1, direct_sum(m.p1, m.s1)})
    CHECK(hom_space(m.reg, mod).size() == mod.dim);
  auto dn = sample_dual_numbers<R>();
  auto dreg = regular_module(dn, Side::Left);
  auto s = top(dreg).rep;
  CHECK(hom_space(dreg, s).size() == 1);
}

TEST_CASE("projectivity and injectivity") {
  KA2Modules m;
  CHECK(is_projective(m.reg));
  CHECK(is_projective(m.p1));
  CHECK(is_projective(m.p2));
  CHECK(!is_projective(m.s1));
  // kA2 injectives: S1 and P1; S2 = P2 is not injective
  CHECK(is_injective(m.s1));
  CHECK(is_injective(m.p1));
  CHECK(!is_injective(m.p2));
  CHECK(is_projective(zero_module(m.alg, Side::Left)));

  auto dn = sample_dual_numbers<R>();
  auto dreg = regular_module(dn, Side::Left);
  auto s = top(dreg).rep;
  CHECK(is_projective(dreg));
  CHECK(is_injective(dreg));  // self-injective
  CHECK(!is_projective(s));
  CHECK(!is_injective(s));
}

TEST_CASE("self-injective algebra: projective iff injective on small modules") {
  auto dn = sample_dual_numbers<R>();
  auto dreg = regular_module(dn, Side::Left);
  auto s = top(dreg).rep;
  for (const auto& mod : {dreg, s, direct_sum(dreg, dreg), direct_sum(dreg, s), direct_sum(s, s)})
    CHECK(is_projective(mod) == is_injective(mod));
}

TEST_CASE("dual is involutive and side-swapping") {
  KA2Modules m;
  auto d = dual(m.p1);
  CHECK(d.side == Side::Right);
  CHECK(d.dim == 2);
  CHECK(dual(d) == m.p1);
  CHECK(is_projective(dual(m.s1)));  // S1 injective <-> dual projective
}

TEST_CASE("quotients and top") {
  KA2Modules m;
  Matrix<R> arrow_in_p1(2, 1);
  arrow_in_p1.at(1, 0) = 1;  // radical vector of P1
  auto q = quotient_module(m.p1, arrow_in_p1);
  CHECK(q.rep.dim == 1);
  CHECK(!hom_space(q.rep, m.s1).empty());  // quotient is S1
  CHECK(top(m.reg).rep.dim == 2);
  CHECK(top(m.p2).rep.dim == 1);
}

TEST_CASE("free cover") {
  auto dn = sample_dual_numbers<R>();
  auto s = top(regular_module(dn, Side::Left)).rep;
  auto fc = free_cover(s);
  CHECK(fc.cover.dim == 2);
  CHECK(fc.eps.rank() == 1);
  CHECK(is_intertwiner(fc.cover, s, fc.eps));
}

TEST_CASE("find_isomorphism") {
  KA2Modules m;
  auto f = find_isomorphism(m.p1, m.p1);
  REQUIRE(f.has_value());
  CHECK(f->is_invertible());
  CHECK(!find_isomorphism(m.p1, direct_sum(m.s1, m.p2)).has_value());
  CHECK(!find_isomorphism(m.p1, m.p2).has_value());
}

TEST_CASE("simples") {
  auto s_ka2 = simples(sample_kA2<R>());
  REQUIRE(s_ka2.size() == 2);
  CHECK(s_ka2[0].dim == 1);
  CHECK(s_ka2[1].dim == 1);
  CHECK(simples(sample_dual_numbers<R>()).size() == 1);
  auto s_m2 = simples(sample_mat2<R>());
  REQUIRE(s_m2.size() == 1);
  CHECK(s_m2[0].dim == 2);
  CHECK(simples(sample_c2_group_algebra<R>()).size() == 2);
  CHECK(simples(sample_upper_triangular<R>()).size() == 2);

  Fp::set_modulus(2);
  CHECK(simples(sample_c2_group_algebra<Fp>()).size() == 1);
  CHECK(simples(sample_kA2<Fp>()).size() == 2);
}

TEST_CASE("bimodules") {
  auto a = sample_kA2<R>();
  auto bim = regular_bimodule(a);
  CHECK(bim.dim() == 3);
  CHECK(bim.left_view() == regular_module(a, Side::Left));
  CHECK(bim.right_view() == regular_module(a, Side::Right));
  auto dd = dual_bimodule(dual_bimodule(bim));
  CHECK(dd.carrier == bim.carrier);

  // non-commuting one-sided actions rejected
  auto dn = sample_dual_numbers<R>();
  Matrix<R> x(2, 2), y(2, 2);
  x.at(0, 1) = 1;       // strictly upper
  y.at(1, 0) = 1;       // strictly lower: xy != yx
  std::vector<Matrix<R>> l{Matrix<R>::identity(2), x};
  std::vector<Matrix<R>> r{Matrix<R>::identity(2), y};
  CHECK_THROWS(make_bimodule(dn, dn, 2, l, r));
}

TEST_CASE("algebra homs and restriction") {
  auto k = ground_field<R>();
  auto a = sample_kA2<R>();
  Matrix<R> u(3, 1);
  for (std::size_t i = 0; i < 3; ++i) u.at(i, 0) = a->unit()[i];
  auto phi = make_algebra_hom(k, a, u);
  auto res = restrict_along(phi, regular_module(a, Side::Left));
  CHECK(res.dim == 3);
  CHECK(*res.algebra == *k);
  CHECK(res.action[0] == Matrix<R>::identity(3));

  Matrix<R> bad(3, 1);
  bad.at(0, 0) = 1;  // 1 |-> e1 is not unital
  CHECK_THROWS(make_algebra_hom(k, a, bad));
}
