#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homalg/complex.hpp"
#include "homalg/samples.hpp"

using namespace homalg;
using R = Rational;

namespace {

struct KA2 {
  AlgebraPtr<R> alg = sample_kA2<R>();
  ModuleRep<R> reg = regular_module(alg, Side::Left);
  ModuleRep<R> p1, p2, s1;
  Matrix<R> incl;  // P2 -> P1
  KA2 () {
    Matrix<R> e1(3, 1), e2(3, 1);
    e1.at(0, 0) = 1;
    e2.at(1, 0) = 1;
    p1 = submodule(reg, spin(reg, e1));
    p2 = submodule(reg, spin(reg, e2));
    s1 = top(p1).rep;
    incl = hom_space(p2, p1).at(0);
  }
};

// 0 -> P2 -> P1 -> 0 in degrees -1, 0 (the projective resolution shape of S1)
BoundedComplex<R> resolution_complex(const KA2& k) {
  return make_complex(k.alg, Side::Left, {{-1, k.p2}, {0, k.p1}}, {{-1, k.incl}});
}

}  // namespace

TEST_CASE("construction validates") {
  KA2 k;
  CHECK_NOTHROW(resolution_complex(k));
  // non-intertwiner differential
  Matrix<R> bad(2, 1);
  bad.at(0, 0) = 1;
  CHECK_THROWS(make_complex(k.alg, Side::Left, {{-1, k.p2}, {0, k.p1}}, {{-1, bad}}));
  // d.d != 0: A ->x A ->x A over k[x] would need x^2 != 0; over k[x]/(x^2)
  // right multiplication by x squares to zero, so build a genuine violation
  auto dn = sample_dual_numbers<R>();
  auto dreg = regular_module(dn, Side::Left);
  Matrix<R> id2 = Matrix<R>::identity(2);
  CHECK_THROWS(make_complex(dn, Side::Left, {{0, dreg}, {1, dreg}, {2, dreg}},
                            {{0, id2}, {1, id2}}));
}

TEST_CASE("shift") {
  KA2 k;
  auto c = resolution_complex(k);
  auto s = shift(c, 1);
  CHECK(s.dim_at(-2) == 1);
  CHECK(s.dim_at(-1) == 2);
  CHECK(s.d(-2) == -c.d(-1));
  auto back = shift(s, -1);
  CHECK(back.terms.size() == c.terms.size());
  CHECK(back.d(-1) == c.d(-1));
  CHECK(homology_dim(s, -1) == homology_dim(c, 0));
}

TEST_CASE("homology") {
  KA2 k;
  auto one = one_term_complex(k.p1);
  CHECK(homology_dim(one, 0) == 2);
  CHECK(homology_dim(one, 1) == 0);
  auto c = resolution_complex(k);
  CHECK(homology_dim(c, -1) == 0);
  CHECK(homology_dim(c, 0) == 1);
  auto h0 = homology(c, 0);
  CHECK(h0.dim == 1);
  CHECK(hom_space(h0, k.s1).size() == 1);  // H^0 = S1

  // x-multiplication two-term complex over the dual numbers
  auto dn = sample_dual_numbers<R>();
  auto dreg = regular_module(dn, Side::Left);
  Matrix<R> xr = dn->right_mult_basis(1);
  auto xc = make_complex(dn, Side::Left, {{0, dreg}, {1, dreg}}, {{0, xr}});
  CHECK(homology_dim(xc, 0) == 1);
  CHECK(homology_dim(xc, 1) == 1);
}

TEST_CASE("cone") {
  KA2 k;
  auto c = resolution_complex(k);
  CHECK(is_acyclic(cone(identity_chain_map(c))));

  auto zc = zero_complex(k.alg, Side::Left);
  auto m = one_term_complex(k.p1);
  auto from_zero = make_chain_map(zc, m, {});
  auto cz = cone(from_zero);
  CHECK(cz.dim_at(0) == 2);
  CHECK(homology_dim(cz, 0) == 2);

  auto f = make_chain_map(one_term_complex(k.p2), one_term_complex(k.p1), {{0, k.incl}});
  auto cf = cone(f);
  auto h = homology_dims(cf);
  REQUIRE(h.size() == 1);
  CHECK(h.at(0) == 1);
  CHECK(hom_space(homology(cf, 0), k.s1).size() == 1);
}

TEST_CASE("quasi-isomorphism") {
  KA2 k;
  auto c = resolution_complex(k);
  CHECK(is_quasi_isomorphism(identity_chain_map(c)));
  // augmentation of the resolution onto S1
  auto tq = top(k.p1);
  auto aug = make_chain_map(c, one_term_complex(tq.rep), {{0, tq.space.proj}});
  CHECK(is_quasi_isomorphism(aug));
  // zero map between non-acyclic complexes is not
  auto z = make_chain_map(one_term_complex(k.s1), one_term_complex(k.s1),
                          std::map<int, Matrix<R>>{{0, Matrix<R>(1, 1)}});
  CHECK(!is_quasi_isomorphism(z));
}

TEST_CASE("truncations") {
  KA2 k;
  auto c = resolution_complex(k);
  auto below0 = truncate_above(c, 0);  // t<=0 keeps everything
  CHECK(below0.src.terms.size() == 2);
  CHECK(is_quasi_isomorphism(below0));

  auto atm1 = truncate_above(c, -1);  // t<=-1: homology vanishes there
  CHECK(atm1.src.is_zero());

  auto ge0 = truncate_below(c, 0);  // t>=0: coker = S1 in degree 0
  CHECK(ge0.tgt.dim_at(0) == 1);
  CHECK(is_quasi_isomorphism(ge0));

  // empty window is acyclic
  auto dn = sample_dual_numbers<R>();
  auto dreg = regular_module(dn, Side::Left);
  Matrix<R> xr = dn->right_mult_basis(1);
  auto xc = make_complex(dn, Side::Left, {{0, dreg}, {1, dreg}}, {{0, xr}});
  auto w = truncate_below(truncate_above(xc, 0).src, 1);
  CHECK(w.tgt.is_zero());

  // truncation is homology-preserving in the kept range
  CHECK(homology_dim(truncate_below(xc, 1).tgt, 1) == homology_dim(xc, 1));
  CHECK(homology_dim(truncate_above(xc, 0).src, 0) == homology_dim(xc, 0));
}

TEST_CASE("truncated chain maps") {
  auto dn = sample_dual_numbers<R>();
  auto dreg = regular_module(dn, Side::Left);
  Matrix<R> xr = dn->right_mult_basis(1);
  auto xc = make_complex(dn, Side::Left, {{0, dreg}, {1, dreg}}, {{0, xr}});
  auto f = identity_chain_map(xc);
  CHECK_NOTHROW(truncate_map_above(f, 0));
  CHECK_NOTHROW(truncate_map_below(f, 1));
  CHECK(is_quasi_isomorphism(truncate_map_above(f, 0)));
  CHECK(is_quasi_isomorphism(truncate_map_below(f, 1)));
}

TEST_CASE("totalize") {
  KA2 k;
  // single row reproduces the row
  Bicomplex<R> row{k.alg, Side::Left, {}, {}, {}};
  row.terms.emplace(std::make_pair(-1, 0), k.p2);
  row.terms.emplace(std::make_pair(0, 0), k.p1);
  row.dh.emplace(std::make_pair(-1, 0), k.incl);
  auto t = totalize(row);
  CHECK(t.dim_at(-1) == 1);
  CHECK(t.dim_at(0) == 2);
  CHECK(t.d(-1) == k.incl);

  // single square encoding a chain map matches the cone
  auto f = make_chain_map(one_term_complex(k.p2), one_term_complex(k.p1), {{0, k.incl}});
  Bicomplex<R> sq{k.alg, Side::Left, {}, {}, {}};
  sq.terms.emplace(std::make_pair(-1, 0), k.p2);
  sq.terms.emplace(std::make_pair(0, 0), k.p1);
  sq.dh.emplace(std::make_pair(-1, 0), k.incl);
  auto tot = totalize(sq);
  auto cf = cone(f);
  CHECK(homology_dims(tot) == homology_dims(cf));

  // exact row (short exact sequence) totalizes to an acyclic complex
  auto tq = top(k.p1);
  Bicomplex<R> ses{k.alg, Side::Left, {}, {}, {}};
  ses.terms.emplace(std::make_pair(0, 0), k.p2);
  ses.terms.emplace(std::make_pair(1, 0), k.p1);
  ses.terms.emplace(std::make_pair(2, 0), tq.rep);
  ses.dh.emplace(std::make_pair(0, 0), k.incl);
  ses.dh.emplace(std::make_pair(1, 0), tq.space.proj);
  CHECK(is_acyclic(totalize(ses)));

  // two-row bicomplex with anticommuting totalization differential
  auto dn = sample_dual_numbers<R>();
  auto dreg = regular_module(dn, Side::Left);
  Matrix<R> xr = dn->right_mult_basis(1);
  Bicomplex<R> b{dn, Side::Left, {}, {}, {}};
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q) b.terms.emplace(std::make_pair(p, q), dreg);
  b.dh.emplace(std::make_pair(0, 0), xr);
  b.dh.emplace(std::make_pair(0, 1), xr);
  b.dv.emplace(std::make_pair(0, 0), xr);
  b.dv.emplace(std::make_pair(1, 0), xr);
  auto tb = totalize(b);
  CHECK(tb.dim_at(1) == 4);
  CHECK((tb.d(1) * tb.d(0)).is_zero());
}

TEST_CASE("euler characteristic equals alternating homology sum") {
  KA2 k;
  for (const auto& c : {resolution_complex(k), one_term_complex(k.reg), shift(resolution_complex(k), 2)}) {
    long long terms = 0, hom = 0;
    for (int n = -5; n <= 5; ++n) {
      long long sgn = (n % 2 == 0) ? 1 : -1;
      terms += sgn * static_cast<long long>(c.dim_at(n));
      hom += sgn * static_cast<long long>(homology_dim(c, n));
    }
    CHECK(terms == hom);
  }
}

TEST_CASE("direct sum of complexes") {
  KA2 k;
  auto c = resolution_complex(k);
  auto s = direct_sum(c, one_term_complex(k.s1));
  CHECK(s.dim_at(0) == 3);
  CHECK(s.dim_at(-1) == 1);
  CHECK(homology_dim(s, 0) == 2);
}
