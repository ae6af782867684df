#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homalg/hom_tensor.hpp"
#include "homalg/samples.hpp"

using namespace homalg;
using R = Rational;

namespace {

struct KA2 {
  AlgebraPtr<R> alg = sample_kA2<R>();
  ModuleRep<R> reg = regular_module(alg, Side::Left);
  ModuleRep<R> p1, p2, s1;
  Matrix<R> incl;
  KA2() {
    Matrix<R> e1(3, 1), e2(3, 1);
    e1.at(0, 0) = 1;
    e2.at(1, 0) = 1;
    p1 = submodule(reg, spin(reg, e1));
    p2 = submodule(reg, spin(reg, e2));
    s1 = top(p1).rep;
    incl = hom_space(p2, p1).at(0);
  }
  BoundedComplex<R> resolution() const {
    return make_complex(alg, Side::Left, {{-1, p2}, {0, p1}}, {{-1, incl}});
  }
};

}  // namespace

TEST_CASE("hom from the regular bimodule is the identity functor") {
  KA2 k;
  auto a_bim = one_term_bimodule_complex(regular_bimodule(k.alg));
  for (const auto& m : {k.p1, k.p2, k.s1, k.reg}) {
    auto h = hom_complex(a_bim, one_term_complex(m));
    REQUIRE(h.complex.terms.size() == 1);
    CHECK(h.complex.dim_at(0) == m.dim);
    CHECK(find_isomorphism(h.complex.term(0), m).has_value());
  }
}

TEST_CASE("tensor with the regular bimodule is the identity functor") {
  KA2 k;
  auto a_bim = one_term_bimodule_complex(regular_bimodule(k.alg));
  for (const auto& m : {k.p1, k.p2, k.s1, k.reg}) {
    auto t = tensor_complex(a_bim, one_term_complex(m));
    REQUIRE(t.complex.terms.size() == 1);
    CHECK(t.complex.dim_at(0) == m.dim);
    CHECK(find_isomorphism(t.complex.term(0), m).has_value());
  }
}

TEST_CASE("hom complex computes Ext over kA2") {
  KA2 k;
  auto lres = as_bimodule_complex(k.resolution());  // resolution of S1, right algebra k
  auto h = hom_complex(lres, one_term_complex(k.p2));  // Ext*(S1, S2)
  CHECK(homology_dim(h.complex, 0) == 0);
  CHECK(homology_dim(h.complex, 1) == 1);
  auto h2 = hom_complex(lres, one_term_complex(k.s1));  // Ext*(S1, S1)
  CHECK(homology_dim(h2.complex, 0) == 1);
  CHECK(homology_dim(h2.complex, 1) == 0);
}

TEST_CASE("hom complex computes Ext over the dual numbers") {
  auto dn = sample_dual_numbers<R>();
  auto reg = regular_module(dn, Side::Left);
  Matrix<R> xr = dn->right_mult_basis(1);
  // truncated periodic resolution of S: A <- A <- A in degrees -2..0
  auto res = make_complex(dn, Side::Left, {{-2, reg}, {-1, reg}, {0, reg}},
                          {{-2, xr}, {-1, xr}});
  auto s = top(reg).rep;
  auto h = hom_complex(as_bimodule_complex(res), one_term_complex(s));
  CHECK(homology_dim(h.complex, 0) == 1);
  CHECK(homology_dim(h.complex, 1) == 1);
  CHECK(homology_dim(h.complex, 2) == 1);
}

TEST_CASE("term dimensions of the hom complex are sums of hom space dims") {
  KA2 k;
  auto lres = as_bimodule_complex(k.resolution());
  auto m = make_complex(k.alg, Side::Left, {{0, k.p1}, {1, k.p2}}, {});
  auto h = hom_complex(lres, m);
  for (int n = -3; n <= 3; ++n) {
    std::size_t want = 0;
    for (int p = -1; p <= 0; ++p)
      want += hom_space(k.resolution().term(p), m.term(p + n)).size();
    CHECK(h.complex.dim_at(n) == want);
  }
}

TEST_CASE("hom_complex_k endomorphism complex of a resolution") {
  KA2 k;
  auto res = k.resolution();
  auto h = hom_complex_k(res, res);
  CHECK(h.complex.dim_at(0) == 2);   // End(P2) + End(P1)
  CHECK(h.complex.dim_at(1) == 1);   // Hom(P2, P1)
  CHECK(h.complex.dim_at(-1) == 0);  // Hom(P1, P2)
  CHECK(homology_dim(h.complex, 0) == 1);  // End in the derived category = k
  CHECK(homology_dim(h.complex, 1) == 0);
}

TEST_CASE("tensor complex with the dualized regular bimodule over dual numbers") {
  auto dn = sample_dual_numbers<R>();
  auto da = dual_bimodule(regular_bimodule(dn));
  auto s = top(regular_module(dn, Side::Left)).rep;
  auto t = tensor_complex(one_term_bimodule_complex(da), one_term_complex(s));
  CHECK(t.complex.dim_at(0) == 1);  // D(A) (x)_A S is one-dimensional
  auto treg = tensor_complex(one_term_bimodule_complex(da), one_term_complex(regular_module(dn, Side::Left)));
  CHECK(treg.complex.dim_at(0) == 2);  // D(A) (x)_A A = D(A)
}

TEST_CASE("element reconstruction from hom blocks") {
  KA2 k;
  auto lres = as_bimodule_complex(k.resolution());
  auto h = hom_complex(lres, one_term_complex(k.s1));
  // degree 0 has the single block p = 0 (maps P1 -> S1)
  Matrix<R> coords(h.complex.dim_at(0), 1);
  coords.at(0, 0) = R(1);
  Matrix<R> f = h.element(0, 0, coords);
  CHECK(f.rows() == 1);
  CHECK(f.cols() == 2);
  CHECK(is_intertwiner(k.p1, k.s1, f));
}

TEST_CASE("tensor complex of two-term complexes has a correct differential") {
  // L: A -> A (x-mult) as bimodule complex over the dual numbers; N = S
  auto dn = sample_dual_numbers<R>();
  auto bim = regular_bimodule(dn);
  Matrix<R> xr = dn->right_mult_basis(1);
  auto l = make_bimodule_complex(dn, dn, {{-1, bim}, {0, bim}}, {{-1, xr}});
  auto s = top(regular_module(dn, Side::Left)).rep;
  auto t = tensor_complex(l, one_term_complex(s));
  // A (x)_A S = S in both degrees; the induced differential is x.(-) = 0 on S
  CHECK(t.complex.dim_at(-1) == 1);
  CHECK(t.complex.dim_at(0) == 1);
  CHECK(homology_dim(t.complex, -1) == 1);  // Tor_1(A-complex, S) picture
  CHECK(homology_dim(t.complex, 0) == 1);
}
