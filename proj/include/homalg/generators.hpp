#pragma once

// Sample machinery used by tests and sweep-style validations: decomposition
// into indecomposable summands, enumeration of small modules, seeded random
// complexes and short exact sequences, and the A2 tilting complex with its
// strict endomorphism-algebra action.

#include <random>

#include "homalg/derived.hpp"
#include "homalg/samples.hpp"

namespace homalg {

namespace detail {

// small deterministic scalar from a raw 64-bit draw
template <class K>
K small_scalar(std::uint64_t r) {
  return K(static_cast<long long>(r % 7) - 3);
}

}  // namespace detail

// Splits a module into indecomposable summands by generalized eigenspaces of
// endomorphisms (basis elements plus seeded random combinations). A module
// none of the tested endomorphisms split is returned whole; for split fields
// and desk-scale dimensions the tested set is decisive in practice, and the
// result is used for sample generation, not as a verdict oracle.
template <class K>
std::vector<ModuleRep<K>> decompose_module(const ModuleRep<K>& m) {
  if (m.dim == 0) return {};
  auto homs = hom_space(m, m);
  if (homs.size() == 1) return {m};  // End = k forces indecomposability
  std::mt19937_64 eng(0x517cc1b727220a95ULL);
  std::vector<Matrix<K>> cands = homs;
  for (int t = 0; t < 40; ++t) {
    Matrix<K> z(m.dim, m.dim);
    for (const auto& h : homs) z = z + h.scaled(detail::small_scalar<K>(eng()));
    cands.push_back(std::move(z));
  }
  for (const auto& z : cands) {
    std::size_t found = 0;
    std::vector<Matrix<K>> eigs;
    for (const K& lambda : detail::eigenvalue_candidates<K>(z)) {
      Matrix<K> shifted = z - Matrix<K>::identity(m.dim).scaled(lambda);
      Matrix<K> pw = Matrix<K>::identity(m.dim);
      for (std::size_t e = 0; e < m.dim; ++e) pw = pw * shifted;
      Matrix<K> ker = pw.kernel_basis();
      if (ker.cols() == 0) continue;
      eigs.push_back(ker);
      found += ker.cols();
      if (found == m.dim) break;
    }
    if (found == m.dim && eigs.size() > 1) {
      std::vector<ModuleRep<K>> out;
      for (const auto& e : eigs)
        for (auto& part : decompose_module(submodule(m, e))) out.push_back(std::move(part));
      return out;
    }
  }
  return {m};
}

// The indecomposable left modules of the stock algebras: summands of the
// regular module and of the injective cogenerator, the simples, and the
// radical-series submodules/quotients of the indecomposable projectives.
// Complete for the serial and semisimple algebras used as samples.
template <class K>
std::vector<ModuleRep<K>> indecomposable_modules(const AlgebraPtr<K>& a) {
  std::vector<ModuleRep<K>> out;
  auto add = [&](const ModuleRep<K>& m) {
    if (m.dim == 0) return;
    for (const auto& seen : out)
      if (seen.dim == m.dim && find_isomorphism(seen, m)) return;
    out.push_back(m);
  };
  std::vector<ModuleRep<K>> projs = decompose_module(regular_module(a, Side::Left));
  for (const auto& p : projs) add(p);
  for (const auto& j : decompose_module(dual(regular_module(a, Side::Right)))) add(j);
  for (const auto& s : simples(a)) add(s);
  Matrix<K> rad = a->radical_basis();
  for (const auto& p : projs) {
    Matrix<K> layer = Matrix<K>::identity(p.dim);
    for (std::size_t k = 0; k < p.dim; ++k) {
      Matrix<K> gen(p.dim, 0);
      for (std::size_t j = 0; j < rad.cols(); ++j) {
        std::vector<K> r(a->dim());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = rad.at(i, j);
        gen = gen.hstack(p.act(r) * layer);
      }
      layer = column_basis(gen);
      if (layer.cols() == 0) break;
      for (auto& part : decompose_module(quotient_module(p, layer).rep)) add(part);
      for (auto& part : decompose_module(submodule(p, layer))) add(part);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ModuleRep<K>& x, const ModuleRep<K>& y) { return x.dim < y.dim; });
  return out;
}

// Every direct sum of indecomposables with total dimension <= maxdim, each
// isomorphism class once.
template <class K>
std::vector<ModuleRep<K>> all_modules_up_to(const AlgebraPtr<K>& a, std::size_t maxdim) {
  std::vector<ModuleRep<K>> ind = indecomposable_modules(a);
  std::vector<ModuleRep<K>> out;
  std::function<void(std::size_t, const ModuleRep<K>&)> rec = [&](std::size_t i,
                                                                  const ModuleRep<K>& cur) {
    if (cur.dim > 0) out.push_back(cur);
    for (std::size_t j = i; j < ind.size(); ++j)
      if (cur.dim + ind[j].dim <= maxdim) rec(j, direct_sum(cur, ind[j]));
  };
  rec(0, zero_module(a, Side::Left));
  return out;
}

// A random chain map drawn from the space of degree-0 cycles of the total
// Hom complex — always a genuine chain map.
template <class K>
ChainMap<K> random_chain_map(const BoundedComplex<K>& src, const BoundedComplex<K>& tgt,
                             std::mt19937_64& eng) {
  auto h = hom_complex_k(src, tgt);
  std::map<int, Matrix<K>> comps;
  if (h.complex.dim_at(0) > 0) {
    Matrix<K> cyc = h.complex.d(0).kernel_basis();
    Matrix<K> coords(h.complex.dim_at(0), 1);
    for (std::size_t j = 0; j < cyc.cols(); ++j)
      coords = coords + cyc.column(j).scaled(detail::small_scalar<K>(eng()));
    for (const auto& b : h.blocks.at(0)) {
      Matrix<K> f = h.element(0, b.p, coords);
      if (!f.is_zero()) comps.emplace(b.p, f);
    }
  }
  return make_chain_map(src, tgt, std::move(comps));
}

// A seeded random bounded complex assembled from one-term complexes of pool
// modules through direct sums, cones of random chain maps, and shifts.
template <class K>
BoundedComplex<K> random_bounded_complex(const AlgebraPtr<K>& a,
                                         const std::vector<ModuleRep<K>>& pool,
                                         std::mt19937_64& eng, int steps = 2) {
  if (pool.empty()) return zero_complex(a, Side::Left);
  auto pick = [&]() {
    const ModuleRep<K>& m = pool[eng() % pool.size()];
    return one_term_complex(m, static_cast<int>(eng() % 5) - 2);
  };
  BoundedComplex<K> c = pick();
  for (int s = 0; s < steps; ++s) {
    switch (eng() % 3) {
      case 0:
        c = direct_sum(c, pick());
        break;
      case 1: {
        BoundedComplex<K> other = pick();
        c = cone(random_chain_map(other, c, eng));
        break;
      }
      default:
        c = shift(c, static_cast<int>(eng() % 3) - 1);
        break;
    }
    if (c.is_zero()) c = pick();
  }
  return c;
}

template <class K>
struct ShortExact {
  ModuleRep<K> sub, mid, quot;
  Matrix<K> incl;  // sub -> mid
  Matrix<K> proj;  // mid -> quot
};

// A random short exact sequence with the given middle term: a proper nonzero
// cyclic-spun submodule together with the quotient. nullopt when the tried
// vectors only generate 0 or everything.
template <class K>
std::optional<ShortExact<K>> random_ses(const ModuleRep<K>& m, std::mt19937_64& eng,
                                        int tries = 12) {
  for (int t = 0; t < tries; ++t) {
    Matrix<K> v(m.dim, 1);
    for (std::size_t i = 0; i < m.dim; ++i) v.at(i, 0) = detail::small_scalar<K>(eng());
    Matrix<K> s = spin(m, v);
    if (s.cols() == 0 || s.cols() == m.dim) continue;
    QuotientModule<K> q = quotient_module(m, s);
    return ShortExact<K>{submodule(m, s), m, q.rep, s, q.space.proj};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The A2 tilting complex T = P1 (+) (P2 -> P1) with the strict right action
// of its chain-endomorphism algebra B (composition opposite, so T is a left-A
// right-B bimodule complex). B is isomorphic to the path algebra of the
// reversed A2 quiver.

template <class K>
struct TiltingComplex {
  BimoduleComplex<K> t;
  AlgebraPtr<K> end_algebra;
  // the endomorphism chain maps in the basis order of end_algebra:
  // degree 0 and degree -1 components
  std::vector<Matrix<K>> z0, zm1;
};

template <class K>
TiltingComplex<K> tilting_complex_kA2() {
  AlgebraPtr<K> a = sample_kA2<K>();
  ModuleRep<K> reg = regular_module(a, Side::Left);
  Matrix<K> e1(3, 1), e2(3, 1);
  e1.at(0, 0) = K(1);
  e2.at(1, 0) = K(1);
  ModuleRep<K> p1 = submodule(reg, spin(reg, e1));  // dim 2
  ModuleRep<K> p2 = submodule(reg, spin(reg, e2));  // dim 1
  Matrix<K> incl = hom_space(p2, p1).at(0);

  ModuleRep<K> t0 = direct_sum(p1, p1);  // X1 (+) X2 in degree 0
  Matrix<K> d(4, 1);                     // P2 includes into the second copy
  d.at(2, 0) = incl.at(0, 0);
  d.at(3, 0) = incl.at(1, 0);

  // chain endomorphisms: id on X1, id on X2, and u : X1 -> X2
  std::vector<Matrix<K>> z0(3, Matrix<K>(4, 4)), zm1(3, Matrix<K>(1, 1));
  z0[0].at(0, 0) = z0[0].at(1, 1) = K(1);
  z0[1].at(2, 2) = z0[1].at(3, 3) = K(1);
  zm1[1].at(0, 0) = K(1);
  z0[2].at(2, 0) = z0[2].at(3, 1) = K(1);

  // structure constants of B: product b_i b_j = z_j o z_i (opposite of
  // chain-map composition, so that the right action is associative)
  auto vec = [&](const Matrix<K>& a0, const Matrix<K>& am1) {
    return a0.vectorized().vstack(am1.vectorized());
  };
  Matrix<K> span(17, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    Matrix<K> v = vec(z0[k], zm1[k]);
    for (std::size_t r = 0; r < 17; ++r) span.at(r, k) = v.at(r, 0);
  }
  std::vector<K> c(27, K(0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto coords = coords_in(span, vec(z0[j] * z0[i], zm1[j] * zm1[i]));
      if (!coords) throw std::logic_error("tilting endomorphisms do not close");
      for (std::size_t k = 0; k < 3; ++k) c[(i * 3 + j) * 3 + k] = coords->at(k, 0);
    }
  AlgebraPtr<K> b = make_algebra<K>(3, {"e1", "e2", "u"}, std::move(c), {K(1), K(1), K(0)});

  std::vector<Matrix<K>> r0{z0[0], z0[1], z0[2]}, rm1{zm1[0], zm1[1], zm1[2]};
  BimoduleRep<K> b0 = make_bimodule(a, b, 4, t0.action, r0);
  BimoduleRep<K> bm1 = make_bimodule(a, b, 1, p2.action, rm1);
  BimoduleComplex<K> t = make_bimodule_complex(a, b, {{-1, bm1}, {0, b0}}, {{-1, d}});
  return {std::move(t), std::move(b), std::move(z0), std::move(zm1)};
}

}  // namespace homalg
