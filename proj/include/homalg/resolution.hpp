#pragma once

#include "homalg/hom_tensor.hpp"

namespace homalg {

// k-linear dual of a complex: term n is the dual of term -n, differentials
// are transposed; the side swaps.
template <class K>
BoundedComplex<K> dual_complex(const BoundedComplex<K>& c) {
  BoundedComplex<K> r{c.algebra, other_side(c.side), {}, {}};
  for (const auto& [n, t] : c.terms) r.terms.emplace(-n, dual(t));
  for (const auto& [n, dn] : c.diff) r.diff.emplace(-n - 1, dn.transpose());
  return r;
}

template <class K>
ChainMap<K> dual_chain_map(const ChainMap<K>& f) {
  std::map<int, Matrix<K>> comp;
  for (const auto& [n, fn] : f.components) comp.emplace(-n, fn.transpose());
  return {dual_complex(f.tgt), dual_complex(f.src), std::move(comp)};
}

struct ResolutionWindow {
  int depth = 8;  // resolution steps beyond the input's own support
};

// Resolution of a bounded complex by "good" terms (projectives for the plain
// functor; one-sided-free terms for bimodule bar resolutions), built by
// descending pullback covers: V^n = {(p, c) : d_P p = 0, aug p = d_C c}.
template <class K>
struct ProjResolution {
  BoundedComplex<K> complex;
  ChainMap<K> augmentation;  // complex -> input, quasi-isomorphism above the cutoff
  bool terminated = false;   // the construction closed off; exact everywhere
  int cutoff = 0;            // lowest computed degree
  std::vector<std::pair<int, ModuleRep<K>>> syzygies;  // degree -> V^n before covering
};

template <class K>
ProjResolution<K> resolve_with(const BoundedComplex<K>& c, int depth,
                               const std::function<FreeCover<K>(const ModuleRep<K>&)>& cover,
                               const std::function<bool(const ModuleRep<K>&)>& good_term) {
  if (depth < 1) throw std::invalid_argument("resolution depth must be positive");
  if (c.is_zero()) return {c, identity_chain_map(c), true, 0, {}};
  bool allgood = true;
  for (const auto& [n, t] : c.terms)
    if (!good_term(t)) { allgood = false; break; }
  if (allgood) return {c, identity_chain_map(c), true, c.min_degree(), {}};

  int top = c.max_degree(), bottom = c.min_degree() - depth;
  std::map<int, ModuleRep<K>> pterms;
  std::map<int, Matrix<K>> pdiff, aug;
  bool terminated = false;
  int cutoff = bottom;
  std::vector<std::pair<int, ModuleRep<K>>> syzygies;

  auto pdim = [&](int n) { return pterms.count(n) ? pterms.at(n).dim : std::size_t(0); };
  for (int n = top; n >= bottom; --n) {
    std::size_t pd = pdim(n + 1), pd2 = pdim(n + 2);
    std::size_t cd = c.dim_at(n), cd1 = c.dim_at(n + 1);
    // V^n = kernel of [[dP, 0], [aug, -dC]] on P^{n+1} (+) C^n
    Matrix<K> constraint(pd2 + cd1, pd + cd);
    if (pd > 0 && pd2 > 0) {
      const Matrix<K>& dp1 = pdiff.at(n + 1);
      for (std::size_t i = 0; i < pd2; ++i)
        for (std::size_t j = 0; j < pd; ++j) constraint.at(i, j) = dp1.at(i, j);
    }
    if (pd > 0 && cd1 > 0 && aug.count(n + 1)) {
      const Matrix<K>& a1 = aug.at(n + 1);
      for (std::size_t i = 0; i < cd1; ++i)
        for (std::size_t j = 0; j < pd; ++j) constraint.at(pd2 + i, j) = a1.at(i, j);
    }
    if (cd > 0 && cd1 > 0) {
      Matrix<K> dc = c.d(n);
      for (std::size_t i = 0; i < cd1; ++i)
        for (std::size_t j = 0; j < cd; ++j) constraint.at(pd2 + i, pd + j) = -dc.at(i, j);
    }
    Matrix<K> w = constraint.kernel_basis();
    if (w.cols() == 0) {
      if (n < c.min_degree()) { terminated = true; cutoff = n + 1; break; }
      continue;  // zero syzygy inside the support window
    }
    ModuleRep<K> ptop = pterms.count(n + 1) ? pterms.at(n + 1) : zero_module(c.algebra, c.side);
    ModuleRep<K> v = submodule(direct_sum(ptop, c.term(n)), w);
    syzygies.emplace_back(n, v);
    bool tail = n < c.min_degree();
    Matrix<K> composite;  // P^n -> P^{n+1} (+) C^n
    if (tail && good_term(v)) {
      pterms.emplace(n, v);
      composite = w;
      terminated = true;
      cutoff = n;
    } else {
      FreeCover<K> fc = cover(v);
      pterms.emplace(n, fc.cover);
      composite = w * fc.eps;
    }
    Matrix<K> dp(pd, composite.cols()), an(cd, composite.cols());
    for (std::size_t j = 0; j < composite.cols(); ++j) {
      for (std::size_t i = 0; i < pd; ++i) dp.at(i, j) = composite.at(i, j);
      for (std::size_t i = 0; i < cd; ++i) an.at(i, j) = composite.at(pd + i, j);
    }
    if (pd > 0) pdiff.emplace(n, std::move(dp));
    if (cd > 0) aug.emplace(n, std::move(an));
    if (terminated) break;
  }
  BoundedComplex<K> p = make_complex(c.algebra, c.side, std::move(pterms), std::move(pdiff));
  ChainMap<K> a = make_chain_map(p, c, std::move(aug));
  return {std::move(p), std::move(a), terminated, cutoff, std::move(syzygies)};
}

// Plain projective resolution through minimal free covers.
template <class K>
ProjResolution<K> projective_resolution(const BoundedComplex<K>& c, ResolutionWindow w) {
  return resolve_with<K>(
      c, w.depth, [](const ModuleRep<K>& m) { return free_cover(m); },
      [](const ModuleRep<K>& m) { return is_projective(m); });
}

template <class K>
ProjResolution<K> projective_resolution(const ModuleRep<K>& m, ResolutionWindow w) {
  return projective_resolution(one_term_complex(m), w);
}

// Injective coresolution as the dual of a projective resolution of the dual.
template <class K>
struct InjCoresolution {
  BoundedComplex<K> complex;
  ChainMap<K> coaugmentation;  // input -> complex
  bool terminated = false;
  int cutoff = 0;  // highest computed degree
};

template <class K>
InjCoresolution<K> injective_coresolution(const BoundedComplex<K>& c, ResolutionWindow w) {
  ProjResolution<K> r = projective_resolution(dual_complex(c), w);
  ChainMap<K> coaug = dual_chain_map(r.augmentation);  // dual(dual c) = c on the nose
  return {coaug.tgt, std::move(coaug), r.terminated, -r.cutoff};
}

template <class K>
InjCoresolution<K> injective_coresolution(const ModuleRep<K>& m, ResolutionWindow w) {
  return injective_coresolution(one_term_complex(m), w);
}

// ---------------------------------------------------------------------------
// Bar-type resolutions of bimodule complexes: terms A (x)_k V (free as left
// A-modules) or V (x)_k B (free as right B-modules). Used where only
// one-sided projectivity is needed for exactness of Hom/tensor.

namespace detail {

// A (x)_k M with counit a (x) m -> a.m, as an enveloping-algebra module.
template <class K>
FreeCover<K> bar_cover_left(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b,
                            const ModuleRep<K>& env_mod) {
  BimoduleRep<K> m{a, b, env_mod};
  std::size_t na = a->dim(), md = env_mod.dim;
  std::vector<Matrix<K>> act(na * b->dim());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < b->dim(); ++j)
      act[i * b->dim() + j] = a->left_mult_basis(i).kronecker(m.right_act_basis(j));
  ModuleRep<K> cover = make_module(env_mod.algebra, Side::Left, na * md, std::move(act));
  Matrix<K> eps(md, na * md);
  for (std::size_t i = 0; i < na; ++i) {
    Matrix<K> li = m.left_act_basis(i);
    for (std::size_t t = 0; t < md; ++t)
      for (std::size_t r = 0; r < md; ++r) eps.at(r, i * md + t) = li.at(r, t);
  }
  return {std::move(cover), std::move(eps)};
}

// M (x)_k B with counit m (x) b -> m.b.
template <class K>
FreeCover<K> bar_cover_right(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b,
                             const ModuleRep<K>& env_mod) {
  BimoduleRep<K> m{a, b, env_mod};
  std::size_t nb = b->dim(), md = env_mod.dim;
  std::vector<Matrix<K>> act(a->dim() * nb);
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < nb; ++j)
      act[i * nb + j] = m.left_act_basis(i).kronecker(b->right_mult_basis(j));
  ModuleRep<K> cover = make_module(env_mod.algebra, Side::Left, md * nb, std::move(act));
  Matrix<K> eps(md, md * nb);
  for (std::size_t j = 0; j < nb; ++j) {
    Matrix<K> rj = m.right_act_basis(j);
    for (std::size_t t = 0; t < md; ++t)
      for (std::size_t r = 0; r < md; ++r) eps.at(r, t * nb + j) = rj.at(r, t);
  }
  return {std::move(cover), std::move(eps)};
}

}  // namespace detail

template <class K>
BimoduleComplex<K> bimodule_complex_from_env(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b,
                                             const BoundedComplex<K>& env) {
  BimoduleComplex<K> r{a, b, {}, env.diff};
  for (const auto& [n, t] : env.terms) r.terms.emplace(n, BimoduleRep<K>{a, b, t});
  return r;
}

// Resolution of a bimodule complex by terms free as left modules over the
// left algebra; terminates when a syzygy is projective on that side.
template <class K>
ProjResolution<K> bar_resolution_left(const BimoduleComplex<K>& l, ResolutionWindow w) {
  AlgebraPtr<K> a = l.left_algebra, b = l.right_algebra;
  return resolve_with<K>(
      l.carrier(), w.depth,
      [a, b](const ModuleRep<K>& m) { return detail::bar_cover_left(a, b, m); },
      [a, b](const ModuleRep<K>& m) { return is_projective(BimoduleRep<K>{a, b, m}.left_view()); });
}

// Resolution by terms free as right modules over the right algebra.
template <class K>
ProjResolution<K> bar_resolution_right(const BimoduleComplex<K>& l, ResolutionWindow w) {
  AlgebraPtr<K> a = l.left_algebra, b = l.right_algebra;
  return resolve_with<K>(
      l.carrier(), w.depth,
      [a, b](const ModuleRep<K>& m) { return detail::bar_cover_right(a, b, m); },
      [a, b](const ModuleRep<K>& m) { return is_projective(BimoduleRep<K>{a, b, m}.right_view()); });
}

// ---------------------------------------------------------------------------
// Syzygy periodicity.

template <class K>
struct PeriodicityCertificate {
  int offset = 0, period = 0;
  Matrix<K> witness;  // invertible intertwiner syzygy(offset) -> syzygy(offset+period)
};

// Searches the minimal syzygy sequence of m (syzygy 0 = m itself) for an
// isomorphic repeat, certified by an explicit invertible intertwiner.
template <class K>
std::optional<PeriodicityCertificate<K>> detect_periodicity(const ModuleRep<K>& m, int max_steps) {
  std::vector<ModuleRep<K>> syz{m};
  for (int s = 0; s < max_steps; ++s) {
    const ModuleRep<K>& cur = syz.back();
    if (cur.dim == 0 || is_projective(cur)) return std::nullopt;  // resolution terminates
    FreeCover<K> fc = free_cover(cur);
    Matrix<K> ker = fc.eps.kernel_basis();
    ModuleRep<K> next = submodule(fc.cover, ker);
    for (std::size_t i = 0; i < syz.size(); ++i) {
      auto iso = find_isomorphism(syz[i], next);
      if (iso) return PeriodicityCertificate<K>{static_cast<int>(i),
                                                static_cast<int>(syz.size() - i), *iso};
    }
    syz.push_back(std::move(next));
  }
  return std::nullopt;
}

// Least n <= bound with the n-th cosyzygy of an injective coresolution inside
// the class; nullopt when the bound is exhausted.
template <class K>
std::optional<int> coresolution_dimension(const ModuleRep<K>& m,
                                          const std::function<bool(const ModuleRep<K>&)>& in_class,
                                          int bound) {
  ModuleRep<K> cur = m;
  for (int n = 0; n <= bound; ++n) {
    if (cur.dim == 0 || in_class(cur)) return n;
    // embed into an injective and pass to the cokernel
    FreeCover<K> fc = free_cover(dual(cur));
    Matrix<K> emb = fc.eps.transpose();  // cur -> dual(cover), injective target
    ModuleRep<K> inj = dual(fc.cover);
    cur = quotient_module(inj, emb).rep;
  }
  return std::nullopt;
}

}  // namespace homalg
