#pragma once

#include <map>

#include "homalg/module.hpp"

namespace homalg {

// Bounded cochain complex: terms in finitely many degrees, d^n: term^n ->
// term^{n+1}, d.d = 0, differentials are module maps. Degrees without an
// entry are zero. An empty complex is the zero complex.
template <class K>
struct BoundedComplex {
  AlgebraPtr<K> algebra;
  Side side = Side::Left;
  std::map<int, ModuleRep<K>> terms;
  std::map<int, Matrix<K>> diff;

  std::size_t dim_at(int n) const {
    auto it = terms.find(n);
    return it == terms.end() ? 0 : it->second.dim;
  }
  ModuleRep<K> term(int n) const {
    auto it = terms.find(n);
    return it == terms.end() ? zero_module(algebra, side) : it->second;
  }
  Matrix<K> d(int n) const {
    auto it = diff.find(n);
    return it == diff.end() ? Matrix<K>(dim_at(n + 1), dim_at(n)) : it->second;
  }
  bool is_zero() const {
    for (const auto& [n, t] : terms)
      if (t.dim > 0) return false;
    return true;
  }
  int min_degree() const {  // of the support; 0 for the zero complex
    for (const auto& [n, t] : terms)
      if (t.dim > 0) return n;
    return 0;
  }
  int max_degree() const {
    int m = 0;
    for (const auto& [n, t] : terms)
      if (t.dim > 0) m = n;
    return m;
  }
};

namespace detail {
// drop zero terms and zero-shaped differentials
template <class K>
void normalize_complex(BoundedComplex<K>& c) {
  for (auto it = c.terms.begin(); it != c.terms.end();)
    it = it->second.dim == 0 ? c.terms.erase(it) : std::next(it);
  for (auto it = c.diff.begin(); it != c.diff.end();)
    it = (it->second.rows() == 0 || it->second.cols() == 0) ? c.diff.erase(it) : std::next(it);
}
}  // namespace detail

template <class K>
BoundedComplex<K> make_complex(AlgebraPtr<K> algebra, Side side, std::map<int, ModuleRep<K>> terms,
                               std::map<int, Matrix<K>> diff) {
  BoundedComplex<K> c{std::move(algebra), side, std::move(terms), std::move(diff)};
  detail::normalize_complex(c);
  for (const auto& [n, t] : c.terms) {
    if (!(*t.algebra == *c.algebra) || t.side != c.side)
      throw std::invalid_argument("complex term algebra/side mismatch at degree " + std::to_string(n));
  }
  for (const auto& [n, dn] : c.diff) {
    if (dn.rows() != c.dim_at(n + 1) || dn.cols() != c.dim_at(n))
      throw std::invalid_argument("differential shape mismatch at degree " + std::to_string(n));
    if (!is_intertwiner(c.term(n), c.term(n + 1), dn))
      throw std::invalid_argument("differential is not a module map at degree " + std::to_string(n));
    if (!(c.d(n + 1) * dn).is_zero())
      throw std::invalid_argument("d.d != 0 at degree " + std::to_string(n));
  }
  return c;
}

template <class K>
BoundedComplex<K> zero_complex(AlgebraPtr<K> algebra, Side side) {
  return {std::move(algebra), side, {}, {}};
}

template <class K>
BoundedComplex<K> one_term_complex(const ModuleRep<K>& m, int degree = 0) {
  BoundedComplex<K> c{m.algebra, m.side, {}, {}};
  if (m.dim > 0) c.terms.emplace(degree, m);
  return c;
}

// Degreewise map of complexes commuting with the differentials.
template <class K>
struct ChainMap {
  BoundedComplex<K> src, tgt;
  std::map<int, Matrix<K>> components;

  Matrix<K> at(int n) const {
    auto it = components.find(n);
    return it == components.end() ? Matrix<K>(tgt.dim_at(n), src.dim_at(n)) : it->second;
  }
};

template <class K>
ChainMap<K> make_chain_map(BoundedComplex<K> src, BoundedComplex<K> tgt,
                           std::map<int, Matrix<K>> components) {
  ChainMap<K> f{std::move(src), std::move(tgt), std::move(components)};
  for (auto it = f.components.begin(); it != f.components.end();)
    it = (it->second.rows() == 0 || it->second.cols() == 0) ? f.components.erase(it)
                                                            : std::next(it);
  for (const auto& [n, fn] : f.components) {
    if (fn.rows() != f.tgt.dim_at(n) || fn.cols() != f.src.dim_at(n))
      throw std::invalid_argument("chain map shape mismatch at degree " + std::to_string(n));
    if (!is_intertwiner(f.src.term(n), f.tgt.term(n), fn))
      throw std::invalid_argument("chain map is not a module map at degree " + std::to_string(n));
  }
  int lo = std::min(f.src.terms.empty() ? 0 : f.src.terms.begin()->first,
                    f.tgt.terms.empty() ? 0 : f.tgt.terms.begin()->first) - 1;
  int hi = std::max(f.src.terms.empty() ? 0 : f.src.terms.rbegin()->first,
                    f.tgt.terms.empty() ? 0 : f.tgt.terms.rbegin()->first) + 1;
  for (int n = lo; n <= hi; ++n)
    if (f.at(n + 1) * f.src.d(n) != f.tgt.d(n) * f.at(n))
      throw std::invalid_argument("chain map does not commute with d at degree " + std::to_string(n));
  return f;
}

template <class K>
ChainMap<K> identity_chain_map(const BoundedComplex<K>& c) {
  std::map<int, Matrix<K>> comp;
  for (const auto& [n, t] : c.terms) comp.emplace(n, Matrix<K>::identity(t.dim));
  return {c, c, std::move(comp)};
}

template <class K>
ChainMap<K> compose(const ChainMap<K>& g, const ChainMap<K>& f) {  // g after f
  std::map<int, Matrix<K>> comp;
  for (const auto& [n, t] : f.src.terms) comp.emplace(n, g.at(n) * f.at(n));
  ChainMap<K> h{f.src, g.tgt, std::move(comp)};
  for (auto it = h.components.begin(); it != h.components.end();)
    it = (it->second.rows() == 0 || it->second.cols() == 0) ? h.components.erase(it)
                                                            : std::next(it);
  return h;
}

// Shift: term^n of c[k] is term^{n+k}, differential gets the sign (-1)^k.
template <class K>
BoundedComplex<K> shift(const BoundedComplex<K>& c, int k) {
  BoundedComplex<K> r{c.algebra, c.side, {}, {}};
  for (const auto& [n, t] : c.terms) r.terms.emplace(n - k, t);
  for (const auto& [n, dn] : c.diff) r.diff.emplace(n - k, k % 2 == 0 ? dn : -dn);
  return r;
}

template <class K>
ChainMap<K> shift_map(const ChainMap<K>& f, int k) {
  std::map<int, Matrix<K>> comp;
  for (const auto& [n, fn] : f.components) comp.emplace(n - k, fn);
  return {shift(f.src, k), shift(f.tgt, k), std::move(comp)};
}

template <class K>
BoundedComplex<K> direct_sum(const BoundedComplex<K>& a, const BoundedComplex<K>& b) {
  BoundedComplex<K> r{a.algebra, a.side, {}, {}};
  int lo = std::min(a.terms.empty() ? 0 : a.terms.begin()->first,
                    b.terms.empty() ? 0 : b.terms.begin()->first);
  int hi = std::max(a.terms.empty() ? 0 : a.terms.rbegin()->first,
                    b.terms.empty() ? 0 : b.terms.rbegin()->first);
  for (int n = lo; n <= hi; ++n) {
    if (a.dim_at(n) + b.dim_at(n) == 0) continue;
    r.terms.emplace(n, direct_sum(a.term(n), b.term(n)));
  }
  for (int n = lo; n <= hi; ++n) {
    std::size_t rows = a.dim_at(n + 1) + b.dim_at(n + 1), cols = a.dim_at(n) + b.dim_at(n);
    if (rows == 0 || cols == 0) continue;
    Matrix<K> d(rows, cols);
    Matrix<K> da = a.d(n), db = b.d(n);
    for (std::size_t i = 0; i < da.rows(); ++i)
      for (std::size_t j = 0; j < da.cols(); ++j) d.at(i, j) = da.at(i, j);
    for (std::size_t i = 0; i < db.rows(); ++i)
      for (std::size_t j = 0; j < db.cols(); ++j) d.at(a.dim_at(n + 1) + i, a.dim_at(n) + j) = db.at(i, j);
    if (!d.is_zero()) r.diff.emplace(n, std::move(d));
  }
  detail::normalize_complex(r);
  return r;
}

// Mapping cone: cone^n = src^{n+1} (+) tgt^n, d(x, y) = (-d x, f x + d y).
template <class K>
BoundedComplex<K> cone(const ChainMap<K>& f) {
  BoundedComplex<K> r{f.src.algebra, f.src.side, {}, {}};
  int lo = std::min(f.src.min_degree() - 1, f.tgt.min_degree()) - 1;
  int hi = std::max(f.src.max_degree() - 1, f.tgt.max_degree()) + 1;
  for (int n = lo; n <= hi; ++n) {
    std::size_t dn = f.src.dim_at(n + 1) + f.tgt.dim_at(n);
    if (dn > 0) r.terms.emplace(n, direct_sum(f.src.term(n + 1), f.tgt.term(n)));
  }
  for (int n = lo; n <= hi; ++n) {
    std::size_t rows = f.src.dim_at(n + 2) + f.tgt.dim_at(n + 1);
    std::size_t cols = f.src.dim_at(n + 1) + f.tgt.dim_at(n);
    if (rows == 0 || cols == 0) continue;
    Matrix<K> d(rows, cols);
    Matrix<K> ds = f.src.d(n + 1), dt = f.tgt.d(n), fn = f.at(n + 1);
    for (std::size_t i = 0; i < ds.rows(); ++i)
      for (std::size_t j = 0; j < ds.cols(); ++j) d.at(i, j) = -ds.at(i, j);
    for (std::size_t i = 0; i < fn.rows(); ++i)
      for (std::size_t j = 0; j < fn.cols(); ++j) d.at(f.src.dim_at(n + 2) + i, j) = fn.at(i, j);
    for (std::size_t i = 0; i < dt.rows(); ++i)
      for (std::size_t j = 0; j < dt.cols(); ++j)
        d.at(f.src.dim_at(n + 2) + i, f.src.dim_at(n + 1) + j) = dt.at(i, j);
    if (!d.is_zero()) r.diff.emplace(n, std::move(d));
  }
  detail::normalize_complex(r);
  return r;
}

template <class K>
std::size_t homology_dim(const BoundedComplex<K>& c, int n) {
  std::size_t kd = c.dim_at(n) - c.d(n).rank();
  return kd - c.d(n - 1).rank();
}

template <class K>
std::map<int, std::size_t> homology_dims(const BoundedComplex<K>& c) {
  std::map<int, std::size_t> h;
  for (const auto& [n, t] : c.terms) {
    std::size_t d = homology_dim(c, n);
    if (d > 0) h.emplace(n, d);
  }
  return h;
}

template <class K>
bool is_acyclic(const BoundedComplex<K>& c) {
  return homology_dims(c).empty();
}

// H^n as a module: ker d^n modulo im d^{n-1}.
template <class K>
ModuleRep<K> homology(const BoundedComplex<K>& c, int n) {
  if (c.dim_at(n) == 0) return zero_module(c.algebra, c.side);
  Matrix<K> ker = c.d(n).kernel_basis();
  ModuleRep<K> z = submodule(c.term(n), ker);
  auto img = coords_in(ker, c.d(n - 1));
  if (!img) throw std::logic_error("image not contained in kernel");
  return quotient_module(z, *img).rep;
}

// Canonical truncation t<=n: keeps homology in degrees <= n; the boundary
// term becomes ker d^n. Returned with its inclusion into c.
template <class K>
ChainMap<K> truncate_above(const BoundedComplex<K>& c, int n) {
  BoundedComplex<K> r{c.algebra, c.side, {}, {}};
  std::map<int, Matrix<K>> inc;
  Matrix<K> ker = c.d(n).kernel_basis();
  for (const auto& [m, t] : c.terms) {
    if (m < n) {
      r.terms.emplace(m, t);
      inc.emplace(m, Matrix<K>::identity(t.dim));
    } else if (m == n && ker.cols() > 0) {
      r.terms.emplace(n, submodule(c.term(n), ker));
      inc.emplace(n, ker);
    }
  }
  for (const auto& [m, dm] : c.diff) {
    if (m < n - 1) r.diff.emplace(m, dm);
    else if (m == n - 1 && ker.cols() > 0) {
      auto cd = coords_in(ker, dm);
      if (!cd) throw std::logic_error("differential image escapes kernel");
      r.diff.emplace(m, *cd);
    }
  }
  detail::normalize_complex(r);
  return {std::move(r), c, std::move(inc)};
}

// Canonical truncation t>=n: boundary term becomes coker d^{n-1}. Returned
// with the projection from c.
template <class K>
ChainMap<K> truncate_below(const BoundedComplex<K>& c, int n) {
  BoundedComplex<K> r{c.algebra, c.side, {}, {}};
  std::map<int, Matrix<K>> proj;
  QuotientModule<K> cok = c.dim_at(n) == 0
                              ? QuotientModule<K>{zero_module(c.algebra, c.side),
                                                  {Matrix<K>(0, 0), Matrix<K>(0, 0)}}
                              : quotient_module(c.term(n), c.d(n - 1));
  for (const auto& [m, t] : c.terms) {
    if (m > n) {
      r.terms.emplace(m, t);
      proj.emplace(m, Matrix<K>::identity(t.dim));
    } else if (m == n && cok.rep.dim > 0) {
      r.terms.emplace(n, cok.rep);
      proj.emplace(n, cok.space.proj);
    }
  }
  for (const auto& [m, dm] : c.diff) {
    if (m > n) r.diff.emplace(m, dm);
    else if (m == n && cok.rep.dim > 0) r.diff.emplace(n, dm * cok.space.lift);
  }
  detail::normalize_complex(r);
  return {c, std::move(r), std::move(proj)};
}

// Induced maps on truncations.
template <class K>
ChainMap<K> truncate_map_above(const ChainMap<K>& f, int n) {
  ChainMap<K> si = truncate_above(f.src, n), ti = truncate_above(f.tgt, n);
  std::map<int, Matrix<K>> comp;
  for (const auto& [m, t] : si.src.terms) {
    if (m < n) comp.emplace(m, f.at(m));
    else if (m == n) {
      auto cd = coords_in(ti.components.count(n) ? ti.components.at(n)
                                                 : Matrix<K>(f.tgt.dim_at(n), 0),
                          f.at(n) * si.components.at(n));
      if (!cd) throw std::logic_error("map does not respect kernels");
      comp.emplace(n, *cd);
    }
  }
  return make_chain_map(si.src, ti.src, std::move(comp));
}

template <class K>
ChainMap<K> truncate_map_below(const ChainMap<K>& f, int n) {
  ChainMap<K> sp = truncate_below(f.src, n), tp = truncate_below(f.tgt, n);
  std::map<int, Matrix<K>> comp;
  for (const auto& [m, t] : sp.tgt.terms) {
    if (m > n) comp.emplace(m, f.at(m));
    else if (m == n) {
      // induced map on cokernels: project(f(lift(x)))
      Matrix<K> lift_s(f.src.dim_at(n), sp.tgt.dim_at(n));
      // recover lift from the projection's right inverse structure: use
      // coords via solve on proj
      auto l = sp.at(n).solve(Matrix<K>::identity(sp.tgt.dim_at(n)));
      if (!l) throw std::logic_error("cokernel projection not surjective");
      comp.emplace(n, tp.at(n) * f.at(n) * *l);
    }
  }
  return make_chain_map(sp.tgt, tp.tgt, std::move(comp));
}

// A chain map is a quasi-isomorphism iff its cone is acyclic.
template <class K>
bool is_quasi_isomorphism(const ChainMap<K>& f) {
  return is_acyclic(cone(f));
}

// ---------------------------------------------------------------------------
// Bicomplexes and totalization.

// Terms C^{p,q} with horizontal dh: (p,q)->(p+1,q) and vertical
// dv: (p,q)->(p,q+1); squares commute. The totalization twists dv by (-1)^p.
template <class K>
struct Bicomplex {
  AlgebraPtr<K> algebra;
  Side side = Side::Left;
  std::map<std::pair<int, int>, ModuleRep<K>> terms;
  std::map<std::pair<int, int>, Matrix<K>> dh, dv;

  std::size_t dim_at(int p, int q) const {
    auto it = terms.find({p, q});
    return it == terms.end() ? 0 : it->second.dim;
  }
  Matrix<K> h(int p, int q) const {
    auto it = dh.find({p, q});
    return it == dh.end() ? Matrix<K>(dim_at(p + 1, q), dim_at(p, q)) : it->second;
  }
  Matrix<K> v(int p, int q) const {
    auto it = dv.find({p, q});
    return it == dv.end() ? Matrix<K>(dim_at(p, q + 1), dim_at(p, q)) : it->second;
  }
};

template <class K>
void validate_bicomplex(const Bicomplex<K>& b) {
  for (const auto& [pq, t] : b.terms) {
    auto [p, q] = pq;
    if (!(b.h(p + 1, q) * b.h(p, q)).is_zero()) throw std::invalid_argument("rows not complexes");
    if (!(b.v(p, q + 1) * b.v(p, q)).is_zero()) throw std::invalid_argument("columns not complexes");
    if (b.v(p + 1, q) * b.h(p, q) != b.h(p, q + 1) * b.v(p, q))
      throw std::invalid_argument("bicomplex squares do not commute");
  }
}

template <class K>
BoundedComplex<K> totalize(const Bicomplex<K>& b) {
  validate_bicomplex(b);
  // collect degrees
  std::map<int, std::vector<std::pair<int, int>>> diag;  // total degree -> (p,q) sorted by p
  for (const auto& [pq, t] : b.terms)
    if (t.dim > 0) diag[pq.first + pq.second].push_back(pq);
  for (auto& [n, v] : diag) std::sort(v.begin(), v.end());
  std::map<std::pair<int, int>, std::size_t> offset;
  BoundedComplex<K> r{b.algebra, b.side, {}, {}};
  for (const auto& [n, v] : diag) {
    ModuleRep<K> t = zero_module(b.algebra, b.side);
    for (const auto& pq : v) {
      offset[pq] = t.dim;
      t = direct_sum(t, b.terms.at(pq));
    }
    r.terms.emplace(n, std::move(t));
  }
  for (const auto& [n, v] : diag) {
    if (!diag.count(n + 1)) continue;
    Matrix<K> d(r.dim_at(n + 1), r.dim_at(n));
    auto put = [&](const Matrix<K>& blockm, std::size_t ro, std::size_t co, bool negate) {
      for (std::size_t i = 0; i < blockm.rows(); ++i)
        for (std::size_t j = 0; j < blockm.cols(); ++j)
          d.at(ro + i, co + j) = negate ? -blockm.at(i, j) : blockm.at(i, j);
    };
    for (const auto& pq : v) {
      auto [p, q] = pq;
      if (b.dim_at(p + 1, q) > 0 && offset.count({p + 1, q}))
        put(b.h(p, q), offset.at({p + 1, q}), offset.at(pq), false);
      if (b.dim_at(p, q + 1) > 0 && offset.count({p, q + 1}))
        put(b.v(p, q), offset.at({p, q + 1}), offset.at(pq), p % 2 != 0);
    }
    if (!d.is_zero()) r.diff.emplace(n, std::move(d));
  }
  detail::normalize_complex(r);
  // the sign twist makes d.d = 0; verify through the constructor
  return make_complex(r.algebra, r.side, std::move(r.terms), std::move(r.diff));
}

}  // namespace homalg
