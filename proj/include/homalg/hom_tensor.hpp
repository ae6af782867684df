#pragma once

#include "homalg/complex.hpp"

namespace homalg {

// Bounded complex of A-B-bimodules. The carrier view is a complex of left
// modules over the enveloping algebra, which is what gets validated.
template <class K>
struct BimoduleComplex {
  AlgebraPtr<K> left_algebra, right_algebra;
  std::map<int, BimoduleRep<K>> terms;
  std::map<int, Matrix<K>> diff;

  std::size_t dim_at(int n) const {
    auto it = terms.find(n);
    return it == terms.end() ? 0 : it->second.dim();
  }
  BimoduleRep<K> term(int n) const {
    auto it = terms.find(n);
    if (it != terms.end()) return it->second;
    return {left_algebra, right_algebra,
            zero_module(enveloping(left_algebra, right_algebra), Side::Left)};
  }
  Matrix<K> d(int n) const {
    auto it = diff.find(n);
    return it == diff.end() ? Matrix<K>(dim_at(n + 1), dim_at(n)) : it->second;
  }
  BoundedComplex<K> carrier() const {
    AlgebraPtr<K> env = enveloping(left_algebra, right_algebra);
    std::map<int, ModuleRep<K>> t;
    for (const auto& [n, b] : terms) t.emplace(n, b.carrier);
    return {env, Side::Left, std::move(t), diff};
  }
  BoundedComplex<K> left_view() const {
    std::map<int, ModuleRep<K>> t;
    for (const auto& [n, b] : terms) t.emplace(n, b.left_view());
    return {left_algebra, Side::Left, std::move(t), diff};
  }
  BoundedComplex<K> right_view() const {
    std::map<int, ModuleRep<K>> t;
    for (const auto& [n, b] : terms) t.emplace(n, b.right_view());
    return {right_algebra, Side::Right, std::move(t), diff};
  }
};

template <class K>
BimoduleComplex<K> make_bimodule_complex(AlgebraPtr<K> a, AlgebraPtr<K> b,
                                         std::map<int, BimoduleRep<K>> terms,
                                         std::map<int, Matrix<K>> diff) {
  BimoduleComplex<K> c{std::move(a), std::move(b), std::move(terms), std::move(diff)};
  for (const auto& [n, t] : c.terms)
    if (!(*t.left_algebra == *c.left_algebra) || !(*t.right_algebra == *c.right_algebra))
      throw std::invalid_argument("bimodule term algebra mismatch at degree " + std::to_string(n));
  BoundedComplex<K> validated = make_complex(enveloping(c.left_algebra, c.right_algebra),
                                             Side::Left, [&] {
                                               std::map<int, ModuleRep<K>> t;
                                               for (const auto& [n, b] : c.terms)
                                                 t.emplace(n, b.carrier);
                                               return t;
                                             }(), c.diff);
  // drop zero terms consistently with the validated carrier
  for (auto it = c.terms.begin(); it != c.terms.end();)
    it = it->second.dim() == 0 ? c.terms.erase(it) : std::next(it);
  c.diff = validated.diff;
  return c;
}

template <class K>
BimoduleComplex<K> one_term_bimodule_complex(const BimoduleRep<K>& m, int degree = 0) {
  BimoduleComplex<K> c{m.left_algebra, m.right_algebra, {}, {}};
  if (m.dim() > 0) c.terms.emplace(degree, m);
  return c;
}

// A left A-module as an A-k-bimodule (trivial right action), and a right
// B-module as a k-B-bimodule; likewise for complexes.
template <class K>
BimoduleRep<K> as_bimodule(const ModuleRep<K>& m) {
  std::vector<Matrix<K>> triv{Matrix<K>::identity(m.dim)};
  if (m.side == Side::Left) return make_bimodule(m.algebra, ground_field<K>(), m.dim, m.action, triv);
  return make_bimodule(ground_field<K>(), m.algebra, m.dim, triv, m.action);
}

template <class K>
BimoduleComplex<K> as_bimodule_complex(const BoundedComplex<K>& c) {
  AlgebraPtr<K> k = ground_field<K>();
  BimoduleComplex<K> r{c.side == Side::Left ? c.algebra : k,
                       c.side == Side::Left ? k : c.algebra, {}, c.diff};
  for (const auto& [n, t] : c.terms) r.terms.emplace(n, as_bimodule(t));
  return r;
}

// ---------------------------------------------------------------------------
// Total Hom complex. Hom^n = (+)_p Hom(L^p, M^{p+n}), with differential
// (df)_p = d_M f_p - (-1)^n f_{p+1} d_L. Blocks record the chosen basis of
// each Hom space so elements can be moved between the coordinate picture and
// actual matrices.

template <class K>
struct HomBlock {
  int p = 0;                     // maps L^p -> M^{p+n}
  std::size_t offset = 0;        // within the degree-n coordinate space
  std::vector<Matrix<K>> basis;  // matrices M^{p+n}.dim x L^p.dim
};

template <class K>
struct HomComplexResult {
  BoundedComplex<K> complex;
  std::map<int, std::vector<HomBlock<K>>> blocks;

  // matrix of the element with the given degree-n coordinates
  Matrix<K> element(int n, int p, const Matrix<K>& coords) const {
    for (const auto& b : blocks.at(n))
      if (b.p == p) {
        Matrix<K> m(b.basis[0].rows(), b.basis[0].cols());
        for (std::size_t t = 0; t < b.basis.size(); ++t)
          m = m + b.basis[t].scaled(coords.at(b.offset + t, 0));
        return m;
      }
    throw std::invalid_argument("no block at this (degree, p)");
  }
};

namespace detail {

template <class K>
Matrix<K> basis_span(const std::vector<Matrix<K>>& basis) {
  if (basis.empty()) return Matrix<K>(0, 0);
  Matrix<K> s(basis[0].rows() * basis[0].cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Matrix<K> v = basis[j].vectorized();
    for (std::size_t i = 0; i < v.rows(); ++i) s.at(i, j) = v.at(i, 0);
  }
  return s;
}

template <class K>
Matrix<K> coords_of(const std::vector<Matrix<K>>& basis, const Matrix<K>& m) {
  if (basis.empty()) {
    if (!m.is_zero()) throw std::logic_error("matrix outside empty hom basis");
    return Matrix<K>(0, 1);
  }
  auto c = coords_in(basis_span(basis), m.vectorized());
  if (!c) throw std::logic_error("matrix outside hom basis span");
  return *c;
}

// Shared Hom-complex assembly. lterms/ldiff describe the contravariant
// argument (as one-sided modules for hom_space), act(i, p, h) is the operator
// of the i-th basis element of out_alg on a block-p hom matrix h.
template <class K>
HomComplexResult<K> hom_complex_core(
    const std::map<int, ModuleRep<K>>& lterms, const std::function<Matrix<K>(int)>& ldiff,
    const BoundedComplex<K>& m, const AlgebraPtr<K>& out_alg, Side out_side,
    const std::function<Matrix<K>(std::size_t, int, const Matrix<K>&)>& act) {
  HomComplexResult<K> out;
  if (lterms.empty() || m.terms.empty()) {
    out.complex = zero_complex(out_alg, out_side);
    return out;
  }
  int n_lo = m.terms.begin()->first - lterms.rbegin()->first;
  int n_hi = m.terms.rbegin()->first - lterms.begin()->first;
  std::map<int, ModuleRep<K>> terms;
  for (int n = n_lo; n <= n_hi; ++n) {
    std::vector<HomBlock<K>> blks;
    std::size_t off = 0;
    for (const auto& [p, lt] : lterms) {
      if (m.dim_at(p + n) == 0) continue;
      auto basis = hom_space(lt, m.term(p + n));
      if (basis.empty()) continue;
      blks.push_back({p, off, std::move(basis)});
      off += blks.back().basis.size();
    }
    if (off == 0) continue;
    // module structure on the coordinates
    std::vector<Matrix<K>> action(out_alg->dim(), Matrix<K>(off, off));
    for (std::size_t i = 0; i < out_alg->dim(); ++i)
      for (const auto& b : blks)
        for (std::size_t t = 0; t < b.basis.size(); ++t) {
          Matrix<K> img = coords_of(b.basis, act(i, b.p, b.basis[t]));
          for (std::size_t r = 0; r < img.rows(); ++r)
            action[i].at(b.offset + r, b.offset + t) = img.at(r, 0);
        }
    terms.emplace(n, make_module(out_alg, out_side, off, std::move(action)));
    out.blocks.emplace(n, std::move(blks));
  }
  std::map<int, Matrix<K>> diff;
  for (const auto& [n, blks] : out.blocks) {
    if (!out.blocks.count(n + 1)) continue;
    const auto& tblks = out.blocks.at(n + 1);
    Matrix<K> d(terms.at(n + 1).dim, terms.at(n).dim);
    K sign = (n % 2 == 0) ? K(1) : K(-1);
    for (const auto& src : blks) {
      // d_M . f_p lands in the p-block of degree n+1
      for (const auto& tgt : tblks) {
        if (tgt.p == src.p) {
          for (std::size_t t = 0; t < src.basis.size(); ++t) {
            Matrix<K> img = coords_of(tgt.basis, m.d(src.p + n) * src.basis[t]);
            for (std::size_t r = 0; r < img.rows(); ++r)
              d.at(tgt.offset + r, src.offset + t) = d.at(tgt.offset + r, src.offset + t) + img.at(r, 0);
          }
        }
        // -(-1)^n f_{p+1} d_L lands in the (p)-block, from src block p+1
        if (tgt.p == src.p - 1) {
          for (std::size_t t = 0; t < src.basis.size(); ++t) {
            Matrix<K> img = coords_of(tgt.basis, (src.basis[t] * ldiff(src.p - 1)).scaled(-sign));
            for (std::size_t r = 0; r < img.rows(); ++r)
              d.at(tgt.offset + r, src.offset + t) = d.at(tgt.offset + r, src.offset + t) + img.at(r, 0);
          }
        }
      }
    }
    if (!d.is_zero()) diff.emplace(n, std::move(d));
  }
  out.complex = make_complex(out_alg, out_side, std::move(terms), std::move(diff));
  // prune block records for degrees that normalized away
  for (auto it = out.blocks.begin(); it != out.blocks.end();)
    it = out.complex.terms.count(it->first) ? std::next(it) : out.blocks.erase(it);
  return out;
}

}  // namespace detail

// Hom_A(L, M) for a complex L of A-B-bimodules and a complex M of left
// A-modules: a complex of left B-modules, b.f = f(-.b).
template <class K>
HomComplexResult<K> hom_complex(const BimoduleComplex<K>& l, const BoundedComplex<K>& m) {
  if (!(*l.left_algebra == *m.algebra) || m.side != Side::Left)
    throw std::invalid_argument("hom_complex expects left modules over the left algebra");
  std::map<int, ModuleRep<K>> lterms;
  std::map<int, std::vector<Matrix<K>>> rights;
  for (const auto& [p, b] : l.terms) {
    lterms.emplace(p, b.left_view());
    std::vector<Matrix<K>> r(l.right_algebra->dim());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = b.right_act_basis(j);
    rights.emplace(p, std::move(r));
  }
  return detail::hom_complex_core<K>(
      lterms, [&](int p) { return l.d(p); }, m, l.right_algebra, Side::Left,
      [&](std::size_t j, int p, const Matrix<K>& h) { return h * rights.at(p)[j]; });
}

// Hom complex of two complexes over the same algebra and side, as a complex
// of vector spaces over the ground field.
template <class K>
HomComplexResult<K> hom_complex_k(const BoundedComplex<K>& x, const BoundedComplex<K>& y) {
  if (!(*x.algebra == *y.algebra) || x.side != y.side)
    throw std::invalid_argument("hom_complex_k needs matching algebra and side");
  return detail::hom_complex_core<K>(
      x.terms, [&](int p) { return x.d(p); }, y, ground_field<K>(), Side::Left,
      [&](std::size_t, int, const Matrix<K>& h) { return h; });
}

// ---------------------------------------------------------------------------
// Total tensor complex. (L (x)_B N)^n = (+)_{p+q=n} L^p (x)_B N^q, each block
// the quotient of the Kronecker space by the balance relations
// l.b (x) x - l (x) b.x; d(l (x) x) = dl (x) x + (-1)^p l (x) dx.

template <class K>
struct TensorBlock {
  int p = 0, q = 0;        // block L^p (x)_B N^q at total degree p+q
  std::size_t offset = 0;  // within the degree-(p+q) coordinate space
  QuotientSpace<K> space;  // quotient of the (dim L^p * dim N^q) Kronecker space
};

template <class K>
struct TensorComplexResult {
  BoundedComplex<K> complex;
  std::map<int, std::vector<TensorBlock<K>>> blocks;
};

template <class K>
TensorComplexResult<K> tensor_complex(const BimoduleComplex<K>& l, const BoundedComplex<K>& n) {
  if (!(*l.right_algebra == *n.algebra) || n.side != Side::Left)
    throw std::invalid_argument("tensor_complex expects left modules over the right algebra");
  TensorComplexResult<K> out;
  if (l.terms.empty() || n.terms.empty()) {
    out.complex = zero_complex(l.left_algebra, Side::Left);
    return out;
  }
  std::map<int, ModuleRep<K>> terms;
  int lo = l.terms.begin()->first + n.terms.begin()->first;
  int hi = l.terms.rbegin()->first + n.terms.rbegin()->first;
  for (int deg = lo; deg <= hi; ++deg) {
    std::vector<TensorBlock<K>> blks;
    std::size_t off = 0;
    for (const auto& [p, lt] : l.terms) {
      int q = deg - p;
      std::size_t nd = n.dim_at(q);
      if (nd == 0) continue;
      std::size_t ambient = lt.dim() * nd;
      Matrix<K> balance(ambient, 0);
      for (std::size_t j = 0; j < l.right_algebra->dim(); ++j) {
        Matrix<K> rel = lt.right_act_basis(j).kronecker(Matrix<K>::identity(nd)) -
                        Matrix<K>::identity(lt.dim()).kronecker(n.term(q).act_basis(j));
        balance = balance.hstack(rel);
      }
      QuotientSpace<K> qs = quotient_by(balance, ambient);
      if (qs.dim() == 0) continue;
      blks.push_back({p, q, off, std::move(qs)});
      off += blks.back().space.dim();
    }
    if (off == 0) continue;
    std::vector<Matrix<K>> action(l.left_algebra->dim(), Matrix<K>(off, off));
    for (std::size_t i = 0; i < l.left_algebra->dim(); ++i)
      for (const auto& b : blks) {
        Matrix<K> op = b.space.proj *
                       l.term(b.p).left_act_basis(i).kronecker(Matrix<K>::identity(n.dim_at(b.q))) *
                       b.space.lift;
        for (std::size_t r = 0; r < op.rows(); ++r)
          for (std::size_t c = 0; c < op.cols(); ++c)
            action[i].at(b.offset + r, b.offset + c) = op.at(r, c);
      }
    terms.emplace(deg, make_module(l.left_algebra, Side::Left, off, std::move(action)));
    out.blocks.emplace(deg, std::move(blks));
  }
  std::map<int, Matrix<K>> diff;
  for (const auto& [deg, blks] : out.blocks) {
    if (!out.blocks.count(deg + 1)) continue;
    const auto& tblks = out.blocks.at(deg + 1);
    Matrix<K> d(terms.at(deg + 1).dim, terms.at(deg).dim);
    for (const auto& src : blks) {
      for (const auto& tgt : tblks) {
        Matrix<K> op;
        if (tgt.p == src.p + 1 && tgt.q == src.q) {
          op = tgt.space.proj *
               l.d(src.p).kronecker(Matrix<K>::identity(n.dim_at(src.q))) * src.space.lift;
        } else if (tgt.p == src.p && tgt.q == src.q + 1) {
          op = tgt.space.proj *
               Matrix<K>::identity(l.dim_at(src.p)).kronecker(n.d(src.q)) * src.space.lift;
          if (src.p % 2 != 0) op = -op;
        } else {
          continue;
        }
        for (std::size_t r = 0; r < op.rows(); ++r)
          for (std::size_t c = 0; c < op.cols(); ++c)
            d.at(tgt.offset + r, src.offset + c) = d.at(tgt.offset + r, src.offset + c) + op.at(r, c);
      }
    }
    if (!d.is_zero()) diff.emplace(deg, std::move(d));
  }
  out.complex = make_complex(l.left_algebra, Side::Left, std::move(terms), std::move(diff));
  for (auto it = out.blocks.begin(); it != out.blocks.end();)
    it = out.complex.terms.count(it->first) ? std::next(it) : out.blocks.erase(it);
  return out;
}

}  // namespace homalg
