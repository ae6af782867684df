#pragma once

#include <functional>
#include <optional>
#include <random>

#include "homalg/algebra.hpp"

namespace homalg {

enum class Side { Left, Right };

inline Side other_side(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct UnsupportedAlgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-dimensional module given by one action matrix per algebra basis
// element. act(a) is the operator of a regardless of side; for left modules
// act(ab) = act(a)act(b), for right modules act(ab) = act(b)act(a)
// (m.(ab) = (m.a).b means b's operator is applied last).
template <class K>
struct ModuleRep {
  AlgebraPtr<K> algebra;
  Side side = Side::Left;
  std::size_t dim = 0;
  std::vector<Matrix<K>> action;

  const Matrix<K>& act_basis(std::size_t i) const { return action[i]; }
  Matrix<K> act(const std::vector<K>& a) const {
    Matrix<K> m(dim, dim);
    for (std::size_t i = 0; i < algebra->dim(); ++i)
      if (!is_zero(a[i])) m = m + action[i].scaled(a[i]);
    return m;
  }
  bool operator==(const ModuleRep& o) const {
    return *algebra == *o.algebra && side == o.side && dim == o.dim && action == o.action;
  }
};

template <class K>
ModuleRep<K> make_module(AlgebraPtr<K> algebra, Side side, std::size_t dim,
                         std::vector<Matrix<K>> action) {
  ModuleRep<K> m{std::move(algebra), side, dim, std::move(action)};
  const auto& a = *m.algebra;
  if (m.action.size() != a.dim()) throw std::invalid_argument("one action matrix per basis element required");
  for (const auto& mat : m.action)
    if (mat.rows() != dim || mat.cols() != dim) throw std::invalid_argument("action matrix shape mismatch");
  if (m.act(a.unit()) != Matrix<K>::identity(dim))
    throw std::invalid_argument("unit must act as identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix<K> lhs = side == Side::Left ? m.action[i] * m.action[j] : m.action[j] * m.action[i];
      Matrix<K> rhs(dim, dim);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!is_zero(a.c(i, j, k))) rhs = rhs + m.action[k].scaled(a.c(i, j, k));
      if (lhs != rhs)
        throw std::invalid_argument("action is not a module structure at basis pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return m;
}

template <class K>
ModuleRep<K> zero_module(AlgebraPtr<K> algebra, Side side) {
  std::vector<Matrix<K>> act(algebra->dim(), Matrix<K>(0, 0));
  return {std::move(algebra), side, 0, std::move(act)};
}

template <class K>
ModuleRep<K> regular_module(const AlgebraPtr<K>& algebra, Side side) {
  std::vector<Matrix<K>> act(algebra->dim());
  for (std::size_t i = 0; i < algebra->dim(); ++i)
    act[i] = side == Side::Left ? algebra->left_mult_basis(i) : algebra->right_mult_basis(i);
  return {algebra, side, algebra->dim(), std::move(act)};
}

template <class K>
ModuleRep<K> direct_sum(const ModuleRep<K>& m, const ModuleRep<K>& n) {
  if (!(*m.algebra == *n.algebra) || m.side != n.side)
    throw std::invalid_argument("direct sum needs matching algebra and side");
  std::vector<Matrix<K>> act(m.algebra->dim());
  for (std::size_t i = 0; i < act.size(); ++i) {
    Matrix<K> b(m.dim + n.dim, m.dim + n.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) b.at(r, c) = m.action[i].at(r, c);
    for (std::size_t r = 0; r < n.dim; ++r)
      for (std::size_t c = 0; c < n.dim; ++c) b.at(m.dim + r, m.dim + c) = n.action[i].at(r, c);
    act[i] = std::move(b);
  }
  return {m.algebra, m.side, m.dim + n.dim, std::move(act)};
}

template <class K>
ModuleRep<K> free_module(const AlgebraPtr<K>& algebra, Side side, std::size_t rank) {
  ModuleRep<K> f = zero_module(algebra, side);
  for (std::size_t i = 0; i < rank; ++i) f = direct_sum(f, regular_module(algebra, side));
  return f;
}

// k-linear dual with the transposed action; swaps the side.
template <class K>
ModuleRep<K> dual(const ModuleRep<K>& m) {
  std::vector<Matrix<K>> act(m.action.size());
  for (std::size_t i = 0; i < act.size(); ++i) act[i] = m.action[i].transpose();
  return {m.algebra, other_side(m.side), m.dim, std::move(act)};
}

// A right A-module is a left module over the opposite algebra (same
// operators), and conversely.
template <class K>
ModuleRep<K> over_opposite(const ModuleRep<K>& m) {
  return {opposite(m.algebra), other_side(m.side), m.dim, m.action};
}

// Basis of the space of module homomorphisms m -> n, as matrices
// (n.dim x m.dim). Kernel of one assembled intertwiner system.
template <class K>
std::vector<Matrix<K>> hom_space(const ModuleRep<K>& m, const ModuleRep<K>& n) {
  if (!(*m.algebra == *n.algebra) || m.side != n.side)
    throw std::invalid_argument("hom_space needs matching algebra and side");
  std::size_t na = m.algebra->dim();
  // row-major vec: vec(A X) = (A kron I) vec X, vec(X B) = (I kron B^T) vec X
  Matrix<K> sys(0, n.dim * m.dim);
  for (std::size_t i = 0; i < na; ++i) {
    Matrix<K> block = n.action[i].kronecker(Matrix<K>::identity(m.dim)) -
                      Matrix<K>::identity(n.dim).kronecker(m.action[i].transpose());
    sys = sys.rows() == 0 ? block : sys.vstack(block);
  }
  Matrix<K> ker = m.dim * n.dim == 0 ? Matrix<K>(0, 0) : sys.kernel_basis();
  std::vector<Matrix<K>> out;
  for (std::size_t j = 0; j < ker.cols(); ++j)
    out.push_back(Matrix<K>::from_vectorized(ker.column(j), n.dim, m.dim));
  return out;
}

template <class K>
bool is_intertwiner(const ModuleRep<K>& m, const ModuleRep<K>& n, const Matrix<K>& f) {
  for (std::size_t i = 0; i < m.algebra->dim(); ++i)
    if (f * m.action[i] != n.action[i] * f) return false;
  return true;
}

// Smallest submodule containing the given columns; returns an independent
// spanning set of columns.
template <class K>
Matrix<K> spin(const ModuleRep<K>& m, const Matrix<K>& generators) {
  Matrix<K> span = column_basis(generators);
  while (true) {
    Matrix<K> next = span;
    for (std::size_t i = 0; i < m.algebra->dim(); ++i) next = next.hstack(m.action[i] * span);
    next = column_basis(next);
    if (next.cols() == span.cols()) return next;
    span = next;
  }
}

// Module structure on an invariant column span; `basis` must already be
// closed under the action.
template <class K>
ModuleRep<K> submodule(const ModuleRep<K>& m, const Matrix<K>& basis) {
  std::vector<Matrix<K>> act(m.action.size());
  for (std::size_t i = 0; i < act.size(); ++i) {
    auto c = coords_in(basis, m.action[i] * basis);
    if (!c) throw std::invalid_argument("column span is not action-invariant");
    act[i] = *c;
  }
  return {m.algebra, m.side, basis.cols(), std::move(act)};
}

template <class K>
struct QuotientModule {
  ModuleRep<K> rep;
  QuotientSpace<K> space;  // proj: quotient <- ambient; lift: section
};

// Quotient by the submodule generated by the given columns.
template <class K>
QuotientModule<K> quotient_module(const ModuleRep<K>& m, const Matrix<K>& generators) {
  Matrix<K> sub = spin(m, generators);
  QuotientSpace<K> q = quotient_by(sub, m.dim);
  std::vector<Matrix<K>> act(m.action.size());
  for (std::size_t i = 0; i < act.size(); ++i) act[i] = q.proj * m.action[i] * q.lift;
  return {{m.algebra, m.side, q.dim(), std::move(act)}, std::move(q)};
}

// Largest semisimple quotient: m / rad(A)m (or m.rad(A) on the right).
template <class K>
QuotientModule<K> top(const ModuleRep<K>& m) {
  Matrix<K> rad = m.algebra->radical_basis();
  Matrix<K> gen(m.dim, 0);
  for (std::size_t j = 0; j < rad.cols(); ++j) {
    std::vector<K> r(m.algebra->dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = rad.at(i, j);
    gen = gen.hstack(m.act(r));
  }
  return quotient_module(m, gen);
}

template <class K>
struct FreeCover {
  ModuleRep<K> cover;
  Matrix<K> eps;  // m.dim x cover.dim, surjective intertwiner cover -> m
};

// Free module on lifts of a basis of top(m), with its surjection onto m.
template <class K>
FreeCover<K> free_cover(const ModuleRep<K>& m) {
  QuotientModule<K> t = top(m);
  Matrix<K> gens = t.space.lift;  // one generator per top basis vector
  std::size_t g = gens.cols(), na = m.algebra->dim();
  ModuleRep<K> f = free_module(m.algebra, m.side, g);
  Matrix<K> eps(m.dim, g * na);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t i = 0; i < na; ++i) {
      Matrix<K> img = m.action[i] * gens.column(j);
      for (std::size_t r = 0; r < m.dim; ++r) eps.at(r, j * na + i) = img.at(r, 0);
    }
  }
  return {std::move(f), std::move(eps)};
}

// Expresses the target matrix as a combination of the hom basis applied
// through `post`: finds f in span(homs) with post_compose(f) == target.
template <class K>
std::optional<Matrix<K>> combination_solving(const std::vector<Matrix<K>>& homs,
                                             const std::function<Matrix<K>(const Matrix<K>&)>& post,
                                             const Matrix<K>& target) {
  if (homs.empty()) return target.is_zero() ? std::optional<Matrix<K>>(Matrix<K>(0, 0)) : std::nullopt;
  Matrix<K> sys(target.rows() * target.cols(), homs.size());
  for (std::size_t j = 0; j < homs.size(); ++j) {
    Matrix<K> v = post(homs[j]).vectorized();
    for (std::size_t r = 0; r < v.rows(); ++r) sys.at(r, j) = v.at(r, 0);
  }
  auto coef = sys.solve(target.vectorized());
  if (!coef) return std::nullopt;
  Matrix<K> f(homs[0].rows(), homs[0].cols());
  for (std::size_t j = 0; j < homs.size(); ++j)
    if (!is_zero(coef->at(j, 0))) f = f + homs[j].scaled(coef->at(j, 0));
  return f;
}

// Projectivity = the free cover splits.
template <class K>
bool is_projective(const ModuleRep<K>& m) {
  if (m.dim == 0) return true;
  FreeCover<K> fc = free_cover(m);
  auto homs = hom_space(m, fc.cover);
  auto s = combination_solving<K>(homs, [&](const Matrix<K>& h) { return fc.eps * h; },
                                  Matrix<K>::identity(m.dim));
  return s.has_value();
}

template <class K>
bool is_injective(const ModuleRep<K>& m) {
  return is_projective(dual(m));
}

// Searches for an invertible intertwiner. Complete for dim mismatch and empty
// hom spaces; otherwise a bounded deterministic-plus-seeded search, so a
// nullopt is "not found", never a disproof used as a certificate of failure.
template <class K>
std::optional<Matrix<K>> find_isomorphism(const ModuleRep<K>& m, const ModuleRep<K>& n) {
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return Matrix<K>(0, 0);
  auto homs = hom_space(m, n);
  if (homs.empty()) return std::nullopt;
  for (const auto& h : homs)
    if (h.is_invertible()) return h;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long long> coef(FieldTraits<K>::characteristic() == 0 ? -4 : 0,
                                                FieldTraits<K>::characteristic() == 0
                                                    ? 4
                                                    : FieldTraits<K>::characteristic() - 1);
  for (int t = 0; t < 400; ++t) {
    Matrix<K> f(n.dim, m.dim);
    for (const auto& h : homs) f = f + h.scaled(K(coef(rng)));
    if (f.is_invertible()) return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Algebra homomorphisms and restriction of scalars.

template <class K>
struct AlgebraHom {
  AlgebraPtr<K> src, tgt;
  Matrix<K> map;  // tgt.dim x src.dim, columns are images of src basis

  std::vector<K> apply(const std::vector<K>& x) const {
    std::vector<K> out(tgt->dim(), K(0));
    for (std::size_t i = 0; i < src->dim(); ++i)
      if (!is_zero(x[i]))
        for (std::size_t r = 0; r < tgt->dim(); ++r) out[r] += map.at(r, i) * x[i];
    return out;
  }
};

template <class K>
AlgebraHom<K> make_algebra_hom(AlgebraPtr<K> src, AlgebraPtr<K> tgt, Matrix<K> map) {
  AlgebraHom<K> h{std::move(src), std::move(tgt), std::move(map)};
  if (h.map.rows() != h.tgt->dim() || h.map.cols() != h.src->dim())
    throw std::invalid_argument("algebra hom shape mismatch");
  if (h.apply(h.src->unit()) != h.tgt->unit())
    throw std::invalid_argument("algebra map does not preserve the unit");
  for (std::size_t i = 0; i < h.src->dim(); ++i)
    for (std::size_t j = 0; j < h.src->dim(); ++j) {
      auto lhs = h.apply(h.src->product(h.src->basis_vector(i), h.src->basis_vector(j)));
      auto rhs = h.tgt->product(h.apply(h.src->basis_vector(i)), h.apply(h.src->basis_vector(j)));
      if (lhs != rhs)
        throw std::invalid_argument("algebra map is not multiplicative at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    }
  return h;
}

// The underlying src-module of a module over tgt.
template <class K>
ModuleRep<K> restrict_along(const AlgebraHom<K>& phi, const ModuleRep<K>& m) {
  if (!(*m.algebra == *phi.tgt)) throw std::invalid_argument("restriction algebra mismatch");
  std::vector<Matrix<K>> act(phi.src->dim());
  for (std::size_t i = 0; i < act.size(); ++i) act[i] = m.act(phi.apply(phi.src->basis_vector(i)));
  return {phi.src, m.side, m.dim, std::move(act)};
}

// ---------------------------------------------------------------------------
// Bimodules, stored as left modules over the enveloping algebra A (x) B^op.

template <class K>
struct BimoduleRep {
  AlgebraPtr<K> left_algebra, right_algebra;
  ModuleRep<K> carrier;  // left module over enveloping(left_algebra, right_algebra)

  std::size_t dim() const { return carrier.dim; }

  Matrix<K> left_act_basis(std::size_t i) const {
    Matrix<K> m(dim(), dim());
    const auto& ub = right_algebra->unit();
    for (std::size_t j = 0; j < right_algebra->dim(); ++j)
      if (!is_zero(ub[j])) m = m + carrier.action[i * right_algebra->dim() + j].scaled(ub[j]);
    return m;
  }
  Matrix<K> right_act_basis(std::size_t j) const {
    Matrix<K> m(dim(), dim());
    const auto& ua = left_algebra->unit();
    for (std::size_t i = 0; i < left_algebra->dim(); ++i)
      if (!is_zero(ua[i])) m = m + carrier.action[i * right_algebra->dim() + j].scaled(ua[i]);
    return m;
  }

  ModuleRep<K> left_view() const {
    std::vector<Matrix<K>> act(left_algebra->dim());
    for (std::size_t i = 0; i < act.size(); ++i) act[i] = left_act_basis(i);
    return {left_algebra, Side::Left, dim(), std::move(act)};
  }
  ModuleRep<K> right_view() const {
    std::vector<Matrix<K>> act(right_algebra->dim());
    for (std::size_t j = 0; j < act.size(); ++j) act[j] = right_act_basis(j);
    return {right_algebra, Side::Right, dim(), std::move(act)};
  }
};

template <class K>
BimoduleRep<K> make_bimodule(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b, std::size_t dim,
                             const std::vector<Matrix<K>>& left_action,
                             const std::vector<Matrix<K>>& right_action) {
  AlgebraPtr<K> env = enveloping(a, b);
  ModuleRep<K> lm = make_module(a, Side::Left, dim, left_action);
  ModuleRep<K> rm = make_module(b, Side::Right, dim, right_action);
  std::vector<Matrix<K>> act(env->dim());
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < b->dim(); ++j)
      act[i * b->dim() + j] = left_action[i] * right_action[j];
  // make_module verifies the enveloping-module law, which includes the
  // commuting of the two one-sided actions
  return {a, b, make_module(env, Side::Left, dim, std::move(act))};
}

// The regular A-A-bimodule.
template <class K>
BimoduleRep<K> regular_bimodule(const AlgebraPtr<K>& a) {
  std::vector<Matrix<K>> l(a->dim()), r(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l[i] = a->left_mult_basis(i);
    r[i] = a->right_mult_basis(i);
  }
  return make_bimodule(a, a, a->dim(), l, r);
}

// k-linear dual of an A-B-bimodule, a B-A-bimodule.
template <class K>
BimoduleRep<K> dual_bimodule(const BimoduleRep<K>& m) {
  std::vector<Matrix<K>> l(m.right_algebra->dim()), r(m.left_algebra->dim());
  for (std::size_t j = 0; j < l.size(); ++j) l[j] = m.right_act_basis(j).transpose();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = m.left_act_basis(i).transpose();
  return make_bimodule(m.right_algebra, m.left_algebra, m.dim(), l, r);
}

// ---------------------------------------------------------------------------
// Simple modules via the semisimple quotient and central eigensplitting.

namespace detail {

template <class K>
std::vector<K> eigenvalue_candidates(const Matrix<K>& z);

template <>
inline std::vector<Fp> eigenvalue_candidates<Fp>(const Matrix<Fp>&) {
  long long p = Fp::modulus();
  if (p > 4096) throw UnsupportedAlgebra("eigenvalue sweep infeasible for this field size");
  std::vector<Fp> out;
  for (long long v = 0; v < p; ++v) out.push_back(Fp(v));
  return out;
}

// Rational eigenvalues of a rational matrix: scale to an integer matrix
// (monic characteristic polynomial), so rational eigenvalues are integer
// divisors of the determinant's constant term.
template <>
inline std::vector<Rational> eigenvalue_candidates<Rational>(const Matrix<Rational>& z) {
  using boost::multiprecision::cpp_int;
  cpp_int den = 1;
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) {
      cpp_int d = boost::multiprecision::denominator(z.at(i, j));
      den = boost::multiprecision::lcm(den, d);
    }
  Matrix<Rational> zi = z.scaled(Rational(den));
  std::vector<Rational> out{Rational(0)};
  // characteristic polynomial coefficients by Faddeev-LeVerrier; the
  // polynomial is monic with integer coefficients, so rational eigenvalues
  // are 0 and integer divisors of the lowest nonzero coefficient
  std::size_t n = zi.rows();
  std::vector<Rational> coef(n + 1);  // coef[j] multiplies x^j
  coef[n] = 1;
  Matrix<Rational> mk = Matrix<Rational>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = zi * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    coef[n - k] = -tr / Rational(k);
    for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += coef[n - k];
  }
  Rational low = 0;
  for (std::size_t j = 0; j <= n; ++j)
    if (!is_zero(coef[j])) { low = coef[j]; break; }
  cpp_int d0 = boost::multiprecision::numerator(low);
  if (d0 < 0) d0 = -d0;
  if (d0 != 0) {
    std::vector<cpp_int> divs;
    cpp_int f = 1;
    const cpp_int limit = 1000000;
    for (; f * f <= d0; ++f) {
      if (f > limit) throw UnsupportedAlgebra("eigenvalue constant term too large to factor");
      if (d0 % f == 0) {
        divs.push_back(f);
        divs.push_back(d0 / f);
      }
    }
    for (const auto& dv : divs) {
      out.push_back(Rational(dv) / Rational(den));
      out.push_back(Rational(-dv) / Rational(den));
    }
  }
  return out;
}

}  // namespace detail

// The simple left modules of a, when the semisimple quotient splits over the
// ground field; otherwise throws UnsupportedAlgebra. The returned list is
// certified: pairwise hom vanishes and the squared dimensions add up to
// dim(a/rad a), which forces each entry to be simple.
template <class K>
std::vector<ModuleRep<K>> simples(const AlgebraPtr<K>& a) {
  ModuleRep<K> reg = regular_module(a, Side::Left);
  QuotientModule<K> t = top(reg);  // a/rad(a) as a left a-module
  ModuleRep<K> sbar = t.rep;
  if (sbar.dim == 0) throw UnsupportedAlgebra("zero semisimple quotient");

  // split into central generalized eigenblocks; central elements of the
  // quotient act as module endomorphisms of sbar
  auto homs = hom_space(sbar, sbar);
  std::vector<Matrix<K>> blocks{Matrix<K>::identity(sbar.dim)};
  for (const auto& z : homs) {
    std::vector<Matrix<K>> next;
    for (const auto& blk : blocks) {
      // restrict z to the block
      // endomorphisms need not commute, so z may fail to preserve an earlier
      // eigenblock; skip it for this block in that case
      auto zc = coords_in(blk, z * blk);
      if (!zc) {
        next.push_back(blk);
        continue;
      }
      std::size_t bd = blk.cols();
      Matrix<K> rest = *zc;
      std::size_t found = 0;
      std::vector<Matrix<K>> eigs;
      for (const K& lambda : detail::eigenvalue_candidates<K>(rest)) {
        Matrix<K> shifted = rest - Matrix<K>::identity(bd).scaled(lambda);
        Matrix<K> pw = Matrix<K>::identity(bd);
        for (std::size_t e = 0; e < bd; ++e) pw = pw * shifted;
        Matrix<K> ker = pw.kernel_basis();
        if (ker.cols() == 0) continue;
        eigs.push_back(column_basis(blk * ker));
        found += ker.cols();
        if (found == bd) break;
      }
      // keep the block whole unless the eigenspaces fully decompose it; a
      // partial split is left for the final certificate to reject
      if (found == bd && eigs.size() > 1)
        for (auto& e : eigs) next.push_back(std::move(e));
      else
        next.push_back(blk);
    }
    blocks = std::move(next);
  }

  // inside each block, descend through spins to a minimal submodule, then
  // collapse isomorphic repeats across blocks
  std::vector<ModuleRep<K>> out;
  for (const auto& blk : blocks) {
    Matrix<K> best = blk;
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (std::size_t j = 0; j < best.cols(); ++j) {
        Matrix<K> s = spin(sbar, best.column(j));
        if (s.cols() > 0 && s.cols() < best.cols()) {
          best = s;
          shrunk = true;
          break;
        }
      }
    }
    ModuleRep<K> cand = submodule(sbar, best);  // still an a-module
    bool dup = false;
    for (const auto& seen : out)
      if (!hom_space(seen, cand).empty()) { dup = true; break; }
    if (!dup) out.push_back(std::move(cand));
  }
  // Certificate that each entry is simple and the list is complete: hom
  // between distinct entries vanishes, each End is one-dimensional, and the
  // squared dimensions exhaust the semisimple quotient. For a semisimple
  // quotient this forces the entries to be exactly its simple modules.
  std::size_t square_sum = 0;
  for (const auto& s : out) square_sum += s.dim * s.dim;
  if (square_sum != sbar.dim)
    throw UnsupportedAlgebra("semisimple quotient does not split over the field");
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) {
      std::size_t h = hom_space(out[i], out[j]).size();
      if (i == j ? h != 1 : h != 0)
        throw UnsupportedAlgebra("semisimple quotient does not split over the field");
    }
  return out;
}

}  // namespace homalg
