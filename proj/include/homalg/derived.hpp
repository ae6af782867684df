#pragma once

#include "homalg/resolution.hpp"

namespace homalg {

// Acyclicity of the cone restricted to a degree range: the windowed notion of
// quasi-isomorphism used whenever a resolution did not terminate.
template <class K>
bool is_quasi_isomorphism_in_range(const ChainMap<K>& f, std::optional<int> lo,
                                   std::optional<int> hi) {
  BoundedComplex<K> c = cone(f);
  if (c.terms.empty()) return true;
  int from = lo ? *lo : c.min_degree() - 1;
  int to = hi ? *hi : c.max_degree() + 1;
  for (int n = from; n <= to; ++n)
    if (homology_dim(c, n) != 0) return false;
  return true;
}

enum class DerivedStrategy { ResolveFirst, ResolveSecond };

namespace detail {

// A bounded complex of bimodules that are projective on both sides needs no
// replacement at all: Hom_A(l, -) and l (x)_B - both preserve
// quasi-isomorphisms, so adjunction maps can be assembled strictly.
template <class K>
bool termwise_biprojective(const BimoduleComplex<K>& l) {
  for (const auto& [n, t] : l.terms)
    if (!is_projective(t.left_view()) || !is_projective(t.right_view())) return false;
  return true;
}

}  // namespace detail

// A derived Hom or tensor value together with the degree interval in which
// its homology is guaranteed correct for the window used. An unbounded side
// is stored as nullopt; both unbounded means the computation is exact.
template <class K>
struct DerivedResult {
  BoundedComplex<K> complex;
  std::optional<int> trust_min, trust_max;
  DerivedStrategy strategy = DerivedStrategy::ResolveFirst;

  bool exact() const { return !trust_min && !trust_max; }
  bool trusted(int n) const {
    return (!trust_min || n >= *trust_min) && (!trust_max || n <= *trust_max);
  }
};

// RHom_A(l, m) as a complex of left B-modules. ResolveFirst replaces l by a
// resolution with left-A-projective terms; ResolveSecond coresolves m by
// injectives.
template <class K>
DerivedResult<K> rhom(const BimoduleComplex<K>& l, const BoundedComplex<K>& m, ResolutionWindow w,
                      DerivedStrategy s = DerivedStrategy::ResolveFirst) {
  if (l.terms.empty() || m.terms.empty())
    return {zero_complex(l.right_algebra, Side::Left), std::nullopt, std::nullopt, s};
  if (s == DerivedStrategy::ResolveFirst) {
    ProjResolution<K> r = bar_resolution_left(l, w);
    auto lp = bimodule_complex_from_env(l.left_algebra, l.right_algebra, r.complex);
    auto h = hom_complex(lp, m);
    std::optional<int> hi;
    if (!r.terminated) hi = m.min_degree() - r.cutoff - 1;
    return {h.complex, std::nullopt, hi, s};
  }
  InjCoresolution<K> co = injective_coresolution(m, w);
  auto h = hom_complex(l, co.complex);
  std::optional<int> hi;
  if (!co.terminated) hi = co.cutoff - l.terms.rbegin()->first - 1;
  return {h.complex, std::nullopt, hi, s};
}

// l (x)^L_B n as a complex of left A-modules. ResolveFirst replaces l by a
// resolution with right-B-projective terms; ResolveSecond resolves n.
template <class K>
DerivedResult<K> derived_tensor(const BimoduleComplex<K>& l, const BoundedComplex<K>& n,
                                ResolutionWindow w,
                                DerivedStrategy s = DerivedStrategy::ResolveFirst) {
  if (l.terms.empty() || n.terms.empty())
    return {zero_complex(l.left_algebra, Side::Left), std::nullopt, std::nullopt, s};
  if (s == DerivedStrategy::ResolveFirst) {
    ProjResolution<K> r = bar_resolution_right(l, w);
    auto lp = bimodule_complex_from_env(l.left_algebra, l.right_algebra, r.complex);
    auto t = tensor_complex(lp, n);
    std::optional<int> lo;
    if (!r.terminated) lo = r.cutoff + n.terms.rbegin()->first + 1;
    return {t.complex, lo, std::nullopt, s};
  }
  ProjResolution<K> r = projective_resolution(n, w);
  auto t = tensor_complex(l, r.complex);
  std::optional<int> lo;
  if (!r.terminated) lo = r.cutoff + l.terms.rbegin()->first + 1;
  return {t.complex, lo, std::nullopt, s};
}

// Ext^deg_A(l, m) / Tor^B_deg(l, n); nullopt is the typed "window exceeded"
// refusal when no strategy certifies that degree.
template <class K>
std::optional<std::size_t> ext(const BimoduleComplex<K>& l, const BoundedComplex<K>& m, int deg,
                               ResolutionWindow w) {
  for (auto s : {DerivedStrategy::ResolveFirst, DerivedStrategy::ResolveSecond}) {
    DerivedResult<K> r = rhom(l, m, w, s);
    if (r.trusted(deg)) return homology_dim(r.complex, deg);
  }
  return std::nullopt;
}

template <class K>
std::optional<std::size_t> tor(const BimoduleComplex<K>& l, const BoundedComplex<K>& n, int deg,
                               ResolutionWindow w) {
  for (auto s : {DerivedStrategy::ResolveFirst, DerivedStrategy::ResolveSecond}) {
    DerivedResult<K> r = derived_tensor(l, n, w, s);
    if (r.trusted(-deg)) return homology_dim(r.complex, -deg);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Adjunction unit and counit as explicit chain maps.
//
// Counit for E: with J an injective coresolution of E, H = Hom_A(l, J), and
// Q a projective resolution of (a trusted truncation of) H, the evaluation
// x (x) f -> (-1)^{pq} f_p(x) gives a chain map l (x)_B Q -> J. Since E -> J
// and Q -> H are quasi-isomorphisms, the counit of l at E is an isomorphism
// in the derived category iff this composite is a quasi-isomorphism.
template <class K>
struct CounitData {
  ChainMap<K> counit;  // l (x)_B Q -> J
  ChainMap<K> coaug;   // E -> J, quasi-isomorphism within trust
  std::optional<int> trust_min, trust_max;
};

// Unit for F: with Q_F a projective resolution of F, T = l (x)_B Q_F, and J
// an injective coresolution of (a trusted truncation of) T, the coevaluation
// xi -> (x -> (-1)^{pq} gamma(x (x) xi)) gives a chain map Q_F -> Hom_A(l, J).
template <class K>
struct UnitData {
  ChainMap<K> unit;  // Q_F -> Hom_A(l, J)
  ChainMap<K> aug;   // Q_F -> F, quasi-isomorphism within trust
  std::optional<int> trust_min, trust_max;
};

template <class K>
CounitData<K> counit_data(const BimoduleComplex<K>& l, const BoundedComplex<K>& e,
                          ResolutionWindow w) {
  if (l.terms.empty()) throw std::invalid_argument("counit_data requires a nonzero candidate");
  if (e.terms.empty()) {
    BoundedComplex<K> z = zero_complex(l.left_algebra, Side::Left);
    return {make_chain_map(z, z, {}), make_chain_map(e, z, {}), std::nullopt, std::nullopt};
  }
  int p_min = l.terms.begin()->first, p_max = l.terms.rbegin()->first;

  BoundedComplex<K> j;    // injective (or strict) target complex
  ChainMap<K> coaug;      // e -> j
  HomComplexResult<K> h;  // Hom_A(l, j)
  BoundedComplex<K> q;    // complex standing in for a resolution of h
  ChainMap<K> beta;       // q -> h, in h coordinates
  std::optional<int> lo, hi;
  if (detail::termwise_biprojective(l)) {
    // strict route: no replacements needed, trust is unbounded
    j = e;
    coaug = identity_chain_map(e);
    h = hom_complex(l, j);
    q = h.complex;
    beta = identity_chain_map(h.complex);
  } else {
    InjCoresolution<K> co = injective_coresolution(e, w);
    j = co.complex;
    coaug = co.coaugmentation;
    h = hom_complex(l, j);
    std::optional<int> h_trust;
    if (!co.terminated) h_trust = co.cutoff - p_max - 1;

    // resolve only the trusted part of H: untrusted top degrees would pollute
    // the whole resolution, which is built from the top downward
    BoundedComplex<K> h_input = h.complex;
    ChainMap<K> incl = identity_chain_map(h.complex);
    if (h_trust && !h.complex.is_zero() && h.complex.max_degree() > *h_trust) {
      incl = truncate_above(h.complex, *h_trust);
      h_input = incl.src;
    }
    ProjResolution<K> rq = projective_resolution(h_input, w);
    q = rq.complex;
    beta = compose(incl, rq.augmentation);  // Q -> H, in H coordinates
    if (!rq.terminated) lo = rq.cutoff + p_max + 1;
    if (!co.terminated) hi = std::min(co.cutoff - 1, *h_trust + p_min);
  }

  TensorComplexResult<K> x = tensor_complex(l, q);
  std::map<int, Matrix<K>> comps;
  for (const auto& [d, blks] : x.blocks) {
    Matrix<K> cd(j.dim_at(d), x.complex.dim_at(d));
    bool nonzero = false;
    for (const auto& b : blks) {
      // b: block l^{b.p} (x)_B Q^{b.q} of degree d = b.p + b.q
      if (!beta.components.count(b.q) || !h.blocks.count(b.q)) continue;
      const Matrix<K>& alpha = beta.components.at(b.q);
      const HomBlock<K>* hb = nullptr;
      for (const auto& cand : h.blocks.at(b.q))
        if (cand.p == b.p) { hb = &cand; break; }
      if (!hb) continue;
      std::size_t ld = l.dim_at(b.p), qd = q.dim_at(b.q);
      Matrix<K> kron(j.dim_at(d), ld * qd);
      K sign = ((b.p * b.q) % 2 == 0) ? K(1) : K(-1);
      for (std::size_t v = 0; v < qd; ++v) {
        Matrix<K> fp = h.element(b.q, b.p, alpha.column(v)).scaled(sign);
        for (std::size_t u = 0; u < ld; ++u)
          for (std::size_t r = 0; r < kron.rows(); ++r) kron.at(r, u * qd + v) = fp.at(r, u);
      }
      Matrix<K> op = kron * b.space.lift;
      for (std::size_t r = 0; r < op.rows(); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c) {
          cd.at(r, b.offset + c) = op.at(r, c);
          if (!is_zero(op.at(r, c))) nonzero = true;
        }
    }
    if (nonzero) comps.emplace(d, std::move(cd));
  }
  ChainMap<K> counit = make_chain_map(x.complex, j, std::move(comps));
  return {std::move(counit), std::move(coaug), lo, hi};
}

template <class K>
UnitData<K> unit_data(const BimoduleComplex<K>& l, const BoundedComplex<K>& f,
                      ResolutionWindow w) {
  if (l.terms.empty()) throw std::invalid_argument("unit_data requires a nonzero candidate");
  if (f.terms.empty()) {
    BoundedComplex<K> z = zero_complex(l.right_algebra, Side::Left);
    return {make_chain_map(z, z, {}), make_chain_map(z, f, {}), std::nullopt, std::nullopt};
  }
  int p_min = l.terms.begin()->first, p_max = l.terms.rbegin()->first;

  BoundedComplex<K> qf;  // complex standing in for a resolution of f
  ChainMap<K> aug;       // qf -> f
  TensorComplexResult<K> t;
  BoundedComplex<K> j;  // injective (or strict) coresolution of l (x) qf
  ChainMap<K> gamma;    // t -> j
  std::optional<int> lo, hi;
  if (detail::termwise_biprojective(l)) {
    // strict route: no replacements needed, trust is unbounded
    qf = f;
    aug = identity_chain_map(f);
    t = tensor_complex(l, qf);
    j = t.complex;
    gamma = identity_chain_map(t.complex);
  } else {
    ProjResolution<K> rf = projective_resolution(f, w);
    qf = rf.complex;
    aug = rf.augmentation;
    t = tensor_complex(l, qf);
    std::optional<int> t_trust;
    if (!rf.terminated) t_trust = rf.cutoff + p_max + 1;

    // coresolve only the trusted part of T: coresolutions are built from the
    // bottom upward, so untrusted low degrees would pollute everything
    BoundedComplex<K> t_input = t.complex;
    ChainMap<K> proj = identity_chain_map(t.complex);
    if (t_trust && !t.complex.is_zero() && t.complex.min_degree() < *t_trust) {
      proj = truncate_below(t.complex, *t_trust);
      t_input = proj.tgt;
    }
    InjCoresolution<K> co = injective_coresolution(t_input, w);
    j = co.complex;
    gamma = compose(co.coaugmentation, proj);  // T -> J
    if (!co.terminated) hi = co.cutoff - p_max - 1;
    if (!rf.terminated) lo = *t_trust - p_min + 1;
  }
  HomComplexResult<K> h = hom_complex(l, j);

  std::map<int, Matrix<K>> comps;
  for (const auto& [q, blks] : h.blocks) {
    std::size_t qd = qf.dim_at(q);
    if (qd == 0) continue;
    Matrix<K> uq(h.complex.dim_at(q), qd);
    bool nonzero = false;
    for (const auto& hb : blks) {
      int d = hb.p + q;
      if (!gamma.components.count(d) || !t.blocks.count(d)) continue;
      const TensorBlock<K>* tb = nullptr;
      for (const auto& cand : t.blocks.at(d))
        if (cand.p == hb.p && cand.q == q) { tb = &cand; break; }
      if (!tb) continue;
      std::size_t ld = l.dim_at(hb.p);
      const Matrix<K>& gd = gamma.components.at(d);
      Matrix<K> gblk(gd.rows(), tb->space.dim());  // gamma restricted to this block
      for (std::size_t r = 0; r < gd.rows(); ++r)
        for (std::size_t c = 0; c < tb->space.dim(); ++c) gblk.at(r, c) = gd.at(r, tb->offset + c);
      Matrix<K> g = gblk * tb->space.proj;  // kron coords -> J^d
      K sign = ((hb.p * q) % 2 == 0) ? K(1) : K(-1);
      for (std::size_t v = 0; v < qd; ++v) {
        Matrix<K> fp(j.dim_at(d), ld);
        for (std::size_t u = 0; u < ld; ++u)
          for (std::size_t r = 0; r < fp.rows(); ++r) fp.at(r, u) = g.at(r, u * qd + v);
        Matrix<K> coords = detail::coords_of(hb.basis, fp.scaled(sign));
        for (std::size_t r = 0; r < coords.rows(); ++r) {
          uq.at(hb.offset + r, v) = coords.at(r, 0);
          if (!is_zero(coords.at(r, 0))) nonzero = true;
        }
      }
    }
    if (nonzero) comps.emplace(q, std::move(uq));
  }
  ChainMap<K> unit = make_chain_map(qf, h.complex, std::move(comps));
  return {std::move(unit), std::move(aug), lo, hi};
}

// ---------------------------------------------------------------------------
// The DG tensor-Hom adjunction, on the nose: Hom_B(P, Hom_A(l, J)) and
// Hom_A(l (x)_B P, J) are isomorphic complexes of vector spaces via
// f -> (x (x) xi -> (-1)^{pt} f_t(xi)_p(x)), checked degreewise with the
// explicit bijection matrix and differential commutation.
template <class K>
bool dg_adjunction_check(const BimoduleComplex<K>& l, const BoundedComplex<K>& p,
                         const BoundedComplex<K>& j) {
  HomComplexResult<K> inner = hom_complex(l, j);
  HomComplexResult<K> lhs = hom_complex_k(p, inner.complex);
  TensorComplexResult<K> t = tensor_complex(l, p);
  HomComplexResult<K> rhs = hom_complex_k(t.complex, j);

  std::map<int, Matrix<K>> phi;
  for (const auto& [n, lblks] : lhs.blocks) {
    if (lhs.complex.dim_at(n) != rhs.complex.dim_at(n)) return false;
    Matrix<K> pn(rhs.complex.dim_at(n), lhs.complex.dim_at(n));
    for (const auto& lb : lblks) {
      int tdeg = lb.p;  // source degree in P
      for (std::size_t idx = 0; idx < lb.basis.size(); ++idx) {
        const Matrix<K>& ft = lb.basis[idx];  // P^t -> inner^{t+n}, coordinates
        // convert to the right-hand side block by block
        for (const auto& rb : rhs.blocks.count(n) ? rhs.blocks.at(n) : std::vector<HomBlock<K>>{}) {
          int d = rb.p;  // source degree in l (x) P
          if (!t.blocks.count(d)) continue;
          Matrix<K> gd(j.dim_at(d + n), t.complex.dim_at(d));
          bool nonzero = false;
          for (const auto& tb : t.blocks.at(d)) {
            if (tb.q != tdeg) continue;
            if (!inner.blocks.count(tdeg + n)) continue;
            bool have = false;
            for (const auto& ib : inner.blocks.at(tdeg + n))
              if (ib.p == tb.p) { have = true; break; }
            if (!have) continue;
            std::size_t ld = l.dim_at(tb.p), pd = p.dim_at(tdeg);
            Matrix<K> kron(gd.rows(), ld * pd);
            K sign = ((tb.p * tdeg) % 2 == 0) ? K(1) : K(-1);
            for (std::size_t v = 0; v < pd; ++v) {
              Matrix<K> fp = inner.element(tdeg + n, tb.p, ft.column(v)).scaled(sign);
              for (std::size_t u = 0; u < ld; ++u)
                for (std::size_t r = 0; r < kron.rows(); ++r) kron.at(r, u * pd + v) = fp.at(r, u);
            }
            Matrix<K> op = kron * tb.space.lift;
            for (std::size_t r = 0; r < op.rows(); ++r)
              for (std::size_t c = 0; c < op.cols(); ++c) {
                gd.at(r, tb.offset + c) = gd.at(r, tb.offset + c) + op.at(r, c);
                if (!is_zero(op.at(r, c))) nonzero = true;
              }
          }
          if (!nonzero) continue;
          Matrix<K> coords = detail::coords_of(rb.basis, gd);
          for (std::size_t r = 0; r < coords.rows(); ++r)
            pn.at(rb.offset + r, lb.offset + idx) = coords.at(r, 0);
        }
      }
    }
    phi.emplace(n, std::move(pn));
  }
  // symmetric degree check and bijectivity
  for (const auto& [n, tm] : rhs.complex.terms)
    if (lhs.complex.dim_at(n) != tm.dim) return false;
  for (const auto& [n, pn] : phi)
    if (!pn.inverse().has_value()) return false;
  // commutation with the differentials
  for (const auto& [n, pn] : phi) {
    Matrix<K> lhs_d = lhs.complex.d(n), rhs_d = rhs.complex.d(n);
    Matrix<K> pn1 = phi.count(n + 1) ? phi.at(n + 1)
                                     : Matrix<K>(rhs.complex.dim_at(n + 1), lhs.complex.dim_at(n + 1));
    if (!(pn1 * lhs_d == rhs_d * pn)) return false;
  }
  return true;
}

}  // namespace homalg
