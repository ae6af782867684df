#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homalg/matrix.hpp"

namespace homalg {

template <class K>
struct FieldTraits;
template <>
struct FieldTraits<Rational> {
  static long long characteristic() { return 0; }
};
template <>
struct FieldTraits<Fp> {
  static long long characteristic() { return Fp::modulus(); }
};

// Finite-dimensional associative unital algebra given by structure constants:
// e_i e_j = sum_k c(i,j,k) e_k. Associativity and the unit laws are verified
// at construction.
template <class K>
class Algebra {
 public:
  Algebra(std::size_t dim, std::vector<std::string> labels, std::vector<K> constants,
          std::vector<K> unit)
      : dim_(dim), labels_(std::move(labels)), c_(std::move(constants)), unit_(std::move(unit)) {
    if (labels_.size() != dim_) throw std::invalid_argument("label count mismatch");
    if (c_.size() != dim_ * dim_ * dim_) throw std::invalid_argument("structure constant count mismatch");
    if (unit_.size() != dim_) throw std::invalid_argument("unit vector size mismatch");
    validate();
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<K>& unit() const { return unit_; }
  const K& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  std::vector<K> product(const std::vector<K>& x, const std::vector<K>& y) const {
    std::vector<K> r(dim_, K(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        K f = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k) r[k] += f * c(i, j, k);
      }
    }
    return r;
  }

  // Matrix of left multiplication by x on the regular module: column j is x*e_j.
  Matrix<K> left_mult(const std::vector<K>& x) const {
    Matrix<K> m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) += x[i] * c(i, j, k);
    }
    return m;
  }
  Matrix<K> left_mult_basis(std::size_t i) const { return left_mult(basis_vector(i)); }

  // Matrix of right multiplication by x: column j is e_j*x.
  Matrix<K> right_mult(const std::vector<K>& x) const {
    Matrix<K> m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) += x[i] * c(j, i, k);
    }
    return m;
  }
  Matrix<K> right_mult_basis(std::size_t i) const { return right_mult(basis_vector(i)); }

  std::vector<K> basis_vector(std::size_t i) const {
    std::vector<K> v(dim_, K(0));
    v[i] = K(1);
    return v;
  }

  bool operator==(const Algebra& o) const {
    return dim_ == o.dim_ && c_ == o.c_ && unit_ == o.unit_;
  }

  // Basis of the Jacobson radical, as columns. Trace-form kernel in
  // characteristic zero. In characteristic p the plain trace form is blind
  // (e.g. every trace vanishes for a group algebra of order divisible by p),
  // so the condition is iterated: at stage i, lift to integer matrices, take
  // tr((XY)^{p^i}), divide by p^i over the integers, and reduce mod p. These
  // functions are linear on the previous stage and cut out the radical once
  // p^i exceeds the dimension.
  Matrix<K> radical_basis() const {
    long long p = FieldTraits<K>::characteristic();
    Matrix<K> v = Matrix<K>::identity(dim_);  // columns in ambient coordinates
    std::vector<Matrix<K>> lmul(dim_);
    for (std::size_t i = 0; i < dim_; ++i) lmul[i] = left_mult_basis(i);
    auto lmul_of = [&](const Matrix<K>& coords_col) {
      Matrix<K> m(dim_, dim_);
      for (std::size_t i = 0; i < dim_; ++i)
        if (!is_zero(coords_col.at(i, 0))) m = m + lmul[i].scaled(coords_col.at(i, 0));
      return m;
    };

    if (p == 0) {
      Matrix<K> sys(v.cols(), v.cols());
      for (std::size_t yj = 0; yj < v.cols(); ++yj) {
        Matrix<K> ly = lmul_of(v.column(yj));
        for (std::size_t xj = 0; xj < v.cols(); ++xj) {
          Matrix<K> m = lmul_of(v.column(xj)) * ly;
          K tr(0);
          for (std::size_t d = 0; d < dim_; ++d) tr += m.at(d, d);
          sys.at(yj, xj) = tr;
        }
      }
      return column_basis(v * sys.kernel_basis());
    }

    using Int = boost::multiprecision::cpp_int;
    std::size_t n = dim_;
    auto lift = [&](const Matrix<K>& m) {
      std::vector<Int> r(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] = scalar_to_integer(m.at(i, j));
      return r;
    };
    auto imul = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
      std::vector<Int> r(n * n, Int(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          if (a[i * n + k] == 0) continue;
          for (std::size_t j = 0; j < n; ++j) r[i * n + j] += a[i * n + k] * b[k * n + j];
        }
      return r;
    };

    Int q = 1;
    while (true) {
      std::vector<std::vector<Int>> lifted(v.cols());
      for (std::size_t j = 0; j < v.cols(); ++j) lifted[j] = lift(lmul_of(v.column(j)));
      Matrix<K> sys(v.cols(), v.cols());
      for (std::size_t yj = 0; yj < v.cols(); ++yj)
        for (std::size_t xj = 0; xj < v.cols(); ++xj) {
          std::vector<Int> m = imul(lifted[xj], lifted[yj]);
          std::vector<Int> mp = m;
          for (Int e = 1; e < q; ++e) mp = imul(mp, m);
          Int tr = 0;
          for (std::size_t d = 0; d < n; ++d) tr += mp[d * n + d];
          if (tr % q != 0) throw std::logic_error("radical trace divisibility failed");
          sys.at(yj, xj) = K(static_cast<long long>((tr / q) % p));
        }
      v = column_basis(v * sys.kernel_basis());
      q *= p;
      if (q > Int(dim_)) break;
    }
    return v;
  }

 private:
  void validate() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t l = 0; l < dim_; ++l) {
          // (e_i e_j) e_l vs e_i (e_j e_l)
          std::vector<K> lhs(dim_, K(0)), rhs(dim_, K(0));
          for (std::size_t k = 0; k < dim_; ++k) {
            if (!is_zero(c(i, j, k)))
              for (std::size_t m = 0; m < dim_; ++m) lhs[m] += c(i, j, k) * c(k, l, m);
            if (!is_zero(c(j, l, k)))
              for (std::size_t m = 0; m < dim_; ++m) rhs[m] += c(j, l, k) * c(i, k, m);
          }
          if (lhs != rhs)
            throw std::invalid_argument("non-associative structure constants at triple (" +
                                        std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(l) + ")");
        }
    for (std::size_t i = 0; i < dim_; ++i) {
      auto ei = basis_vector(i);
      if (product(unit_, ei) != ei || product(ei, unit_) != ei)
        throw std::invalid_argument("unit law fails at basis element " + std::to_string(i));
    }
  }

  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<K> c_;  // flattened (i*dim + j)*dim + k
  std::vector<K> unit_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

template <class K>
AlgebraPtr<K> make_algebra(std::size_t dim, std::vector<std::string> labels,
                           std::vector<K> constants, std::vector<K> unit) {
  return std::make_shared<const Algebra<K>>(dim, std::move(labels), std::move(constants),
                                            std::move(unit));
}

// The ground field as a one-dimensional algebra.
template <class K>
AlgebraPtr<K> ground_field() {
  return make_algebra<K>(1, {"1"}, {K(1)}, {K(1)});
}

template <class K>
AlgebraPtr<K> opposite(const AlgebraPtr<K>& a) {
  std::size_t n = a->dim();
  std::vector<K> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a->c(j, i, k);
  return make_algebra<K>(n, a->labels(), std::move(c), a->unit());
}

// Enveloping algebra a (x) b^op; basis index (i,j) -> i*dim(b)+j, left-major.
template <class K>
AlgebraPtr<K> enveloping(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
  std::size_t na = a->dim(), nb = b->dim(), n = na * nb;
  std::vector<K> c(n * n * n, K(0));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          for (std::size_t k = 0; k < na; ++k)
            for (std::size_t l = 0; l < nb; ++l) {
              // (e_i (x) f_j)(e_i2 (x) f_j2) = e_i e_i2 (x) f_j2 f_j
              K v = a->c(i, i2, k) * b->c(j2, j, l);
              if (!is_zero(v)) c[((i * nb + j) * n + (i2 * nb + j2)) * n + (k * nb + l)] += v;
            }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      labels[i * nb + j] = a->labels()[i] + "(x)" + b->labels()[j];
  std::vector<K> unit(n, K(0));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a->unit()[i] * b->unit()[j];
  return make_algebra<K>(n, std::move(labels), std::move(c), std::move(unit));
}

// ---------------------------------------------------------------------------
// Path algebras of quivers modulo relations.

struct Quiver {
  struct Arrow {
    std::size_t src, tgt;
    std::string label;
  };
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
};

// A path is a list of arrow indices in traversal order (source to target).
// The algebra product p*q traverses q first, then p (function composition).
struct QuiverPath {
  std::size_t src, tgt;
  std::vector<std::size_t> arrows;  // traversal order
  bool operator<(const QuiverPath& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows != o.arrows) return arrows < o.arrows;
    return src < o.src;
  }
  bool operator==(const QuiverPath& o) const {
    return src == o.src && tgt == o.tgt && arrows == o.arrows;
  }
};

// One relation: a linear combination of parallel paths, each path given by
// arrow labels in traversal order.
template <class K>
struct PathRelation {
  std::vector<std::pair<K, std::vector<std::string>>> terms;
};

namespace detail {

inline std::string path_label(const Quiver& q, const QuiverPath& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.src + 1);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrows[*it].label;
  }
  return s;
}

}  // namespace detail

// Builds the quotient of the path algebra by the two-sided ideal generated by
// the relations. Rejects when the quotient fails to stabilize at a finite
// basis within the path-length cap.
template <class K>
AlgebraPtr<K> path_algebra(const Quiver& quiver, const std::vector<PathRelation<K>>& relations,
                           std::size_t max_path_len = 24) {
  if (quiver.vertices == 0) throw std::invalid_argument("quiver needs at least one vertex");
  for (const auto& a : quiver.arrows)
    if (a.src >= quiver.vertices || a.tgt >= quiver.vertices)
      throw std::invalid_argument("arrow endpoint out of range");

  std::map<std::string, std::size_t> arrow_by_label;
  for (std::size_t i = 0; i < quiver.arrows.size(); ++i) {
    if (arrow_by_label.count(quiver.arrows[i].label))
      throw std::invalid_argument("duplicate arrow label " + quiver.arrows[i].label);
    arrow_by_label[quiver.arrows[i].label] = i;
  }

  auto resolve_path = [&](const std::vector<std::string>& labels) {
    QuiverPath p;
    if (labels.empty()) throw std::invalid_argument("relation term must name at least one arrow");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = arrow_by_label.find(labels[i]);
      if (it == arrow_by_label.end()) throw std::invalid_argument("unknown arrow " + labels[i]);
      const auto& a = quiver.arrows[it->second];
      if (i == 0) {
        p.src = a.src;
      } else if (quiver.arrows[p.arrows.back()].tgt != a.src) {
        throw std::invalid_argument("non-composable relation path at " + labels[i]);
      }
      p.arrows.push_back(it->second);
      p.tgt = a.tgt;
    }
    return p;
  };

  std::vector<std::pair<K, QuiverPath>> rel_terms_scratch;
  std::vector<std::vector<std::pair<K, QuiverPath>>> rels;
  for (const auto& r : relations) {
    std::vector<std::pair<K, QuiverPath>> terms;
    for (const auto& [coef, labels] : r.terms) terms.emplace_back(coef, resolve_path(labels));
    for (const auto& [coef, p] : terms)
      if (!(p.src == terms[0].second.src && p.tgt == terms[0].second.tgt))
        throw std::invalid_argument("relation mixes non-parallel paths");
    rels.push_back(std::move(terms));
  }

  // enumerate paths by length until the quotient basis stabilizes
  for (std::size_t cap = 2; cap <= max_path_len; cap = std::min(cap * 2, max_path_len + 1)) {
    std::vector<QuiverPath> paths;
    for (std::size_t v = 0; v < quiver.vertices; ++v) paths.push_back({v, v, {}});
    std::size_t first_of_prev = 0;
    for (std::size_t len = 1; len <= cap; ++len) {
      std::size_t end_prev = paths.size();
      for (std::size_t pi = first_of_prev; pi < end_prev; ++pi)
        for (std::size_t ai = 0; ai < quiver.arrows.size(); ++ai)
          if (quiver.arrows[ai].src == paths[pi].tgt) {
            QuiverPath np = paths[pi];
            np.arrows.push_back(ai);
            np.tgt = quiver.arrows[ai].tgt;
            paths.push_back(np);
          }
      first_of_prev = end_prev;
      if (paths.size() > 20000) throw std::invalid_argument("path algebra appears infinite-dimensional");
    }
    // order: longer paths first so elimination rewrites long paths into short ones
    std::vector<std::size_t> order(paths.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return paths[y] < paths[x];
    });
    std::map<QuiverPath, std::size_t> col_of;  // path -> column
    std::vector<QuiverPath> by_col;
    for (auto i : order) {
      col_of[paths[i]] = by_col.size();
      by_col.push_back(paths[i]);
    }

    // ideal rows: u * r * v for all composable path sandwiches within the cap
    std::vector<std::vector<K>> rows;
    for (const auto& rel : rels) {
      std::size_t rel_max = 0;
      for (const auto& [c0, p] : rel) rel_max = std::max(rel_max, p.arrows.size());
      const auto rsrc = rel[0].second.src, rtgt = rel[0].second.tgt;
      for (const auto& u : paths) {
        if (u.src != rtgt) continue;
        for (const auto& v : paths) {
          if (v.tgt != rsrc) continue;
          if (u.arrows.size() + rel_max + v.arrows.size() > cap) continue;
          std::vector<K> row(by_col.size(), K(0));
          bool in_range = true;
          for (const auto& [coef, p] : rel) {
            QuiverPath w = v;
            w.arrows.insert(w.arrows.end(), p.arrows.begin(), p.arrows.end());
            w.arrows.insert(w.arrows.end(), u.arrows.begin(), u.arrows.end());
            w.tgt = u.tgt;
            auto it = col_of.find(w);
            if (it == col_of.end()) { in_range = false; break; }
            row[it->second] += coef;
          }
          if (in_range) rows.push_back(std::move(row));
        }
      }
    }
    Matrix<K> ideal(rows.size(), by_col.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < by_col.size(); ++j) ideal.at(i, j) = rows[i][j];
    auto [red, pivots] = ideal.rref();
    std::vector<bool> is_pivot(by_col.size(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> basis_cols;
    std::size_t longest_basis = 0;
    for (std::size_t j = 0; j < by_col.size(); ++j)
      if (!is_pivot[j]) {
        basis_cols.push_back(j);
        longest_basis = std::max(longest_basis, by_col[j].arrows.size());
      }
    // short paths first in the published basis
    std::sort(basis_cols.begin(), basis_cols.end(),
              [&](std::size_t x, std::size_t y) { return by_col[x] < by_col[y]; });
    // stabilized: products of basis paths stay reducible inside the window
    if (2 * longest_basis + 1 <= cap || longest_basis + 1 < cap) {
      // normal form: reduce a path vector by the rref rows
      std::map<std::size_t, std::size_t> pivot_row;  // column -> row
      for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = r;
      std::map<std::size_t, std::size_t> basis_index;  // column -> basis slot
      for (std::size_t s = 0; s < basis_cols.size(); ++s) basis_index[basis_cols[s]] = s;
      std::size_t n = basis_cols.size();

      auto normal_form = [&](const QuiverPath& w) {
        std::vector<K> acc(by_col.size(), K(0));
        auto it = col_of.find(w);
        if (it == col_of.end())
          throw std::logic_error("path escaped the reduction window");
        acc[it->second] = K(1);
        for (std::size_t j = 0; j < by_col.size(); ++j) {
          if (is_zero(acc[j])) continue;
          auto pr = pivot_row.find(j);
          if (pr == pivot_row.end()) continue;
          K f = acc[j];
          for (std::size_t t = j; t < by_col.size(); ++t) acc[t] -= f * red.at(pr->second, t);
        }
        std::vector<K> out(n, K(0));
        for (std::size_t j = 0; j < by_col.size(); ++j)
          if (!is_zero(acc[j])) out[basis_index.at(j)] = acc[j];
        return out;
      };

      std::vector<K> sc(n * n * n, K(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto& pi = by_col[basis_cols[i]];
          const auto& pj = by_col[basis_cols[j]];
          // product pi * pj: traverse pj first
          if (pj.tgt != pi.src) continue;
          QuiverPath w = pj;
          w.arrows.insert(w.arrows.end(), pi.arrows.begin(), pi.arrows.end());
          w.src = pj.src;
          w.tgt = pi.tgt;
          auto nf = normal_form(w);
          for (std::size_t k = 0; k < n; ++k) sc[(i * n + j) * n + k] = nf[k];
        }
      std::vector<std::string> labels(n);
      std::vector<K> unit(n, K(0));
      for (std::size_t s = 0; s < n; ++s) {
        const auto& p = by_col[basis_cols[s]];
        labels[s] = detail::path_label(quiver, p);
        if (p.arrows.empty()) unit[s] = K(1);  // sum of vertex idempotents
      }
      return make_algebra<K>(n, std::move(labels), std::move(sc), std::move(unit));
    }
    if (cap > max_path_len) break;
  }
  throw std::invalid_argument("path algebra quotient did not stabilize (infinite-dimensional?)");
}

}  // namespace homalg
