#pragma once

// Stock algebras used across tests and the documented examples.

#include "homalg/algebra.hpp"

namespace homalg {

// kA2: path algebra of the quiver 1 -> 2, basis {e1, e2, a}.
template <class K>
AlgebraPtr<K> sample_kA2() {
  Quiver q;
  q.vertices = 2;
  q.arrows = {{0, 1, "a"}};
  return path_algebra<K>(q, {});
}

// k[x]/(x^2): one loop with relation x^2, basis {e1, x}.
template <class K>
AlgebraPtr<K> sample_dual_numbers() {
  Quiver q;
  q.vertices = 1;
  q.arrows = {{0, 0, "x"}};
  return path_algebra<K>(q, {{{{K(1), {"x", "x"}}}}});
}

// Upper-triangular 2x2 matrices, basis {e11, e12, e22}.
template <class K>
AlgebraPtr<K> sample_upper_triangular() {
  const std::size_t n = 3;
  std::vector<K> c(n * n * n, K(0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * n + j) * n + k] = K(1); };
  // 0 = e11, 1 = e12, 2 = e22
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  return make_algebra<K>(n, {"e11", "e12", "e22"}, std::move(c), {K(1), K(0), K(1)});
}

// Group algebra of the two-element group, basis {1, g}. Semisimple over Q,
// local with one-dimensional radical over F_2.
template <class K>
AlgebraPtr<K> sample_c2_group_algebra() {
  const std::size_t n = 2;
  std::vector<K> c(n * n * n, K(0));
  c[(0 * n + 0) * n + 0] = K(1);
  c[(0 * n + 1) * n + 1] = K(1);
  c[(1 * n + 0) * n + 1] = K(1);
  c[(1 * n + 1) * n + 0] = K(1);
  return make_algebra<K>(n, {"1", "g"}, std::move(c), {K(1), K(0)});
}

// Full 2x2 matrix algebra, basis {e11, e12, e21, e22}.
template <class K>
AlgebraPtr<K> sample_mat2() {
  const std::size_t n = 4;
  std::vector<K> c(n * n * n, K(0));
  auto idx = [](std::size_t r, std::size_t s) { return r * 2 + s; };
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t u = 0; u < 2; ++u)
          if (s == t) c[(idx(r, s) * n + idx(t, u)) * n + idx(r, u)] = K(1);
  return make_algebra<K>(n, {"e11", "e12", "e21", "e22"}, std::move(c),
                         {K(1), K(0), K(0), K(1)});
}

}  // namespace homalg
