// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for the test binaries: seeded draws, fixture loading and
// small oracles that avoid the library's own normal forms.

#ifndef VGBS_TESTS_SUPPORT_HPP
#define VGBS_TESTS_SUPPORT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vgbs/graph.hpp"
#include "vgbs/lattice.hpp"

namespace vgbs::test {

inline std::string data_path(const std::string& name) {
  return std::string(VGBS_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GraphOfGroups fixture(const std::string& name) {
  return parse_graph(read_file(data_path("fixtures/" + name)));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t k) { return rng_() % k; }
  long entry(long bound) { return static_cast<long>(below(2 * bound + 1)) - bound; }

 private:
  std::mt19937_64 rng_;
};

inline IntMatrix random_matrix(Rng& r, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = r.entry(bound);
  return m;
}

// Product of random elementary matrices.
inline IntMatrix random_unimodular(Rng& r, std::size_t n, int steps = 8) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 0) return m;
  for (int s = 0; s < steps; ++s) {
    std::size_t a = r.below(n), b = r.below(n);
    switch (r.below(3)) {
      case 0:
        if (a != b) m.add_col_multiple(a, b, r.entry(2));
        break;
      case 1:
        m.swap_cols(a, b);
        break;
      default:
        m.negate_col(a);
    }
  }
  return m;
}

// Leibniz expansion; exponential, fine for n <= 5.
inline Int leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Int total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Int prod = sign;
    for (std::size_t i = 0; i < n; ++i) prod *= m(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Rank over Q by fraction-valued Gaussian elimination.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline Int gcd_all(const std::vector<Int>& xs) {
  Int g = 0;
  for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

inline IntMatrix col(std::initializer_list<long> v) {
  IntMatrix m(v.size(), 1);
  std::size_t i = 0;
  for (long x : v) m(i++, 0) = x;
  return m;
}

inline Vector vec(std::initializer_list<long> v) {
  Vector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline Edge make_edge(const std::string& id, const std::string& from, const std::string& to,
                      const IntMatrix& att_from, const IntMatrix& att_to) {
  Edge e;
  e.id = id;
  e.from = from;
  e.to = to;
  e.rank = att_from.cols();
  e.att_from = att_from;
  e.att_to = att_to;
  return e;
}

// One abelian vertex of rank n carrying a single loop with the given modulus,
// plus pendant Z vertices attached by index-2 edges landing on `images`.
inline GraphOfGroups loop_graph(const IntMatrix& modulus, const std::vector<Vector>& images = {}) {
  GraphOfGroups g;
  const std::size_t n = modulus.rows();
  g.add_vertex("v", VertexGroup::abelian(n));
  g.add_edge(make_edge("l", "v", "v", IntMatrix::identity(n), modulus));
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::string p = "p" + std::to_string(i + 1);
    g.add_vertex(p, VertexGroup::abelian(1));
    g.add_edge(make_edge("f" + std::to_string(i + 1), "v", p, IntMatrix::from_column(images[i]),
                         IntMatrix{{2}}));
  }
  return g;
}

}  // namespace vgbs::test

#endif  // VGBS_TESTS_SUPPORT_HPP
