// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <optional>
#include <utility>
#include <random>

#include "vgbs/error.hpp"
#include "vgbs/generate.hpp"

namespace vgbs {

namespace {

enum class Shape { Generic, Loop, OneOne, TwoTwo };

// Plain modulo draws on the raw engine output; std distributions are not
// guaranteed to agree across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t k) { return k == 0 ? 0 : rng_() % k; }
  long entry(long bound) { return static_cast<long>(below(2 * bound + 1)) - bound; }

 private:
  std::mt19937_64 rng_;
};

bool within(const IntMatrix& m, long bound) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (abs(m(i, j)) > bound) return false;
  return true;
}

IntMatrix signed_permutation(Draw& d, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[d.below(i)]);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(perm[i], i) = d.below(2) ? -1 : 1;
  return m;
}

// Random walk of elementary column operations kept inside the entry bound.
IntMatrix bounded_unimodular(Draw& d, std::size_t n, long bound) {
  IntMatrix m = signed_permutation(d, n);
  if (n < 2) return m;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::size_t dst = d.below(n), src = d.below(n - 1);
    if (src >= dst) ++src;
    long f = d.entry(std::max(1L, bound / 2));
    if (f == 0) continue;
    IntMatrix next = m;
    next.add_col_multiple(dst, src, f);
    if (within(next, bound)) m = std::move(next);
  }
  return m;
}

IntMatrix injective(Draw& d, std::size_t rows, std::size_t cols, long bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = d.entry(bound);
    if (matrix_rank(m) == cols) return m;
  }
  return signed_permutation(d, rows).column_range(0, cols);
}

IntMatrix index_two(Draw& d, std::size_t n, long bound) {
  IntMatrix diag = IntMatrix::identity(n);
  std::size_t k = d.below(n);
  diag(k, k) = 2;
  for (int attempt = 0; attempt < 16; ++attempt) {
    IntMatrix m = bounded_unimodular(d, n, bound) * diag * bounded_unimodular(d, n, bound);
    if (within(m, bound)) return m;
  }
  return diag;
}

Shape pick(Draw& d, const GenParams& p, bool tree) {
  unsigned loop = tree ? 0 : p.weight_loop;
  unsigned one = tree ? 0 : p.weight_one_one;
  unsigned total = p.weight_generic + loop + one + p.weight_two_two;
  if (total == 0) return Shape::Generic;
  unsigned r = static_cast<unsigned>(d.below(total));
  if (r < p.weight_generic) return Shape::Generic;
  r -= p.weight_generic;
  if (r < loop) return Shape::Loop;
  r -= loop;
  if (r < one) return Shape::OneOne;
  return Shape::TwoTwo;
}

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i); }

// Each vertex carries a frame [x | h_1 .. h_{n-1}]. Aligned ends attach inside
// span(h) or respect the splitting, which is what makes loops and 2-2 edges
// collapsible and vertices expandable.
struct Frame {
  IntMatrix basis;
  IntMatrix hyperplane() const { return basis.column_range(1, basis.cols() - 1); }
};

std::optional<IntMatrix> aligned_injective(Draw& d, const Frame& f, std::size_t cols, long bound) {
  const std::size_t n = f.basis.rows();
  if (cols + 1 > n) return std::nullopt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    IntMatrix m = f.hyperplane() * injective(d, n - 1, cols, 1);
    if (within(m, bound) && matrix_rank(m) == cols) return m;
  }
  return std::nullopt;
}

// Modulus U C U^-1 with C = [[e, 0], [p, M]], M finite order (identity when e = -1).
std::optional<IntMatrix> aligned_modulus(Draw& d, const Frame& f, long bound) {
  const std::size_t n = f.basis.rows();
  const UnimodularAuto u(f.basis);
  for (int attempt = 0; attempt < 8; ++attempt) {
    IntMatrix c(n, n);
    const bool flip = d.below(2) == 0;
    c(0, 0) = flip ? -1 : 1;
    IntMatrix m = flip || n == 1 ? IntMatrix::identity(n - 1) : signed_permutation(d, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      c(i, 0) = d.entry(1);
      for (std::size_t j = 1; j < n; ++j) c(i, j) = m(i - 1, j - 1);
    }
    IntMatrix phi = f.basis * c * u.inverse().matrix();
    if (within(phi, bound)) return phi;
  }
  return std::nullopt;
}

// Index-two attachments U D W on both sides: the doubled direction is x and
// W^-1 span(e_2..e_n) maps onto span(h) at each end.
std::optional<std::pair<IntMatrix, IntMatrix>> aligned_two_two(Draw& d, const Frame& fa,
                                                               const Frame& fb, long bound) {
  const std::size_t n = fa.basis.rows();
  IntMatrix diag = IntMatrix::identity(n);
  diag(0, 0) = 2;
  for (int attempt = 0; attempt < 8; ++attempt) {
    IntMatrix w = bounded_unimodular(d, n, 1);
    IntMatrix a = fa.basis * diag * w, b = fb.basis * diag * w;
    if (within(a, bound) && within(b, bound)) return std::pair{a, b};
  }
  return std::nullopt;
}

}  // namespace

GraphOfGroups generate_random(const GenParams& p) {
  if (p.n_vertices == 0) throw Error(ErrorCode::ParamError, "n_vertices must be positive");
  if (p.max_rank == 0) throw Error(ErrorCode::ParamError, "max_rank must be positive");
  if (p.max_entry <= 0) throw Error(ErrorCode::ParamError, "max_entry must be positive");
  if (p.n_edges + 1 < p.n_vertices)
    throw Error(ErrorCode::ParamError, "n_edges must be at least n_vertices - 1");

  if (p.align_percent > 100) throw Error(ErrorCode::ParamError, "align_percent must be at most 100");

  Draw d(p.seed);
  GraphOfGroups g;
  std::vector<std::size_t> rank(p.n_vertices);
  std::vector<Frame> frame(p.n_vertices);
  for (std::size_t i = 0; i < p.n_vertices; ++i) {
    rank[i] = 1 + d.below(p.max_rank);
    frame[i].basis = bounded_unimodular(d, rank[i], p.max_entry);
    g.add_vertex(vertex_name(i), VertexGroup::abelian(rank[i]));
  }
  auto aligned = [&] { return d.below(100) < p.align_percent; };

  for (std::size_t k = 0; k < p.n_edges; ++k) {
    const bool tree = k + 1 < p.n_vertices;
    Shape shape = pick(d, p, tree);
    std::size_t a, b;
    if (tree) {
      a = k + 1;
      b = d.below(k + 1);
    } else {
      a = d.below(p.n_vertices);
      b = (shape == Shape::Loop || shape == Shape::OneOne) ? a : d.below(p.n_vertices);
    }
    if (shape == Shape::TwoTwo && (a == b || rank[a] != rank[b])) {
      // Prefer a partner of equal rank so the shape actually occurs.
      for (std::size_t c = 0; c < p.n_vertices && !tree; ++c)
        if (c != a && rank[c] == rank[a]) {
          b = c;
          break;
        }
      if (a == b || rank[a] != rank[b]) shape = Shape::Generic;
    }

    Edge e;
    e.id = "e" + std::to_string(k);
    e.from = vertex_name(a);
    e.to = vertex_name(b);
    switch (shape) {
      case Shape::OneOne: {
        e.rank = rank[a];
        e.att_from = bounded_unimodular(d, e.rank, p.max_entry);
        std::optional<IntMatrix> phi;
        if (aligned()) phi = aligned_modulus(d, frame[a], p.max_entry);
        std::optional<IntMatrix> to;
        if (phi && within(*phi * e.att_from, p.max_entry)) to = *phi * e.att_from;
        e.att_to = to ? *to : bounded_unimodular(d, e.rank, p.max_entry);
        break;
      }
      case Shape::TwoTwo: {
        e.rank = rank[a];
        std::optional<std::pair<IntMatrix, IntMatrix>> pair;
        if (aligned()) pair = aligned_two_two(d, frame[a], frame[b], p.max_entry);
        if (pair) {
          e.att_from = pair->first;
          e.att_to = pair->second;
        } else {
          e.att_from = index_two(d, e.rank, p.max_entry);
          e.att_to = index_two(d, e.rank, p.max_entry);
        }
        break;
      }
      case Shape::Generic:
      case Shape::Loop: {
        e.rank = 1 + d.below(std::min(rank[a], rank[b]));
        std::optional<IntMatrix> from, to;
        if (aligned()) from = aligned_injective(d, frame[a], e.rank, p.max_entry);
        if (aligned()) to = aligned_injective(d, frame[b], e.rank, p.max_entry);
        e.att_from = from ? *from : injective(d, rank[a], e.rank, p.max_entry);
        e.att_to = to ? *to : injective(d, rank[b], e.rank, p.max_entry);
        break;
      }
    }
    g.add_edge(std::move(e));
  }

  auto diagnostics = validate(g);
  if (!diagnostics.empty())
    throw Error(ErrorCode::Internal, "generated graph is invalid: " + diagnostics.front().message);
  return g;
}

GenParams corpus_params(std::uint64_t seed) {
  GenParams p;
  p.seed = seed;
  p.max_rank = 4;
  p.max_entry = 3;
  p.align_percent = 75;
  p.n_vertices = 1 + seed % 4;
  p.n_edges = (p.n_vertices - 1) + seed % (7 - p.n_vertices);
  return p;
}

}  // namespace vgbs
