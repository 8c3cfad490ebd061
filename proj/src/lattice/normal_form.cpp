// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <optional>

#include "vgbs/lattice.hpp"

namespace vgbs {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Apply the column operation to both the working matrix and the transform.
struct ColumnOps {
  IntMatrix& h;
  IntMatrix& v;
  void swap(std::size_t a, std::size_t b) {
    h.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  void add(std::size_t dst, std::size_t src, const Int& f) {
    h.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }
  void negate(std::size_t j) {
    h.negate_col(j);
    v.negate_col(j);
  }
};

std::optional<std::size_t> smallest_in_row(const IntMatrix& h, std::size_t i,
                                           std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t j = from; j < h.cols(); ++j) {
    if (h(i, j) == 0) continue;
    if (!best || abs(h(i, j)) < abs(h(i, *best))) best = j;
  }
  return best;
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix v = IntMatrix::identity(a.cols());
  ColumnOps ops{h, v};
  std::size_t pc = 0;
  for (std::size_t i = 0; i < h.rows() && pc < h.cols(); ++i) {
    for (;;) {
      auto j = smallest_in_row(h, i, pc);
      if (!j) break;
      ops.swap(pc, *j);
      bool clear = true;
      for (std::size_t k = pc + 1; k < h.cols(); ++k) {
        if (h(i, k) == 0) continue;
        ops.add(k, pc, -floor_div(h(i, k), h(i, pc)));
        if (h(i, k) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(i, pc) == 0) continue;
    if (h(i, pc) < 0) ops.negate(pc);
    for (std::size_t k = 0; k < pc; ++k)
      ops.add(k, pc, -floor_div(h(i, k), h(i, pc)));
    ++pc;
  }
  return ColumnEchelon{h.column_range(0, pc), std::move(v), pc};
}

Vector SmithForm::diagonal() const {
  Vector d;
  for (std::size_t i = 0; i < S.rows() && i < S.cols(); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    s.swap_rows(x, y);
    u.swap_rows(x, y);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    s.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  };
  ColumnOps cols{s, v};

  for (std::size_t t = 0; t < m && t < n; ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (s(i, j) != 0 && (!pivot || abs(s(i, j)) < abs(s(pivot->first, pivot->second))))
          pivot = {i, j};
    if (!pivot) break;
    swap_rows(t, pivot->first);
    cols.swap(t, pivot->second);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        add_row(i, t, -floor_div(s(i, t), s(t, t)));
        if (s(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        cols.add(j, t, -floor_div(s(t, j), s(t, t)));
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A nonzero remainder is smaller than the pivot; move it in.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t + 1; i < m; ++i)
          if (s(i, t) != 0 && (!best || abs(s(i, t)) < abs(s(best->first, best->second))))
            best = {i, t};
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(t, j) != 0 && (!best || abs(s(t, j)) < abs(s(best->first, best->second))))
            best = {t, j};
        swap_rows(t, best->first);
        cols.swap(t, best->second);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      add_row(t, *offender, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithForm{std::move(s), UnimodularAuto(std::move(u)), UnimodularAuto(std::move(v))};
}

}  // namespace vgbs
