// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "vgbs/error.hpp"
#include "vgbs/lattice.hpp"

namespace vgbs {
namespace {

using test::col;
using test::vec;

Sublattice span(const IntMatrix& m) { return Sublattice::span(m); }

TEST(HnfBasis, Examples) {
  EXPECT_EQ(hnf_basis(IntMatrix{{1, 0}, {0, 1}}).basis(), IntMatrix::identity(2));
  Sublattice s = hnf_basis(col({2, 4}));
  EXPECT_EQ(s.rank(), 1u);
  EXPECT_EQ(s.basis(), col({2, 4}));
  EXPECT_EQ(hnf_basis(IntMatrix{{2, 1}, {0, 0}}).basis(), col({1, 0}));
}

TEST(HnfBasis, PrunesZeroColumnsAndEmpty) {
  EXPECT_EQ(hnf_basis(IntMatrix{{0, 3}, {0, 6}}).basis(), col({3, 6}));
  Sublattice z = hnf_basis(IntMatrix(3, 0));
  EXPECT_EQ(z.rank(), 0u);
  EXPECT_EQ(z.ambient_rank(), 3u);
}

TEST(HnfBasis, CanonicalUnderUnimodularResampling) {
  test::Rng r(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + r.below(4), k = 1 + r.below(5);
    IntMatrix b = test::random_matrix(r, n, k, 4);
    IntMatrix v = test::random_unimodular(r, k);
    EXPECT_EQ(hnf_basis(b), hnf_basis(b * v)) << b.str();
  }
}

TEST(HnfBasis, ShapeIsLowerEchelonWithReducedPivotRows) {
  test::Rng r(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + r.below(4), k = 1 + r.below(5);
    IntMatrix b = hnf_basis(test::random_matrix(r, n, k, 5)).basis();
    EXPECT_EQ(b.cols(), test::rational_rank(b));
    std::size_t prev = 0;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::size_t p = 0;
      while (b(p, j) == 0) ++p;
      if (j > 0) { EXPECT_GT(p, prev); }
      prev = p;
      EXPECT_GT(b(p, j), 0);
      for (std::size_t l = 0; l < j; ++l) {
        EXPECT_GE(b(p, l), 0);
        EXPECT_LT(b(p, l), b(p, j));
      }
    }
  }
}

TEST(Snf, Examples) {
  EXPECT_EQ(snf(IntMatrix{{2, 0}, {0, 2}}).S, (IntMatrix{{2, 0}, {0, 2}}));
  EXPECT_EQ(snf(IntMatrix{{2, 1}, {1, 0}}).S, IntMatrix::identity(2));
  EXPECT_EQ(snf(IntMatrix{{2, 0}, {0, 3}}).S, (IntMatrix{{1, 0}, {0, 6}}));
}

// Determinantal divisors: d1 = gcd of entries, d1 d2 = gcd of 2x2 minors.
TEST(Snf, AgreesWithDeterminantalDivisors) {
  test::Rng r(13);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t m = 2 + r.below(2), n = 2 + r.below(2);
    IntMatrix a = test::random_matrix(r, m, n, 6);
    SmithForm s = snf(a);
    ASSERT_EQ(s.U.matrix() * a * s.V.matrix(), s.S);
    std::vector<Int> entries, minors;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) entries.push_back(a(i, j));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = i + 1; k < m; ++k)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = j + 1; l < n; ++l)
            minors.push_back(a(i, j) * a(k, l) - a(i, l) * a(k, j));
    Vector d = s.diagonal();
    EXPECT_EQ(d[0], test::gcd_all(entries)) << a.str();
    EXPECT_EQ(d[0] * d[1], test::gcd_all(minors)) << a.str();
  }
}

TEST(Snf, ContractProperties) {
  test::Rng r(14);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t m = 1 + r.below(4), n = 1 + r.below(4);
    IntMatrix a = test::random_matrix(r, m, n, 5);
    SmithForm s = snf(a);
    EXPECT_EQ(s.U.matrix() * a * s.V.matrix(), s.S);
    Vector d = s.diagonal();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) { EXPECT_EQ(s.S(i, j), 0); }
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      EXPECT_GE(d[i], 0);
      if (d[i] == 0) EXPECT_EQ(d[i + 1], 0);
      else EXPECT_TRUE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    }
    if (m == n) {
      Int prod = 1;
      for (const auto& x : d) prod *= x;
      EXPECT_EQ(prod, abs(test::leibniz_det(a)));
    }
  }
}

TEST(Index, Examples) {
  Sublattice z2 = Sublattice::full(2);
  EXPECT_EQ(index(span(IntMatrix{{2, 0}, {0, 1}}), z2), Int(2));
  EXPECT_FALSE(index(span(col({0, 1})), z2).has_value());
  EXPECT_EQ(index(span(IntMatrix{{2, 0}, {0, 3}}), z2), Int(6));
}

// Coset count: points of the box [0, 6)^2 that are distinct modulo the lattice.
TEST(Index, CosetEnumeration) {
  Sublattice l = span(IntMatrix{{2, 0}, {0, 3}});
  std::vector<Vector> reps;
  for (long x = 0; x < 6; ++x)
    for (long y = 0; y < 6; ++y) {
      Vector p = vec({x, y});
      bool fresh = true;
      for (const auto& q : reps)
        if (l.contains(vec({x - q[0].get_si(), y - q[1].get_si()}))) fresh = false;
      if (fresh) reps.push_back(p);
    }
  EXPECT_EQ(Int(static_cast<long>(reps.size())), *index(l, Sublattice::full(2)));
}

TEST(Index, MatchesLeibnizDeterminant) {
  test::Rng r(15);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + r.below(4);
    IntMatrix b = test::random_matrix(r, n, n, 4);
    Int det = test::leibniz_det(b);
    Index i = index(span(b), Sublattice::full(n));
    if (det == 0) EXPECT_FALSE(i.has_value());
    else EXPECT_EQ(*i, abs(det));
  }
}

TEST(Index, Multiplicative) {
  test::Rng r(16);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + r.below(3);
    IntMatrix b = test::random_matrix(r, n, n, 3);
    if (test::leibniz_det(b) == 0) continue;
    IntMatrix a = b * test::random_matrix(r, n, n, 3);
    if (test::leibniz_det(a) == 0) continue;
    Sublattice la = span(a), lb = span(b), lc = Sublattice::full(n);
    EXPECT_EQ(*index(la, lc), *index(la, lb) * *index(lb, lc));
  }
}

TEST(Index, RequiresContainment) {
  try {
    index(span(col({1, 0})), span(col({2, 0})));
    FAIL() << "expected NotContained";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotContained);
  }
}

TEST(Contains, Examples) {
  Sublattice l = span(IntMatrix{{2, 0}, {0, 1}});
  EXPECT_TRUE(contains(l, vec({4, 3})));
  EXPECT_FALSE(contains(l, vec({1, 0})));
  EXPECT_TRUE(contains(span(col({1, 2})), vec({3, 6})));
}

TEST(Contains, ConsistentWithSpanGrowth) {
  test::Rng r(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + r.below(4);
    Sublattice l = span(test::random_matrix(r, n, 1 + r.below(4), 3));
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(r.entry(4));
    bool grows = !(span(IntMatrix::hcat(l.basis(), IntMatrix::from_column(v))) == l);
    EXPECT_EQ(contains(l, v), !grows);
  }
}

TEST(Saturation, Examples) {
  EXPECT_EQ(saturation(span(col({2, 0}))), span(col({1, 0})));
  EXPECT_EQ(saturation(span(IntMatrix{{2, 0}, {0, 3}})), Sublattice::full(2));
  EXPECT_EQ(saturation(span(col({2, 4}))), span(col({1, 2})));
}

TEST(Saturation, Properties) {
  test::Rng r(18);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + r.below(4);
    Sublattice l = span(test::random_matrix(r, n, r.below(n + 1), 4));
    Sublattice s = saturation(l);
    EXPECT_EQ(s.rank(), l.rank());
    EXPECT_TRUE(s.contains(l));
    EXPECT_EQ(saturation(s), s);
    EXPECT_EQ(quotient_invariants(l, s).free_rank, 0u);
    EXPECT_TRUE(quotient_invariants(s, Sublattice::full(n)).torsion.empty());
  }
}

// Rank-one oracle: the primitive generator is v / gcd(v).
TEST(Saturation, RankOneGcdOracle) {
  test::Rng r(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + r.below(4);
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(r.entry(9));
    Int g = test::gcd_all(v);
    if (g == 0) continue;
    Vector p = v;
    for (auto& x : p) x /= g;
    EXPECT_EQ(saturation(span(IntMatrix::from_column(v))), span(IntMatrix::from_column(p)));
  }
}

TEST(QuotientInvariants, Examples) {
  Sublattice z2 = Sublattice::full(2);
  QuotientInvariants a = quotient_invariants(span(col({0, 1})), z2);
  EXPECT_EQ(a.free_rank, 1u);
  EXPECT_TRUE(a.torsion.empty());
  QuotientInvariants b = quotient_invariants(span(IntMatrix{{2, 0}, {0, 1}}), z2);
  EXPECT_EQ(b.free_rank, 0u);
  EXPECT_EQ(b.torsion, vec({2}));
  QuotientInvariants c = quotient_invariants(Sublattice::zero(2), z2);
  EXPECT_EQ(c.free_rank, 2u);
  EXPECT_TRUE(c.torsion.empty());
}

TEST(PrimitiveComplement, Examples) {
  EXPECT_EQ(primitive_complement(span(col({1, 0}))), vec({0, 1}));
  EXPECT_EQ(primitive_complement(span(col({1, 2}))), vec({0, 1}));
  EXPECT_EQ(primitive_complement(span(col({2, 1}))), vec({1, 0}));
}

TEST(PrimitiveComplement, Errors) {
  try {
    primitive_complement(Sublattice::zero(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCorankOne);
  }
  try {
    primitive_complement(span(col({2, 0})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSaturated);
  }
}

TEST(PrimitiveComplement, CompletesToUnimodularBasis) {
  test::Rng r(20);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + r.below(3);
    IntMatrix g = test::random_matrix(r, n, n - 1, 5);
    if (test::rational_rank(g) != n - 1) continue;
    Sublattice h = saturation(span(g));
    Vector x = primitive_complement(h);
    IntMatrix t = IntMatrix::hcat(IntMatrix::from_column(x), h.basis());
    EXPECT_EQ(abs(test::leibniz_det(t)), 1) << t.str();
    EXPECT_EQ(primitive_complement(h), x);
  }
}

TEST(KernelLattice, Examples) {
  EXPECT_EQ(kernel_lattice(IntMatrix{{-1, -1}, {1, -1}}), Sublattice::zero(2));
  EXPECT_EQ(kernel_lattice(IntMatrix{{0, 0}, {1, 0}}), span(col({0, 1})));
  EXPECT_EQ(kernel_lattice(IntMatrix(2, 2)), Sublattice::full(2));
}

TEST(KernelLattice, Properties) {
  test::Rng r(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t m = 1 + r.below(3), n = 1 + r.below(4);
    IntMatrix a = test::random_matrix(r, m, n, 3);
    Sublattice k = kernel_lattice(a);
    EXPECT_EQ(k.rank(), n - test::rational_rank(a));
    EXPECT_TRUE((a * k.basis()).is_zero());
    EXPECT_TRUE(k.is_saturated());
  }
}

// phi(q) counted directly; the exponent is the lcm of qualifying prime powers.
TEST(OrderExponent, EulerPhiOracle) {
  auto euler = [](long q) {
    long c = 0;
    for (long i = 1; i <= q; ++i) {
      long a = i, b = q;
      while (b) {
        long t = a % b;
        a = b;
        b = t;
      }
      if (a == 1) ++c;
    }
    return c;
  };
  auto prime_power = [](long q) {
    long p = 2;
    while (q % p) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
  };
  for (std::size_t k = 0; k <= 8; ++k) {
    Int expect = 1;
    for (long q = 2; q <= 64; ++q)
      if (prime_power(q) && euler(q) <= static_cast<long>(k)) {
        Int qq = q;
        mpz_lcm(expect.get_mpz_t(), expect.get_mpz_t(), qq.get_mpz_t());
      }
    EXPECT_EQ(order_exponent(k), expect) << "k=" << k;
  }
  EXPECT_EQ(order_exponent(1), 2);
  EXPECT_EQ(order_exponent(2), 12);
  EXPECT_EQ(order_exponent(3), 12);
  EXPECT_EQ(order_exponent(4), 120);
}

TEST(MatrixOrder, Examples) {
  EXPECT_EQ(matrix_order(UnimodularAuto(IntMatrix{{0, -1}, {1, 0}})), Int(4));
  EXPECT_FALSE(matrix_order(UnimodularAuto(IntMatrix{{1, 1}, {0, 1}})).has_value());
  EXPECT_EQ(matrix_order(UnimodularAuto(IntMatrix{{-1, 0}, {1, 1}})), Int(2));
}

// Brute-force powers up to the exponent bound.
TEST(MatrixOrder, PowerIterationOracle) {
  test::Rng r(22);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + r.below(3);
    IntMatrix m = test::random_unimodular(r, n, 6);
    std::optional<Int> brute;
    IntMatrix p = m;
    long bound = order_exponent(n).get_si();
    for (long k = 1; k <= bound; ++k) {
      if (p.is_identity()) {
        brute = k;
        break;
      }
      p = p * m;
    }
    EXPECT_EQ(matrix_order(m), brute) << m.str();
  }
}

TEST(InvariantClosure, Examples) {
  Sublattice f = span(IntMatrix{{1, 2}, {0, 3}});
  EXPECT_EQ(invariant_closure(UnimodularAuto::identity(2), f), f);
  EXPECT_EQ(invariant_closure(UnimodularAuto(IntMatrix{{0, -1}, {1, 0}}), span(col({1, 0}))),
            Sublattice::full(2));
  EXPECT_EQ(invariant_closure(UnimodularAuto(IntMatrix{{1, 0}, {1, 1}}), span(col({0, 1}))),
            span(col({0, 1})));
}

TEST(InvariantClosure, Properties) {
  test::Rng r(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + r.below(4);
    UnimodularAuto phi(test::random_unimodular(r, n, 6));
    Sublattice f = span(test::random_matrix(r, n, r.below(n + 1), 3));
    Sublattice c = invariant_closure(phi, f);
    EXPECT_TRUE(c.contains(f));
    EXPECT_EQ(c.image(phi.matrix()), c);
    EXPECT_EQ(c + c.image(phi.matrix()), c);
    // Iterates stabilise within n steps.
    Sublattice it = f;
    for (std::size_t s = 0; s < n; ++s) it = it + it.image(phi.matrix());
    EXPECT_EQ(it, c);
  }
}

TEST(SolveInBasis, Examples) {
  EXPECT_EQ(solve_in_basis(col({1, 0}), col({3, 0})), (IntMatrix{{3}}));
  EXPECT_EQ(solve_in_basis(col({1, 2}), col({2, 4})), (IntMatrix{{2}}));
  EXPECT_EQ(solve_in_basis(IntMatrix{{2, 0}, {0, 1}}, col({4, 3})), col({2, 3}));
}

TEST(SolveInBasis, NotRepresentable) {
  try {
    solve_in_basis(col({2, 0}), col({1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRepresentable);
  }
}

TEST(SolveInBasis, RoundTrip) {
  test::Rng r(24);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + r.below(4), k = 1 + r.below(n);
    IntMatrix s = test::random_matrix(r, n, k, 4);
    if (test::rational_rank(s) != k) continue;
    IntMatrix x = test::random_matrix(r, k, 2, 5);
    EXPECT_EQ(solve_in_basis(s, s * x), x);
  }
}

TEST(UnimodularAuto, RejectsNonUnimodular) {
  try {
    UnimodularAuto(IntMatrix{{2, 0}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
  }
  UnimodularAuto a(IntMatrix{{2, 1}, {1, 1}});
  EXPECT_TRUE((a * a.inverse()).matrix().is_identity());
}

TEST(Determinant, MatchesLeibniz) {
  test::Rng r(25);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + r.below(5);
    IntMatrix m = test::random_matrix(r, n, n, 7);
    EXPECT_EQ(determinant(m), test::leibniz_det(m));
  }
}

TEST(BigIntegers, NoOverflowPath) {
  IntMatrix m{{1, 1}, {1, 0}};
  IntMatrix p = power(m, 200);
  // F(200) has 42 digits.
  EXPECT_EQ(p(0, 1).get_str(), "280571172992510140037611932413038677189525");
  Sublattice l = span(IntMatrix::from_column({p(0, 0), p(1, 0)}));
  EXPECT_TRUE(l.is_saturated());
}

}  // namespace
}  // namespace vgbs
