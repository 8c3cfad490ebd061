// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>

#include "vgbs/error.hpp"
#include "vgbs/lattice.hpp"

namespace vgbs {

namespace {

// Back-substitution against a column-echelon basis. Column j of `hnf` is zero
// above its pivot row and pivot rows strictly increase with j.
std::optional<Vector> triangular_coordinates(const IntMatrix& hnf, const Vector& v) {
  Vector residual = v;
  Vector coords(hnf.cols());
  std::size_t row = 0;
  for (std::size_t j = 0; j < hnf.cols(); ++j) {
    while (hnf(row, j) == 0) {
      if (residual[row] != 0) return std::nullopt;
      ++row;
    }
    if (!mpz_divisible_p(residual[row].get_mpz_t(), hnf(row, j).get_mpz_t()))
      return std::nullopt;
    Int q;
    mpz_divexact(q.get_mpz_t(), residual[row].get_mpz_t(), hnf(row, j).get_mpz_t());
    for (std::size_t i = row; i < hnf.rows(); ++i) residual[i] -= q * hnf(i, j);
    coords[j] = q;
    ++row;
  }
  for (const auto& r : residual)
    if (r != 0) return std::nullopt;
  return coords;
}

void require_same_ambient(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "sublattices live in different ambients");
}

IntMatrix coordinates_in(const Sublattice& sub, const Sublattice& sup) {
  require_same_ambient(sub, sup);
  IntMatrix x(sup.rank(), sub.rank());
  for (std::size_t j = 0; j < sub.rank(); ++j) {
    auto c = sup.coordinates(sub.basis().column(j));
    if (!c)
      throw Error(ErrorCode::NotContained,
                  "generator " + to_string(sub.basis().column(j)) + " lies outside " +
                      sup.basis().str());
    for (std::size_t i = 0; i < sup.rank(); ++i) x(i, j) = (*c)[i];
  }
  return x;
}

}  // namespace

Sublattice Sublattice::span(const IntMatrix& generators) {
  return Sublattice(column_echelon(generators).basis);
}

Sublattice Sublattice::zero(std::size_t n) { return Sublattice(IntMatrix(n, 0)); }

Sublattice Sublattice::full(std::size_t n) { return Sublattice(IntMatrix::identity(n)); }

std::optional<Vector> Sublattice::coordinates(const Vector& v) const {
  if (v.size() != ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "vector has wrong ambient dimension");
  return triangular_coordinates(basis_, v);
}

bool Sublattice::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice& other) const {
  require_same_ambient(*this, other);
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basis().column(j))) return false;
  return true;
}

bool Sublattice::is_saturated() const { return saturation(*this) == *this; }

Sublattice Sublattice::image(const IntMatrix& map) const {
  if (map.cols() != ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "map does not act on this ambient");
  return span(map * basis_);
}

Sublattice operator+(const Sublattice& a, const Sublattice& b) {
  require_same_ambient(a, b);
  return Sublattice::span(IntMatrix::hcat(a.basis_, b.basis_));
}

bool contains(const Sublattice& sub, const Vector& v) { return sub.contains(v); }

Index index(const Sublattice& sub, const Sublattice& sup) {
  IntMatrix x = coordinates_in(sub, sup);
  if (sub.rank() < sup.rank()) return std::nullopt;
  Int product = 1;
  for (const auto& d : snf(x).diagonal()) product *= d;
  return product;
}

QuotientInvariants quotient_invariants(const Sublattice& sub, const Sublattice& sup) {
  IntMatrix x = coordinates_in(sub, sup);
  QuotientInvariants q;
  q.free_rank = sup.rank() - sub.rank();
  for (const auto& d : snf(x).diagonal())
    if (d > 1) q.torsion.push_back(d);
  return q;
}

Sublattice saturation(const Sublattice& sub) {
  // Annihilating forms of sub, then everything they annihilate.
  Sublattice forms = kernel_lattice(sub.basis().transpose());
  return kernel_lattice(forms.basis().transpose());
}

Sublattice kernel_lattice(const IntMatrix& a) {
  ColumnEchelon ce = column_echelon(a);
  return Sublattice::span(ce.transform.column_range(ce.rank, a.cols() - ce.rank));
}

Vector primitive_complement(const Sublattice& h) {
  const std::size_t n = h.ambient_rank();
  if (n == 0 || h.rank() + 1 != n)
    throw Error(ErrorCode::NotCorankOne, "hyperplane must have rank n-1, got rank " +
                                             std::to_string(h.rank()) + " in Z^" +
                                             std::to_string(n));
  if (!h.is_saturated())
    throw Error(ErrorCode::NotSaturated, "sublattice " + h.basis().str() + " is not saturated");

  // The unique (up to sign) primitive form vanishing on h.
  Vector form = kernel_lattice(h.basis().transpose()).basis().column(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (abs(form[i]) == 1) {
      Vector e(n);
      e[i] = 1;
      return e;
    }
  }
  IntMatrix row(1, n);
  for (std::size_t i = 0; i < n; ++i) row(0, i) = form[i];
  ColumnEchelon ce = column_echelon(row);
  return ce.transform.column(0);
}

Int order_exponent(std::size_t k) {
  Int n = 1;
  for (unsigned long p = 2; p <= k + 1; ++p) {
    bool prime = true;
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    // phi(p^a) = p^(a-1) (p-1)
    Int q = p;
    Int phi = p - 1;
    while (phi * p <= k) {
      q *= p;
      phi *= p;
    }
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
  }
  return n;
}

std::optional<Int> matrix_order(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "order of a non-square matrix");
  Int order = order_exponent(m.rows());
  if (!power(m, order).is_identity()) return std::nullopt;
  // Strip prime factors while the power stays trivial.
  Int rest = order;
  for (unsigned long p = 2; rest > 1; ++p) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
    while (mpz_divisible_ui_p(order.get_mpz_t(), p) && power(m, order / p).is_identity())
      order /= p;
  }
  return order;
}

std::optional<Int> matrix_order(const UnimodularAuto& m) { return matrix_order(m.matrix()); }

Sublattice invariant_closure(const UnimodularAuto& phi, const Sublattice& f) {
  if (phi.rank() != f.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "closure: automorphism and lattice disagree");
  Sublattice current = f;
  for (std::size_t step = 0; step <= f.ambient_rank() + 1; ++step) {
    Sublattice next = current + current.image(phi.matrix());
    if (next == current) return current;
    current = std::move(next);
  }
  throw Error(ErrorCode::Internal, "invariant closure failed to stabilise");
}

IntMatrix solve_in_basis(const IntMatrix& s, const IntMatrix& targets) {
  if (s.rows() != targets.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve_in_basis: row counts differ");
  ColumnEchelon ce = column_echelon(s);
  IntMatrix y(ce.rank, targets.cols());
  for (std::size_t j = 0; j < targets.cols(); ++j) {
    auto c = triangular_coordinates(ce.basis, targets.column(j));
    if (!c)
      throw Error(ErrorCode::NotRepresentable,
                  "column " + to_string(targets.column(j)) + " is outside the span of " +
                      s.str());
    for (std::size_t i = 0; i < ce.rank; ++i) y(i, j) = (*c)[i];
  }
  return ce.transform.column_range(0, ce.rank) * y;
}

}  // namespace vgbs
