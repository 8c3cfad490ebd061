// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

// Exact integer linear algebra: matrices over Z, Hermite and Smith normal
// forms, and sublattices of Z^n held in a canonical basis.

#ifndef VGBS_LATTICE_HPP
#define VGBS_LATTICE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace vgbs {

using Int = mpz_class;
using Vector = std::vector<Int>;

// Dense integer matrix, row-major storage. Column vectors are acted on by
// left multiplication, so a matrix with r columns maps Z^r into Z^rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_column(const Vector& v);
  // `rows` is needed so that an empty column list still has a shape.
  static IntMatrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  static IntMatrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  IntMatrix column_range(std::size_t first, std::size_t count) const;
  IntMatrix row_range(std::size_t first, std::size_t count) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  // Column-wise concatenation [a | b]; row counts must agree.
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
  // Row-wise stacking [a ; b]; column counts must agree.
  static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string str() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
Vector operator*(const IntMatrix& a, const Vector& v);

Int determinant(const IntMatrix& a);
std::size_t matrix_rank(const IntMatrix& a);
IntMatrix power(const IntMatrix& a, const Int& exponent);

// Automorphism of Z^n: a square matrix of determinant +1 or -1.
class UnimodularAuto {
 public:
  explicit UnimodularAuto(IntMatrix m);
  static UnimodularAuto identity(std::size_t n);

  std::size_t rank() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  int det() const { return det_; }
  UnimodularAuto inverse() const;

  friend bool operator==(const UnimodularAuto& a, const UnimodularAuto& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  IntMatrix matrix_;
  int det_ = 1;
};

UnimodularAuto operator*(const UnimodularAuto& a, const UnimodularAuto& b);

// A * transform == [basis | 0], basis in canonical column Hermite form.
struct ColumnEchelon {
  IntMatrix basis;
  IntMatrix transform;
  std::size_t rank = 0;
};

ColumnEchelon column_echelon(const IntMatrix& a);

// U * A * V == S with S diagonal, nonnegative, d1 | d2 | ...
struct SmithForm {
  IntMatrix S;
  UnimodularAuto U;
  UnimodularAuto V;

  // The leading min(rows, cols) diagonal entries.
  Vector diagonal() const;
};

SmithForm snf(const IntMatrix& a);

// Finitely generated subgroup of Z^n. The basis is stored in canonical column
// Hermite normal form, so equality of sets is equality of stored bases.
class Sublattice {
 public:
  static Sublattice span(const IntMatrix& generators);
  static Sublattice zero(std::size_t n);
  static Sublattice full(std::size_t n);

  std::size_t ambient_rank() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Sublattice& other) const;
  bool is_saturated() const;

  // Coordinates of v in the stored basis; nullopt if v is not in the lattice.
  std::optional<Vector> coordinates(const Vector& v) const;

  // Image under a linear map with ambient_rank() columns.
  Sublattice image(const IntMatrix& map) const;

  friend Sublattice operator+(const Sublattice& a, const Sublattice& b);
  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Sublattice& a, const Sublattice& b) { return !(a == b); }

 private:
  explicit Sublattice(IntMatrix canonical_basis) : basis_(std::move(canonical_basis)) {}
  IntMatrix basis_;
};

inline Sublattice hnf_basis(const IntMatrix& generators) {
  return Sublattice::span(generators);
}

// nullopt stands for an infinite index.
using Index = std::optional<Int>;

Index index(const Sublattice& sub, const Sublattice& sup);
bool contains(const Sublattice& sub, const Vector& v);
Sublattice saturation(const Sublattice& sub);

struct QuotientInvariants {
  std::size_t free_rank = 0;
  Vector torsion;  // divisors > 1 in divisibility order

  friend bool operator==(const QuotientInvariants& a, const QuotientInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

QuotientInvariants quotient_invariants(const Sublattice& sub, const Sublattice& sup);

// x with Z^n = <x> + H, for H saturated of rank n-1.
Vector primitive_complement(const Sublattice& h);

// Saturated lattice {v : A v = 0} inside Z^{A.cols()}.
Sublattice kernel_lattice(const IntMatrix& a);

// lcm of the prime powers q with phi(q) <= k.
Int order_exponent(std::size_t k);

// nullopt stands for infinite order.
std::optional<Int> matrix_order(const UnimodularAuto& m);
std::optional<Int> matrix_order(const IntMatrix& m);

// Smallest phi-invariant sublattice containing f.
Sublattice invariant_closure(const UnimodularAuto& phi, const Sublattice& f);

// X with S * X == targets. Throws NotRepresentable otherwise.
IntMatrix solve_in_basis(const IntMatrix& s, const IntMatrix& targets);

std::string to_string(const Vector& v);

}  // namespace vgbs

#endif  // VGBS_LATTICE_HPP
