// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "vgbs/error.hpp"
#include "vgbs/normal_forms.hpp"

namespace vgbs {

const char* to_string(KleinKind kind) {
  return kind == KleinKind::Untwisted ? "Untwisted" : "Twisted";
}

KleinKind klein_kind(const Vector& p) {
  for (const auto& c : p)
    if (mpz_odd_p(c.get_mpz_t())) return KleinKind::Twisted;
  return KleinKind::Untwisted;
}

namespace {

struct SideData {
  Vector x;  // complement of the image of H, oriented so y maps to 2x + ...
  Vector w;  // H-coordinates of that remainder
};

// In the basis (x, att*H) of the vertex group, att*y = 2x + (att*H) w.
SideData adapt_side(const IntMatrix& att, const IntMatrix& h_basis, const Vector& y,
                    const char* side) {
  IntMatrix image = att * h_basis;
  Sublattice image_lattice = Sublattice::span(image);
  if (!image_lattice.is_saturated())
    throw Error(ErrorCode::WitnessInvalid,
                std::string("image of the hyperplane is not saturated in the ") + side +
                    " vertex group");
  SideData d;
  d.x = primitive_complement(image_lattice);
  IntMatrix basis = IntMatrix::hcat(IntMatrix::from_column(d.x), image);
  IntMatrix c = solve_in_basis(basis, IntMatrix::from_column(att * y));
  Int lead = c(0, 0);
  if (abs(lead) != 2)
    throw Error(ErrorCode::NotIndexTwo,
                std::string("edge group is not of index 2 transverse to the hyperplane at the ") +
                    side + " vertex");
  if (lead < 0)
    for (auto& xi : d.x) xi = -xi;
  for (std::size_t i = 1; i < c.rows(); ++i) d.w.push_back(c(i, 0));
  return d;
}

}  // namespace

KleinNormalForm normalize_22(std::size_t n, const IntMatrix& att_v, const IntMatrix& att_w,
                             const Sublattice& h) {
  if (att_v.rows() != n || att_v.cols() != n || att_w.rows() != n || att_w.cols() != n ||
      h.ambient_rank() != n)
    throw Error(ErrorCode::DimensionMismatch, "2-2 data must be square of size n");
  if (abs(determinant(att_v)) != 2 || abs(determinant(att_w)) != 2)
    throw Error(ErrorCode::NotIndexTwo, "an attachment does not have index 2");
  if (h.rank() + 1 != n)
    throw Error(ErrorCode::WitnessInvalid, "hyperplane does not have rank n-1");
  if (!h.is_saturated())
    throw Error(ErrorCode::WitnessInvalid, "hyperplane is not saturated in the edge group");

  const IntMatrix& hb = h.basis();
  const Vector y = primitive_complement(h);
  SideData from = adapt_side(att_v, hb, y, "from");
  SideData to = adapt_side(att_w, hb, y, "to");

  // x_v^2 = x_w^2 h^p in the amalgam, so x = x_v x_w^-1 is inverted by x_v up
  // to h^p.
  KleinNormalForm k;
  k.fiber_rank = n;
  k.x_from = from.x;
  k.x_to = to.x;
  Vector p(n - 1), reduced(n - 1);
  k.shift = Vector(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    p[i] = to.w[i] - from.w[i];
    reduced[i] = mpz_odd_p(p[i].get_mpz_t()) ? 1 : 0;
    // x' = x h^{-(p - reduced)/2}
    k.shift[i] = -(p[i] - reduced[i]) / 2;
  }
  k.offset = p;
  k.kind = klein_kind(p);

  IntMatrix u = IntMatrix::identity(n - 1);
  if (k.kind == KleinKind::Twisted) {
    // Unimodular u with u e_1 = reduced, so the offset becomes e_1.
    IntMatrix row(1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) row(0, i) = reduced[i];
    u = UnimodularAuto(column_echelon(row).transform.transpose()).inverse().matrix();
  }
  k.fiber_basis = hb * u;

  IntMatrix phi = IntMatrix::identity(n);
  phi(0, 0) = -1;
  if (k.kind == KleinKind::Twisted) phi(1, 0) = 1;
  k.automorphism = UnimodularAuto(phi);
  if (!power(phi, 2).is_identity())
    throw Error(ErrorCode::Internal, "Klein automorphism is not an involution");
  return k;
}

}  // namespace vgbs
