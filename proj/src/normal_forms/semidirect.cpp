// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "vgbs/error.hpp"
#include "vgbs/graph.hpp"
#include "vgbs/normal_forms.hpp"

namespace vgbs {

const char* to_string(SemidirectTag tag) {
  switch (tag) {
    case SemidirectTag::FormA:
      return "FormA";
    case SemidirectTag::FormB:
      return "FormB";
    case SemidirectTag::UniqueJSJ:
      return "UniqueJSJ";
  }
  return "?";
}

const char* to_string(ModulusCase c) {
  switch (c) {
    case ModulusCase::Deficient:
      return "deficient";
    case ModulusCase::CorankOne:
      return "corank-one";
    case ModulusCase::FiniteOrder:
      return "finite-order";
  }
  return "?";
}

Sublattice FormWitness::hyperplane() const {
  const IntMatrix& t = basis_change.matrix();
  return Sublattice::span(t.column_range(1, t.cols() - 1));
}

FormWitness make_witness(const UnimodularAuto& phi, const Vector& x, const IntMatrix& h) {
  IntMatrix t = IntMatrix::hcat(IntMatrix::from_column(x), h);
  UnimodularAuto bc(t);
  IntMatrix c = bc.inverse().matrix() * phi.matrix() * t;
  const std::size_t n = c.rows();
  FormWitness w{bc, c, c.row_range(1, n - 1).column_range(1, n - 1), {}};
  for (std::size_t i = 1; i < n; ++i) w.p.push_back(c(i, 0));
  return w;
}

namespace {

bool top_row_clear(const IntMatrix& c) {
  for (std::size_t j = 1; j < c.cols(); ++j)
    if (c(0, j) != 0) return false;
  return true;
}

}  // namespace

bool is_form_a(const FormWitness& w) {
  return w.conjugated(0, 0) == 1 && top_row_clear(w.conjugated) &&
         matrix_order(w.M).has_value();
}

bool is_form_b(const FormWitness& w) {
  return w.conjugated(0, 0) == -1 && top_row_clear(w.conjugated) && w.M.is_identity();
}

ModulusAnalysis analyze_modulus(const UnimodularAuto& phi, const Sublattice& tilde) {
  const std::size_t n = phi.rank();
  if (tilde.ambient_rank() != n)
    throw Error(ErrorCode::DimensionMismatch, "tilde and modulus act on different lattices");
  const IntMatrix id = IntMatrix::identity(n);

  ModulusAnalysis a;
  a.exponent = order_exponent(n);
  Sublattice e = kernel_lattice(power(phi.matrix(), a.exponent) - id);
  Sublattice fixed = kernel_lattice(phi.matrix() - id);
  a.e_rank = e.rank();
  a.fixed_rank = fixed.rank();

  if (e.rank() + 1 < n) {
    a.e_case = ModulusCase::Deficient;
    return a;
  }

  if (e.rank() + 1 == n) {
    a.e_case = ModulusCase::CorankOne;
    FormWitness w = make_witness(phi, primitive_complement(e), e.basis());
    if (e.contains(tilde) && w.conjugated(0, 0) == 1) a.form_a = w;
    a.literal_admits_form = a.form_a.has_value();
    return a;
  }

  a.e_case = ModulusCase::FiniteOrder;
  const bool b_shape = phi.det() == -1 && fixed.rank() + 1 == n;
  if (b_shape && fixed.contains(tilde))
    a.form_b = make_witness(phi, primitive_complement(fixed), fixed.basis());

  IntMatrix sum(n, n);
  IntMatrix term = id;
  for (Int k = 0; k < a.exponent; ++k) {
    sum = sum + term;
    term = phi.matrix() * term;
  }
  Sublattice f = kernel_lattice(sum) + tilde;
  Sublattice closure = invariant_closure(phi, f);
  a.closure_rank = closure.rank();

  if (closure.rank() < n) {
    // Grow by fixed vectors until the hyperplane has corank one.
    Sublattice l = saturation(closure);
    for (std::size_t j = 0; j < fixed.rank() && l.rank() + 1 < n; ++j) {
      Sublattice grown = saturation(l + Sublattice::span(IntMatrix::from_column(fixed.basis().column(j))));
      if (grown.rank() > l.rank()) l = grown;
    }
    if (l.rank() + 1 != n)
      throw Error(ErrorCode::Internal, "closure could not be completed to a hyperplane");
    FormWitness w = make_witness(phi, primitive_complement(l), l.basis());
    if (!is_form_a(w))
      throw Error(ErrorCode::Internal, "closure hyperplane does not give form A");
    a.form_a = w;
  }

  a.literal_admits_form = b_shape ? fixed.contains(tilde) : closure.rank() < n;
  return a;
}

SemidirectClass classify_semidirect(const UnimodularAuto& phi) {
  ModulusAnalysis a = analyze_modulus(phi, Sublattice::zero(phi.rank()));
  SemidirectClass c;
  if (a.form_b) {
    c.tag = SemidirectTag::FormB;
    c.witness = a.form_b;
    c.aux_form_a = a.form_a;
  } else if (a.form_a) {
    c.tag = SemidirectTag::FormA;
    c.witness = a.form_a;
  }
  return c;
}

std::optional<std::string> check_loop_witness(const UnimodularAuto& phi, const Sublattice& tilde,
                                              const IntMatrix& basis_change) {
  const std::size_t n = phi.rank();
  if (basis_change.rows() != n || basis_change.cols() != n)
    return "basis change has the wrong shape";
  if (abs(determinant(basis_change)) != 1) return "basis change is not unimodular";
  Sublattice h = Sublattice::span(basis_change.column_range(1, n - 1));
  if (!h.contains(tilde)) return "adjacent images are not inside the hyperplane";
  if (!h.contains(h.image(phi.matrix()))) return "hyperplane is not invariant";
  FormWitness w = make_witness(phi, basis_change.column(0), basis_change.column_range(1, n - 1));
  if (is_form_a(w) || is_form_b(w)) return std::nullopt;
  return "conjugated modulus is in neither form";
}

nlohmann::json witness_to_json(const FormWitness& w) {
  return {{"basis_change", matrix_to_json(w.basis_change.matrix())},
          {"conjugated", matrix_to_json(w.conjugated)},
          {"M", matrix_to_json(w.M)},
          {"p", vector_to_json(w.p)}};
}

nlohmann::json semidirect_to_json(const SemidirectClass& c) {
  nlohmann::json j = {{"tag", to_string(c.tag)}};
  if (c.witness) {
    j["basis_change"] = matrix_to_json(c.witness->basis_change.matrix());
    j["p"] = vector_to_json(c.witness->p);
    if (c.tag == SemidirectTag::FormA) j["M"] = matrix_to_json(c.witness->M);
  }
  if (c.aux_form_a) {
    j["aux_form_a"] = {{"basis_change", matrix_to_json(c.aux_form_a->basis_change.matrix())},
                       {"M", matrix_to_json(c.aux_form_a->M)},
                       {"p", vector_to_json(c.aux_form_a->p)}};
  }
  return j;
}

}  // namespace vgbs
