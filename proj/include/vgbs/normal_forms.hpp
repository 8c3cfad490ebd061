// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

// Normal forms of Z^n x|_phi Z and of index-2 amalgams of free abelian groups.
//
// A basis change T has columns (x, h_1, ..., h_{n-1}); the conjugated matrix
// T^-1 phi T is lower block triangular:
//
//   form A:  [[ 1, 0 ], [ p, M  ]]   with M of finite order
//   form B:  [[-1, 0 ], [ p, Id ]]

#ifndef VGBS_NORMAL_FORMS_HPP
#define VGBS_NORMAL_FORMS_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "vgbs/lattice.hpp"

namespace vgbs {

enum class SemidirectTag { FormA, FormB, UniqueJSJ };

const char* to_string(SemidirectTag tag);

struct FormWitness {
  UnimodularAuto basis_change;
  IntMatrix conjugated;  // basis_change^-1 * phi * basis_change
  IntMatrix M;           // lower-right (n-1) x (n-1) block
  Vector p;              // lower-left column

  Vector x() const { return basis_change.matrix().column(0); }
  // Span of h_1..h_{n-1}.
  Sublattice hyperplane() const;
};

// Builds the witness for the basis [x | h]; the caller checks the shape.
FormWitness make_witness(const UnimodularAuto& phi, const Vector& x, const IntMatrix& h);

struct SemidirectClass {
  SemidirectTag tag = SemidirectTag::UniqueJSJ;
  std::optional<FormWitness> witness;
  // Set when the tag is FormB but a form-A structure exists too.
  std::optional<FormWitness> aux_form_a;
};

SemidirectClass classify_semidirect(const UnimodularAuto& phi);

// Shape check of a witness: block structure, finite-order M (form A) or
// identity M (form B).
bool is_form_a(const FormWitness& w);
bool is_form_b(const FormWitness& w);

// The analysis behind both classify_semidirect (tilde = 0) and the 1-1 loop
// decision: does phi admit a form-A or form-B basis whose hyperplane contains
// tilde?
enum class ModulusCase { Deficient, CorankOne, FiniteOrder };

const char* to_string(ModulusCase c);

struct ModulusAnalysis {
  ModulusCase e_case = ModulusCase::Deficient;
  Int exponent;
  std::size_t e_rank = 0;
  std::size_t fixed_rank = 0;  // rank of ker(phi - I)
  std::optional<std::size_t> closure_rank;
  std::optional<FormWitness> form_a;
  std::optional<FormWitness> form_b;
  // Decision of the branch that, once phi is form-B conjugate, only asks
  // whether phi fixes tilde pointwise.
  bool literal_admits_form = false;

  bool admits_form() const { return form_a.has_value() || form_b.has_value(); }
};

ModulusAnalysis analyze_modulus(const UnimodularAuto& phi, const Sublattice& tilde);

// Pure check of a 1-1 loop witness: [x | H] unimodular, tilde inside H,
// H phi-invariant, and either phi x - x in H with phi|H of finite order or
// phi x + x in H with phi|H the identity. Returns the failed condition.
std::optional<std::string> check_loop_witness(const UnimodularAuto& phi, const Sublattice& tilde,
                                              const IntMatrix& basis_change);

nlohmann::json semidirect_to_json(const SemidirectClass& c);
nlohmann::json witness_to_json(const FormWitness& w);

// ---------------------------------------------------------------------------

enum class KleinKind { Untwisted, Twisted };

const char* to_string(KleinKind kind);

KleinKind klein_kind(const Vector& p);

struct KleinNormalForm {
  KleinKind kind = KleinKind::Untwisted;
  std::size_t fiber_rank = 0;
  UnimodularAuto automorphism = UnimodularAuto::identity(0);
  // Edge-group coordinates of the fiber generators h_1..h_{n-1}.
  IntMatrix fiber_basis;
  // Elements x_v, x_v' whose squares generate the edge group modulo H; the
  // stable letter is x_v x_v'^-1 shifted by `shift` in H.
  Vector x_from;
  Vector x_to;
  Vector shift;
  Vector offset;  // form-B offset before reduction mod 2
};

// att_v, att_w: n x n attachments of a rank-n edge group of index 2 on both
// sides; h: hyperplane of the edge group whose images are saturated.
KleinNormalForm normalize_22(std::size_t n, const IntMatrix& att_v, const IntMatrix& att_w,
                             const Sublattice& h);

}  // namespace vgbs

#endif  // VGBS_NORMAL_FORMS_HPP
