// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "vgbs/error.hpp"
#include "vgbs/jsj.hpp"

namespace vgbs {

using nlohmann::json;

const char* to_string(Decision d) {
  return d == Decision::UniversallyElliptic ? "UniversallyElliptic" : "NotUniversallyElliptic";
}

namespace {

void require_reduced(const GraphOfGroups& g) {
  if (auto step = reduce_step(g, ReduceMode::KeepLoopAnchors))
    throw Error(ErrorCode::NotReduced, "graph is not reduced: " + step->record.reason);
}

json torsion_json(const QuotientInvariants& q) { return vector_to_json(q.torsion); }

// The nonzero class of ker(att mod 2) for an index-2 attachment.
Vector mod2_kernel(const IntMatrix& att) {
  SmithForm s = snf(att);
  Vector d = s.V.matrix().column(att.cols() - 1);
  for (auto& x : d) x = mpz_odd_p(x.get_mpz_t()) ? 1 : 0;
  return d;
}

Int dot_mod2(const Vector& a, const Vector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return mpz_odd_p(s.get_mpz_t()) ? 1 : 0;
}

}  // namespace

Verdict is_11_loop_universally_elliptic(const GraphOfGroups& g, const std::string& e) {
  if (!g.has_edge(e) || !is_one_one_loop(g, e))
    throw Error(ErrorCode::NotOneOneLoop, "edge '" + e + "' is not a 1-1 loop");
  require_reduced(g);
  const std::string& v = g.edge(e).from;
  const Sublattice tilde = tilde_group(g, v, e);
  const UnimodularAuto phi = modulus(g, e);
  const std::size_t n = phi.rank();
  ModulusAnalysis a = analyze_modulus(phi, tilde);

  Verdict out;
  out.edge = e;
  out.diagnostics = {{"case", to_string(a.e_case)},
                     {"exponent", int_to_json(a.exponent)},
                     {"e_rank", a.e_rank},
                     {"fixed_rank", a.fixed_rank},
                     {"modulus", matrix_to_json(phi.matrix())},
                     {"tilde", matrix_to_json(tilde.basis())}};
  if (a.closure_rank) out.diagnostics["closure_rank"] = *a.closure_rank;

  if (a.admits_form()) {
    out.decision = Decision::NotUniversallyElliptic;
    out.loop_witness = a.form_b ? a.form_b : a.form_a;
    out.reason = a.form_b ? "modulus has form B with the adjacent images in the fixed hyperplane"
                          : "modulus has form A with the adjacent images in an invariant hyperplane";
    if (auto why = check_loop_witness(phi, tilde, out.loop_witness->basis_change.matrix()))
      throw Error(ErrorCode::Internal, "loop witness for '" + e + "' fails: " + *why);
  } else {
    out.decision = Decision::UniversallyElliptic;
    switch (a.e_case) {
      case ModulusCase::Deficient:
        out.reason = "eigenvalue-1 part of the finite-order power has rank " +
                     std::to_string(a.e_rank) + " < " + std::to_string(n - 1);
        break;
      case ModulusCase::CorankOne:
        out.reason = "the only candidate hyperplane misses the adjacent images or is flipped";
        break;
      case ModulusCase::FiniteOrder:
        out.reason = "invariant closure of the adjacent images has full rank";
        break;
    }
  }
  out.literal_decision =
      a.literal_admits_form ? Decision::NotUniversallyElliptic : Decision::UniversallyElliptic;
  return out;
}

Verdict is_22_edge_universally_elliptic(const GraphOfGroups& g, const std::string& e) {
  if (!g.has_edge(e) || !is_two_two_edge(g, e))
    throw Error(ErrorCode::NotTwoTwoEdge, "edge '" + e + "' is not a 2-2 edge");
  require_reduced(g);
  const Edge& edge = g.edge(e);
  const std::size_t n = edge.rank;

  Verdict out;
  out.edge = e;
  out.decision = Decision::UniversallyElliptic;

  IntMatrix pulled(n, 0);
  for (const auto& [v, att] : {std::pair{edge.from, edge.att_from}, std::pair{edge.to, edge.att_to}}) {
    IntMatrix adj = incident_attachments(g, v, e);
    if (!Sublattice::span(att).contains(Sublattice::span(adj))) {
      out.reason = "an adjacent image at '" + v + "' is not inside the edge group";
      return out;
    }
    pulled = IntMatrix::hcat(pulled, solve_in_basis(att, adj));
  }
  const Sublattice tilde_e = Sublattice::span(pulled);
  const Sublattice bar = saturation(tilde_e);
  const QuotientInvariants q_from = quotient_invariants(bar.image(edge.att_from), Sublattice::full(n));
  const QuotientInvariants q_to = quotient_invariants(bar.image(edge.att_to), Sublattice::full(n));
  out.diagnostics = {{"tilde_e", matrix_to_json(tilde_e.basis())},
                     {"bar_e", matrix_to_json(bar.basis())},
                     {"bar_rank", bar.rank()},
                     {"torsion_from", torsion_json(q_from)},
                     {"torsion_to", torsion_json(q_to)}};
  if (!q_from.torsion.empty() || !q_to.torsion.empty()) {
    out.reason = "quotient of a vertex group by the saturated adjacent images has torsion";
    return out;
  }

  // A hyperplane ker f containing bar keeps both images saturated iff f is
  // odd on the mod-2 kernels of both attachments.
  const Vector delta_from = mod2_kernel(edge.att_from);
  const Vector delta_to = mod2_kernel(edge.att_to);
  const IntMatrix forms = kernel_lattice(bar.basis().transpose()).basis();
  const std::size_t k = forms.cols();
  Vector alpha(k), beta(k);
  for (std::size_t i = 0; i < k; ++i) {
    alpha[i] = dot_mod2(forms.column(i), delta_from);
    beta[i] = dot_mod2(forms.column(i), delta_to);
  }
  Vector c(k);
  std::optional<std::size_t> both, only_a, only_b;
  for (std::size_t i = 0; i < k; ++i) {
    if (alpha[i] == 1 && beta[i] == 1 && !both) both = i;
    if (alpha[i] == 1 && beta[i] == 0 && !only_a) only_a = i;
    if (alpha[i] == 0 && beta[i] == 1 && !only_b) only_b = i;
  }
  if (both) {
    c[*both] = 1;
  } else if (only_a && only_b) {
    c[*only_a] = 1;
    c[*only_b] = 1;
  } else {
    throw Error(ErrorCode::Internal, "no hyperplane found for torsion-free 2-2 edge '" + e + "'");
  }
  const Vector f = forms * c;
  IntMatrix row(1, n);
  for (std::size_t i = 0; i < n; ++i) row(0, i) = f[i];
  Sublattice h = kernel_lattice(row);
  if (auto why = check_22_witness(g, e, h))
    throw Error(ErrorCode::Internal, "2-2 witness for '" + e + "' fails: " + *why);

  out.decision = Decision::NotUniversallyElliptic;
  out.hyperplane = h;
  out.reason = "a hyperplane of the edge group contains every adjacent image with saturated images";
  out.diagnostics["delta_from"] = vector_to_json(delta_from);
  out.diagnostics["delta_to"] = vector_to_json(delta_to);
  out.diagnostics["form"] = vector_to_json(f);
  return out;
}

Verdict edge_verdict(const GraphOfGroups& g, const std::string& e) {
  if (is_one_one_loop(g, e)) return is_11_loop_universally_elliptic(g, e);
  if (is_two_two_edge(g, e)) return is_22_edge_universally_elliptic(g, e);
  const Edge& edge = g.edge(e);
  std::string type = "inf-inf";
  if (g.vertex(edge.from).is_abelian() && g.vertex(edge.to).is_abelian())
    type = edge_type(g, e).str();
  Verdict out;
  out.edge = e;
  out.decision = Decision::UniversallyElliptic;
  out.reason = "type filter: a " + type + (edge.is_loop() ? " loop" : " edge") +
               " is neither a 1-1 loop nor a 2-2 edge";
  out.diagnostics = {{"type", type}};
  return out;
}

std::vector<std::string> expansion_sites(const GraphOfGroups& g) {
  std::vector<std::string> out;
  for (const auto& [id, v] : g.vertices()) {
    if (!v.is_abelian() || v.rank() < 2) continue;
    if (tilde_group(g, id).rank() + 1 == v.rank()) out.push_back(id);
  }
  return out;
}

const char* to_string(VertexClass c) { return c == VertexClass::Rigid ? "Rigid" : "Flexible"; }

VertexClass classify_vertex(const GraphOfGroups& g, const std::string& v) {
  const VertexGroup& vg = g.vertex(v);
  if (!vg.is_abelian()) return VertexClass::Flexible;
  return tilde_group(g, v).rank() == vg.rank() ? VertexClass::Rigid : VertexClass::Flexible;
}

}  // namespace vgbs
