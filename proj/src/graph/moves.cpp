// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <functional>

#include "vgbs/error.hpp"
#include "vgbs/graph.hpp"
#include "vgbs/normal_forms.hpp"

namespace vgbs {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Reduce:
      return "Reduce";
    case MoveKind::Collapse11:
      return "Collapse11";
    case MoveKind::Collapse22:
      return "Collapse22";
    case MoveKind::Expand:
      return "Expand";
  }
  return "?";
}

namespace {

bool is_square_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs(determinant(m)) == 1;
}

bool carries_one_one_loop(const GraphOfGroups& g, const std::string& v) {
  for (const auto& id : g.incident_edges(v))
    if (is_one_one_loop(g, id)) return true;
  return false;
}

// Rewrites every end of `edges` at `from_vertex` through `map`, moving it to
// `to_vertex`.
void reattach(GraphOfGroups& g, const std::vector<std::string>& edges,
              const std::string& from_vertex, const std::string& to_vertex,
              const std::function<IntMatrix(const IntMatrix&)>& map) {
  for (const auto& id : edges) {
    Edge& e = g.mutable_edge(id);
    if (e.from == from_vertex) {
      e.att_from = map(e.att_from);
      e.from = to_vertex;
    }
    if (e.to == from_vertex) {
      e.att_to = map(e.att_to);
      e.to = to_vertex;
    }
  }
}

std::vector<std::string> others(const GraphOfGroups& g, const std::string& v,
                                const std::string& skip) {
  std::vector<std::string> out;
  for (const auto& id : g.incident_edges(v))
    if (id != skip) out.push_back(id);
  return out;
}

MoveResult absorb(const GraphOfGroups& g, const Edge& f, bool absorb_to) {
  const std::string& u = absorb_to ? f.to : f.from;
  const std::string& w = absorb_to ? f.from : f.to;
  const IntMatrix& att_u = absorb_to ? f.att_to : f.att_from;
  const IntMatrix& att_w = absorb_to ? f.att_from : f.att_to;

  // The vertex group of u is identified with the image of the edge in w.
  IntMatrix t = att_w * solve_in_basis(att_u, IntMatrix::identity(att_u.rows()));

  GraphOfGroups out = g;
  std::vector<std::string> moved = others(g, u, f.id);
  out.remove_edge(f.id);
  reattach(out, moved, u, w, [&](const IntMatrix& m) { return t * m; });
  out.remove_vertex(u);

  MoveRecord r;
  r.kind = MoveKind::Reduce;
  r.edges = {f.id};
  r.vertices = {u, w};
  r.witness = {{"absorbed", u}, {"into", w}, {"map", matrix_to_json(t)}};
  r.reason = "edge '" + f.id + "' maps onto '" + u + "'; '" + u + "' absorbed into '" + w + "'";
  return MoveResult{std::move(out), std::move(r)};
}

}  // namespace

std::optional<MoveResult> reduce_step(const GraphOfGroups& g, ReduceMode mode) {
  for (const auto& [id, e] : g.edges()) {
    if (e.is_loop()) continue;
    for (bool absorb_to : {true, false}) {
      const std::string& u = absorb_to ? e.to : e.from;
      const std::string& w = absorb_to ? e.from : e.to;
      if (!g.vertex(u).is_abelian() || g.vertex(w).kind() == VertexKind::Opaque) continue;
      if (!is_square_unimodular(absorb_to ? e.att_to : e.att_from)) continue;
      if (mode == ReduceMode::KeepLoopAnchors && carries_one_one_loop(g, u)) continue;
      return absorb(g, e, absorb_to);
    }
  }
  return std::nullopt;
}

ReduceResult reduce(const GraphOfGroups& g, ReduceMode mode) {
  ReduceResult out{g, {}};
  while (auto step = reduce_step(out.graph, mode)) {
    out.graph = std::move(step->graph);
    out.records.push_back(std::move(step->record));
  }
  return out;
}

bool is_reduced(const GraphOfGroups& g, ReduceMode mode) {
  return !reduce_step(g, mode).has_value();
}

MoveResult collapse_11_loop(const GraphOfGroups& g, const std::string& e) {
  if (!is_one_one_loop(g, e))
    throw Error(ErrorCode::NotOneOneLoop, "edge '" + e + "' is not a 1-1 loop");
  UnimodularAuto phi = modulus(g, e);
  const std::string v = g.edge(e).from;

  GraphOfGroups out = g;
  out.remove_edge(e);
  out.set_vertex(v, VertexGroup::polycyclic(phi));

  MoveRecord r;
  r.kind = MoveKind::Collapse11;
  r.edges = {e};
  r.vertices = {v};
  r.witness = {{"modulus", matrix_to_json(phi.matrix())}};
  r.reason = "1-1 loop '" + e + "' collapsed into '" + v + "'";
  return MoveResult{std::move(out), std::move(r)};
}

std::optional<std::string> check_22_witness(const GraphOfGroups& g, const std::string& e,
                                            const Sublattice& h) {
  if (!g.has_edge(e)) return "no edge '" + e + "'";
  if (!is_two_two_edge(g, e)) return "edge '" + e + "' is not a 2-2 edge";
  const Edge& edge = g.edge(e);
  const std::size_t n = edge.rank;
  if (h.ambient_rank() != n) return "hyperplane lives in the wrong ambient";
  if (h.rank() + 1 != n) return "hyperplane does not have rank n-1";
  if (!h.is_saturated()) return "hyperplane is not saturated in the edge group";
  for (const auto& [v, att] : {std::pair{edge.from, edge.att_from}, std::pair{edge.to, edge.att_to}}) {
    Sublattice image = h.image(att);
    if (!image.is_saturated()) return "image of the hyperplane is not saturated at '" + v + "'";
    if (!image.contains(Sublattice::span(incident_attachments(g, v, e))))
      return "an adjacent image at '" + v + "' is not inside the hyperplane";
  }
  return std::nullopt;
}

MoveResult collapse_22_edge(const GraphOfGroups& g, const std::string& e, const Sublattice& h) {
  if (auto why = check_22_witness(g, e, h)) throw Error(ErrorCode::WitnessInvalid, *why);
  const Edge edge = g.edge(e);
  KleinNormalForm k = normalize_22(edge.rank, edge.att_from, edge.att_to, h);
  const IntMatrix fiber_from = edge.att_from * k.fiber_basis;
  const IntMatrix fiber_to = edge.att_to * k.fiber_basis;

  auto lift = [](const IntMatrix& fiber) {
    return [&fiber](const IntMatrix& m) {
      return IntMatrix::vcat(IntMatrix(1, m.cols()), solve_in_basis(fiber, m));
    };
  };

  GraphOfGroups out = g;
  out.remove_edge(e);
  reattach(out, others(g, edge.from, e), edge.from, edge.from, lift(fiber_from));
  reattach(out, others(g, edge.to, e), edge.to, edge.from, lift(fiber_to));
  out.remove_vertex(edge.to);
  out.set_vertex(edge.from, VertexGroup::polycyclic(k.automorphism));

  MoveRecord r;
  r.kind = MoveKind::Collapse22;
  r.edges = {e};
  r.vertices = {edge.from, edge.to};
  r.witness = {{"hyperplane", matrix_to_json(h.basis())},
               {"kind", to_string(k.kind)},
               {"automorphism", matrix_to_json(k.automorphism.matrix())},
               {"fiber_basis", matrix_to_json(k.fiber_basis)},
               {"x_from", vector_to_json(k.x_from)},
               {"x_to", vector_to_json(k.x_to)},
               {"shift", vector_to_json(k.shift)},
               {"offset", vector_to_json(k.offset)}};
  r.reason = "2-2 edge '" + e + "' collapsed; '" + edge.to + "' merged into '" + edge.from + "'";
  return MoveResult{std::move(out), std::move(r)};
}

MoveResult expand_vertex(const GraphOfGroups& g, const std::string& v) {
  const VertexGroup& vg = g.vertex(v);
  if (!vg.is_abelian())
    throw Error(ErrorCode::UnsupportedVertexKind, "vertex '" + v + "' is not abelian");
  const std::size_t n = vg.rank();
  if (n < 2) throw Error(ErrorCode::RankTooSmall, "vertex '" + v + "' has rank < 2");
  Sublattice tilde = tilde_group(g, v);
  if (tilde.rank() + 1 != n)
    throw Error(ErrorCode::NoDeficiencyOne,
                "adjacent edge groups at '" + v + "' have rank " + std::to_string(tilde.rank()) +
                    ", need " + std::to_string(n - 1));
  Sublattice h = saturation(tilde);
  const IntMatrix& s = h.basis();
  Vector x = primitive_complement(h);

  GraphOfGroups out = g;
  out.set_vertex(v, VertexGroup::abelian(n - 1));
  reattach(out, g.incident_edges(v), v, v,
           [&s](const IntMatrix& m) { return solve_in_basis(s, m); });
  Edge loop;
  loop.id = g.fresh_edge_id(v + ".loop");
  loop.from = loop.to = v;
  loop.rank = n - 1;
  loop.att_from = loop.att_to = IntMatrix::identity(n - 1);
  out.add_edge(loop);

  MoveRecord r;
  r.kind = MoveKind::Expand;
  r.edges = {loop.id};
  r.vertices = {v};
  r.witness = {{"hyperplane", matrix_to_json(s)}, {"stable_letter", vector_to_json(x)}};
  r.reason = "'" + v + "' expanded over its adjacent hyperplane";
  return MoveResult{std::move(out), std::move(r)};
}

}  // namespace vgbs
