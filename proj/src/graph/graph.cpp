// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "vgbs/error.hpp"
#include "vgbs/graph.hpp"

namespace vgbs {

VertexGroup VertexGroup::abelian(std::size_t rank) { return VertexGroup(AbelianGroup{rank}); }

VertexGroup VertexGroup::polycyclic(UnimodularAuto automorphism) {
  return VertexGroup(PolycyclicGroup{std::move(automorphism)});
}

VertexGroup VertexGroup::opaque(GraphOfGroups subgraph) {
  return VertexGroup(OpaqueGroup{std::make_shared<const GraphOfGroups>(std::move(subgraph))});
}

VertexKind VertexGroup::kind() const {
  switch (group_.index()) {
    case 0:
      return VertexKind::Abelian;
    case 1:
      return VertexKind::Polycyclic;
    default:
      return VertexKind::Opaque;
  }
}

std::size_t VertexGroup::rank() const {
  switch (kind()) {
    case VertexKind::Abelian:
      return std::get<AbelianGroup>(group_).rank;
    case VertexKind::Polycyclic:
      return polycyclic().fiber_rank();
    case VertexKind::Opaque:
      break;
  }
  return 0;
}

void GraphOfGroups::add_vertex(const std::string& id, VertexGroup group) {
  if (!vertices_.emplace(id, std::move(group)).second)
    throw Error(ErrorCode::InvalidGraph, "duplicate vertex id '" + id + "'");
}

void GraphOfGroups::add_edge(Edge edge) {
  std::string id = edge.id;
  if (!edges_.emplace(id, std::move(edge)).second)
    throw Error(ErrorCode::InvalidGraph, "duplicate edge id '" + id + "'");
}

void GraphOfGroups::remove_vertex(const std::string& id) {
  if (vertices_.erase(id) == 0) throw Error(ErrorCode::UnknownId, "no vertex '" + id + "'");
}

void GraphOfGroups::remove_edge(const std::string& id) {
  if (edges_.erase(id) == 0) throw Error(ErrorCode::UnknownId, "no edge '" + id + "'");
}

void GraphOfGroups::set_vertex(const std::string& id, VertexGroup group) {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw Error(ErrorCode::UnknownId, "no vertex '" + id + "'");
  it->second = std::move(group);
}

Edge& GraphOfGroups::mutable_edge(const std::string& id) {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw Error(ErrorCode::UnknownId, "no edge '" + id + "'");
  return it->second;
}

const VertexGroup& GraphOfGroups::vertex(const std::string& id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw Error(ErrorCode::UnknownId, "no vertex '" + id + "'");
  return it->second;
}

const Edge& GraphOfGroups::edge(const std::string& id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw Error(ErrorCode::UnknownId, "no edge '" + id + "'");
  return it->second;
}

std::vector<std::string> GraphOfGroups::incident_edges(const std::string& v) const {
  std::vector<std::string> out;
  for (const auto& [id, e] : edges_)
    if (e.from == v || e.to == v) out.push_back(id);
  return out;
}

std::string GraphOfGroups::fresh_edge_id(const std::string& base) const {
  if (!has_edge(base)) return base;
  for (std::size_t k = 2;; ++k) {
    std::string id = base + "." + std::to_string(k);
    if (!has_edge(id)) return id;
  }
}

std::string GraphOfGroups::fresh_vertex_id(const std::string& base) const {
  if (!has_vertex(base)) return base;
  for (std::size_t k = 2;; ++k) {
    std::string id = base + "." + std::to_string(k);
    if (!has_vertex(id)) return id;
  }
}

// ---------------------------------------------------------------------------

std::size_t attachment_target_rank(const GraphOfGroups& g, const std::string& vertex,
                                   const std::string& anchor) {
  const VertexGroup& vg = g.vertex(vertex);
  if (vg.kind() != VertexKind::Opaque) return vg.rank();
  const GraphOfGroups& sub = *vg.opaque().subgraph;
  if (!sub.has_vertex(anchor))
    throw Error(ErrorCode::UnknownId,
                "anchor '" + anchor + "' is not a vertex of opaque '" + vertex + "'");
  const VertexGroup& inner = sub.vertex(anchor);
  if (inner.kind() == VertexKind::Opaque)
    throw Error(ErrorCode::InvalidGraph, "anchor '" + anchor + "' is itself opaque");
  return inner.rank();
}

namespace {

void validate_into(const GraphOfGroups& g, const std::string& prefix,
                   std::vector<Diagnostic>& out) {
  auto report = [&](const std::string& where, const std::string& what) {
    out.push_back({prefix + where, what});
  };

  if (g.vertices().empty()) {
    report("", "graph has no vertices");
    return;
  }
  for (const auto& [id, v] : g.vertices()) {
    switch (v.kind()) {
      case VertexKind::Abelian:
      case VertexKind::Polycyclic:
        if (v.rank() == 0) report(id, "vertex group has rank 0");
        break;
      case VertexKind::Opaque:
        validate_into(*v.opaque().subgraph, prefix + id + "/", out);
        break;
    }
  }

  for (const auto& [id, e] : g.edges()) {
    if (e.rank == 0) report(id, "edge group has rank 0");
    bool ends_ok = true;
    for (const auto& [end, anchor] : {std::pair{e.from, e.anchor_from}, std::pair{e.to, e.anchor_to}}) {
      if (!g.has_vertex(end)) {
        report(id, "endpoint '" + end + "' is not a vertex");
        ends_ok = false;
        continue;
      }
      bool opaque = g.vertex(end).kind() == VertexKind::Opaque;
      if (opaque && anchor.empty()) {
        report(id, "edge into opaque vertex '" + end + "' has no anchor");
        ends_ok = false;
      } else if (!opaque && !anchor.empty()) {
        report(id, "anchor given for non-opaque vertex '" + end + "'");
      }
    }
    if (!ends_ok) continue;

    auto check = [&](const IntMatrix& m, const std::string& end, const std::string& anchor,
                     const char* side) {
      std::size_t rows = 0;
      try {
        rows = attachment_target_rank(g, end, anchor);
      } catch (const Error& err) {
        report(id, err.what());
        return;
      }
      if (m.rows() != rows || m.cols() != e.rank) {
        report(id, std::string(side) + " has shape " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                       std::to_string(e.rank));
        return;
      }
      if (matrix_rank(m) != e.rank) report(id, std::string(side) + ": attachment not injective");
    };
    check(e.att_from, e.from, e.anchor_from, "att_from");
    check(e.att_to, e.to, e.anchor_to, "att_to");
  }

  // Connectivity by flood fill over resolvable edges.
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [id, e] : g.edges()) {
    if (!g.has_vertex(e.from) || !g.has_vertex(e.to)) continue;
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::set<std::string> seen{g.vertices().begin()->first};
  std::vector<std::string> stack{g.vertices().begin()->first};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  if (seen.size() != g.vertices().size()) {
    for (const auto& [id, v] : g.vertices())
      if (!seen.count(id)) {
        report(id, "not connected");
        break;
      }
  }
}

std::string index_str(const Index& i) { return i ? i->get_str() : std::string("inf"); }

bool less_index(const Index& a, const Index& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

void require_abelian(const GraphOfGroups& g, const std::string& v) {
  if (!g.vertex(v).is_abelian())
    throw Error(ErrorCode::UnsupportedVertexKind, "vertex '" + v + "' is not abelian");
}

bool is_bijective(const IntMatrix& m) {
  return m.rows() == m.cols() && abs(determinant(m)) == 1;
}

}  // namespace

std::vector<Diagnostic> validate(const GraphOfGroups& g) {
  std::vector<Diagnostic> out;
  validate_into(g, "", out);
  return out;
}

Index attachment_index(const GraphOfGroups& g, const std::string& vertex,
                       const IntMatrix& attachment) {
  const VertexGroup& v = g.vertex(vertex);
  if (!v.is_abelian()) return std::nullopt;
  return index(Sublattice::span(attachment), Sublattice::full(v.rank()));
}

std::string EdgeType::str() const { return index_str(low) + "-" + index_str(high); }

EdgeType edge_type(const GraphOfGroups& g, const std::string& e) {
  const Edge& edge = g.edge(e);
  require_abelian(g, edge.from);
  require_abelian(g, edge.to);
  Index a = attachment_index(g, edge.from, edge.att_from);
  Index b = attachment_index(g, edge.to, edge.att_to);
  if (less_index(b, a)) std::swap(a, b);
  return EdgeType{a, b};
}

bool is_one_one_loop(const GraphOfGroups& g, const std::string& e) {
  const Edge& edge = g.edge(e);
  return edge.is_loop() && g.vertex(edge.from).is_abelian() && is_bijective(edge.att_from) &&
         is_bijective(edge.att_to);
}

bool is_two_two_edge(const GraphOfGroups& g, const std::string& e) {
  const Edge& edge = g.edge(e);
  if (edge.is_loop() || !g.vertex(edge.from).is_abelian() || !g.vertex(edge.to).is_abelian())
    return false;
  EdgeType t = edge_type(g, e);
  return t.low && t.high && *t.low == 2 && *t.high == 2;
}

UnimodularAuto modulus(const GraphOfGroups& g, const std::string& e) {
  if (!is_one_one_loop(g, e))
    throw Error(ErrorCode::NotOneOneLoop, "edge '" + e + "' is not a 1-1 loop");
  const Edge& edge = g.edge(e);
  IntMatrix inv = solve_in_basis(edge.att_from, IntMatrix::identity(edge.rank));
  return UnimodularAuto(edge.att_to * inv);
}

IntMatrix incident_attachments(const GraphOfGroups& g, const std::string& v,
                               const std::optional<std::string>& exclude) {
  std::size_t n = g.vertex(v).rank();
  IntMatrix cols(n, 0);
  for (const auto& id : g.incident_edges(v)) {
    if (exclude && id == *exclude) continue;
    const Edge& e = g.edge(id);
    if (e.from == v) cols = IntMatrix::hcat(cols, e.att_from);
    if (e.to == v) cols = IntMatrix::hcat(cols, e.att_to);
  }
  return cols;
}

Sublattice tilde_group(const GraphOfGroups& g, const std::string& v,
                       const std::optional<std::string>& exclude) {
  require_abelian(g, v);
  return Sublattice::span(incident_attachments(g, v, exclude));
}

std::string to_string(const AbelianInvariants& a) {
  std::string s = "Z^" + std::to_string(a.free_rank);
  for (const auto& d : a.torsion) s += " + Z/" + d.get_str();
  return s;
}

}  // namespace vgbs
