// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

// Finite graphs of groups with free abelian edge groups, their elementary
// moves, and the abelianization used to certify that a move does not change
// the fundamental group.

#ifndef VGBS_GRAPH_HPP
#define VGBS_GRAPH_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "vgbs/lattice.hpp"

namespace vgbs {

class GraphOfGroups;

struct AbelianGroup {
  std::size_t rank = 0;
};

// Z^n x|_phi Z; edges attach into the fiber Z^n.
struct PolycyclicGroup {
  UnimodularAuto automorphism;
  std::size_t fiber_rank() const { return automorphism.rank(); }
};

// A collapsed subgraph. Edges attached to it name the inner vertex they land
// in through Edge::anchor_from / anchor_to.
struct OpaqueGroup {
  std::shared_ptr<const GraphOfGroups> subgraph;
};

enum class VertexKind { Abelian, Polycyclic, Opaque };

class VertexGroup {
 public:
  static VertexGroup abelian(std::size_t rank);
  static VertexGroup polycyclic(UnimodularAuto automorphism);
  static VertexGroup opaque(GraphOfGroups subgraph);

  VertexKind kind() const;
  bool is_abelian() const { return kind() == VertexKind::Abelian; }

  // Rank of Z^n for abelian vertices, of the fiber for polycyclic ones.
  std::size_t rank() const;
  const PolycyclicGroup& polycyclic() const { return std::get<PolycyclicGroup>(group_); }
  const OpaqueGroup& opaque() const { return std::get<OpaqueGroup>(group_); }

 private:
  explicit VertexGroup(std::variant<AbelianGroup, PolycyclicGroup, OpaqueGroup> g)
      : group_(std::move(g)) {}
  std::variant<AbelianGroup, PolycyclicGroup, OpaqueGroup> group_;
};

struct Edge {
  std::string id;
  std::string from;
  std::string to;
  std::size_t rank = 0;
  IntMatrix att_from;  // n_from x rank
  IntMatrix att_to;    // n_to x rank
  std::string anchor_from;  // only for opaque endpoints
  std::string anchor_to;

  bool is_loop() const { return from == to; }
};

class GraphOfGroups {
 public:
  void add_vertex(const std::string& id, VertexGroup group);
  void add_edge(Edge edge);
  void remove_vertex(const std::string& id);
  void remove_edge(const std::string& id);
  void set_vertex(const std::string& id, VertexGroup group);
  Edge& mutable_edge(const std::string& id);

  bool has_vertex(const std::string& id) const { return vertices_.count(id) != 0; }
  bool has_edge(const std::string& id) const { return edges_.count(id) != 0; }
  const VertexGroup& vertex(const std::string& id) const;
  const Edge& edge(const std::string& id) const;

  // Sorted by id.
  const std::map<std::string, VertexGroup>& vertices() const { return vertices_; }
  const std::map<std::string, Edge>& edges() const { return edges_; }

  // Ids of edges with `v` as an endpoint, sorted; a loop appears once.
  std::vector<std::string> incident_edges(const std::string& v) const;

  // `base` if unused, otherwise base + "." + k for the least free k >= 2.
  std::string fresh_edge_id(const std::string& base) const;
  std::string fresh_vertex_id(const std::string& base) const;

 private:
  std::map<std::string, VertexGroup> vertices_;
  std::map<std::string, Edge> edges_;
};

struct Diagnostic {
  std::string location;  // vertex/edge id or JSON path
  std::string message;
};

std::vector<Diagnostic> validate(const GraphOfGroups& g);

// Dimension of the free abelian group an edge end attaches into.
std::size_t attachment_target_rank(const GraphOfGroups& g, const std::string& vertex,
                                   const std::string& anchor);

// Index of the attached image inside the endpoint group; infinite when the
// endpoint is not abelian.
Index attachment_index(const GraphOfGroups& g, const std::string& vertex,
                       const IntMatrix& attachment);

struct EdgeType {
  Index low;
  Index high;

  std::string str() const;
};

EdgeType edge_type(const GraphOfGroups& g, const std::string& e);

bool is_one_one_loop(const GraphOfGroups& g, const std::string& e);
bool is_two_two_edge(const GraphOfGroups& g, const std::string& e);

// phi = att_to * att_from^-1, so that t x t^-1 = phi(x).
UnimodularAuto modulus(const GraphOfGroups& g, const std::string& e);

// Subgroup of an abelian vertex generated by the images of its incident
// edges, skipping `exclude`.
Sublattice tilde_group(const GraphOfGroups& g, const std::string& v,
                       const std::optional<std::string>& exclude = std::nullopt);

// Attachment columns of every edge end at v except those of `exclude`.
IntMatrix incident_attachments(const GraphOfGroups& g, const std::string& v,
                               const std::optional<std::string>& exclude = std::nullopt);

using AbelianInvariants = QuotientInvariants;

AbelianInvariants abelianization(const GraphOfGroups& g);

std::string to_string(const AbelianInvariants& a);

// ---------------------------------------------------------------------------
// Moves

enum class MoveKind { Reduce, Collapse11, Collapse22, Expand };

const char* to_string(MoveKind kind);

struct MoveRecord {
  MoveKind kind = MoveKind::Reduce;
  std::vector<std::string> edges;
  std::vector<std::string> vertices;
  nlohmann::json witness;
  std::string reason;
};

struct MoveResult {
  GraphOfGroups graph;
  MoveRecord record;
};

enum class ReduceMode {
  // Contract every non-loop edge with a bijective attachment.
  Full,
  // Additionally refuse to absorb a vertex that carries a 1-1 loop. Such an
  // edge only re-expresses a loop already made universally elliptic by the
  // bijective edge, and contracting it would undo an expansion.
  KeepLoopAnchors,
};

std::optional<MoveResult> reduce_step(const GraphOfGroups& g,
                                      ReduceMode mode = ReduceMode::Full);

struct ReduceResult {
  GraphOfGroups graph;
  std::vector<MoveRecord> records;
};

ReduceResult reduce(const GraphOfGroups& g, ReduceMode mode = ReduceMode::Full);

bool is_reduced(const GraphOfGroups& g, ReduceMode mode = ReduceMode::Full);

MoveResult collapse_11_loop(const GraphOfGroups& g, const std::string& e);

// Reason the hyperplane fails the 2-2 witness conditions, or nullopt.
std::optional<std::string> check_22_witness(const GraphOfGroups& g, const std::string& e,
                                            const Sublattice& h);

MoveResult collapse_22_edge(const GraphOfGroups& g, const std::string& e,
                            const Sublattice& h);

MoveResult expand_vertex(const GraphOfGroups& g, const std::string& v);

// ---------------------------------------------------------------------------
// Serialization ("vgbs-v1")

nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json vector_to_json(const Vector& v);

nlohmann::json graph_to_json(const GraphOfGroups& g);
GraphOfGroups graph_from_json(const nlohmann::json& doc);

GraphOfGroups parse_graph(const std::string& text);
std::string serialize(const GraphOfGroups& g);
std::string to_dot(const GraphOfGroups& g);

}  // namespace vgbs

#endif  // VGBS_GRAPH_HPP
