// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

// Universal-ellipticity decisions for candidate edges and the JSJ pipeline
// built from them.

#ifndef VGBS_JSJ_HPP
#define VGBS_JSJ_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vgbs/graph.hpp"
#include "vgbs/normal_forms.hpp"

namespace vgbs {

enum class Decision { UniversallyElliptic, NotUniversallyElliptic };

const char* to_string(Decision d);

struct Verdict {
  std::string edge;
  Decision decision = Decision::UniversallyElliptic;
  std::string reason;
  // 1-1 loops: basis (x, h_1, ..., h_{n-1}) putting the modulus in form A/B.
  std::optional<FormWitness> loop_witness;
  // 2-2 edges: hyperplane of the edge group.
  std::optional<Sublattice> hyperplane;
  nlohmann::json diagnostics = nlohmann::json::object();
  // The answer of the literal finite-order branch, when it differs.
  std::optional<Decision> literal_decision;

  bool flagged() const { return literal_decision.has_value() && *literal_decision != decision; }
};

// Preconditions: the graph is reduced and e is a 1-1 loop at an abelian vertex.
Verdict is_11_loop_universally_elliptic(const GraphOfGroups& g, const std::string& e);

// Preconditions: the graph is reduced and e is a 2-2 edge between abelian
// vertices.
Verdict is_22_edge_universally_elliptic(const GraphOfGroups& g, const std::string& e);

// Dispatches on the edge type; edges that are neither 1-1 loops nor 2-2 edges
// are universally elliptic.
Verdict edge_verdict(const GraphOfGroups& g, const std::string& e);

// Abelian vertices of rank >= 2 whose adjacent edge groups have corank one.
std::vector<std::string> expansion_sites(const GraphOfGroups& g);

enum class VertexClass { Rigid, Flexible };

const char* to_string(VertexClass c);

VertexClass classify_vertex(const GraphOfGroups& g, const std::string& v);

struct Report {
  std::vector<MoveRecord> moves;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, VertexClass>> vertices;
  AbelianInvariants abelianization_before;
  AbelianInvariants abelianization_after;
  bool fixed_point = false;
  std::vector<std::string> notes;
};

struct JsjOptions {
  // Recompute the abelianization after every move and fail on a change.
  bool checked = true;
  // Re-run the pipeline on the output and require zero moves.
  bool attest_fixed_point = true;
  // Contract the output to a reduced graph.
  bool reduce_output = false;
};

struct JsjResult {
  GraphOfGroups graph;
  Report report;
};

JsjResult compute_jsj(const GraphOfGroups& g, const JsjOptions& options = {});

// Collapses each connected subgraph spanned by edges of rank > n into one
// opaque vertex.
GraphOfGroups bounded_rank_jsj(const GraphOfGroups& g, std::size_t n);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json move_to_json(const MoveRecord& m);
nlohmann::json report_to_json(const Report& r);

}  // namespace vgbs

#endif  // VGBS_JSJ_HPP
