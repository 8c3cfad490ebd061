// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "vgbs/error.hpp"
#include "vgbs/jsj.hpp"

namespace vgbs {

namespace {

class Run {
 public:
  Run(GraphOfGroups g, bool checked) : graph_(std::move(g)), checked_(checked) {
    if (checked_) invariants_ = abelianization(graph_);
  }

  void apply(MoveResult move) {
    if (checked_) {
      AbelianInvariants after = abelianization(move.graph);
      if (!(after == invariants_))
        throw Error(ErrorCode::Internal, std::string(to_string(move.record.kind)) +
                                             " move changed the abelianization from " +
                                             to_string(invariants_) + " to " + to_string(after));
    }
    graph_ = std::move(move.graph);
    moves_.push_back(std::move(move.record));
  }

  const GraphOfGroups& graph() const { return graph_; }
  std::vector<MoveRecord>& moves() { return moves_; }
  GraphOfGroups take_graph() { return std::move(graph_); }

 private:
  GraphOfGroups graph_;
  bool checked_;
  AbelianInvariants invariants_;
  std::vector<MoveRecord> moves_;
};

bool adjacent(const Edge& a, const Edge& b) {
  return a.from == b.from || a.from == b.to || a.to == b.from || a.to == b.to;
}

}  // namespace

JsjResult compute_jsj(const GraphOfGroups& input, const JsjOptions& options) {
  auto diagnostics = validate(input);
  if (!diagnostics.empty())
    throw Error(ErrorCode::InvalidGraph,
                diagnostics.front().location + ": " + diagnostics.front().message);
  for (const auto& [id, v] : input.vertices())
    if (v.kind() == VertexKind::Opaque)
      throw Error(ErrorCode::UnsupportedVertexKind, "opaque vertex '" + id + "' in JSJ input");

  Report report;
  report.abelianization_before = abelianization(input);
  Run run(input, options.checked);

  while (auto step = reduce_step(run.graph(), ReduceMode::KeepLoopAnchors)) run.apply(std::move(*step));

  for (const auto& [id, e] : run.graph().edges())
    report.verdicts.push_back(edge_verdict(run.graph(), id));

  std::vector<const Verdict*> collapsing;
  for (const auto& v : report.verdicts)
    if (v.decision == Decision::NotUniversallyElliptic) collapsing.push_back(&v);
  for (std::size_t i = 0; i < collapsing.size(); ++i)
    for (std::size_t j = i + 1; j < collapsing.size(); ++j) {
      const Edge& a = run.graph().edge(collapsing[i]->edge);
      const Edge& b = run.graph().edge(collapsing[j]->edge);
      if (adjacent(a, b))
        throw Error(ErrorCode::Internal, "edges '" + a.id + "' and '" + b.id +
                                             "' are both not universally elliptic and adjacent");
    }

  for (const Verdict* v : collapsing) {
    if (v->loop_witness) {
      MoveResult m = collapse_11_loop(run.graph(), v->edge);
      m.record.witness["basis_change"] = matrix_to_json(v->loop_witness->basis_change.matrix());
      m.record.witness["conjugated"] = matrix_to_json(v->loop_witness->conjugated);
      run.apply(std::move(m));
    } else {
      run.apply(collapse_22_edge(run.graph(), v->edge, *v->hyperplane));
    }
  }

  for (const auto& site : expansion_sites(run.graph())) run.apply(expand_vertex(run.graph(), site));

  if (options.reduce_output)
    while (auto step = reduce_step(run.graph(), ReduceMode::Full)) run.apply(std::move(*step));

  for (const auto& [id, v] : run.graph().vertices()) {
    report.vertices.emplace_back(id, classify_vertex(run.graph(), id));
    if (v.is_abelian() && v.rank() == 1 && tilde_group(run.graph(), id).rank() == 0)
      report.notes.push_back("vertex '" + id + "' is an isolated rank-1 vertex and is left as is");
  }

  report.moves = std::move(run.moves());
  GraphOfGroups out = run.take_graph();
  report.abelianization_after = abelianization(out);
  if (!(report.abelianization_after == report.abelianization_before))
    throw Error(ErrorCode::Internal, "JSJ output changed the abelianization");

  if (options.attest_fixed_point) {
    JsjOptions again;
    again.checked = false;
    again.attest_fixed_point = false;
    JsjResult second = compute_jsj(out, again);
    report.fixed_point = second.report.moves.empty();
    if (!report.fixed_point)
      report.notes.push_back("a second pass performed " +
                             std::to_string(second.report.moves.size()) + " moves");
  }
  return JsjResult{std::move(out), std::move(report)};
}

}  // namespace vgbs
