// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "vgbs/jsj.hpp"

namespace vgbs {

using nlohmann::json;

namespace {

json invariants_to_json(const AbelianInvariants& a) {
  return {{"free_rank", a.free_rank}, {"torsion", vector_to_json(a.torsion)}};
}

}  // namespace

json verdict_to_json(const Verdict& v) {
  json j = {{"edge", v.edge},
            {"decision", to_string(v.decision)},
            {"reason", v.reason},
            {"diagnostics", v.diagnostics},
            {"flagged", v.flagged()}};
  if (v.loop_witness) {
    j["witness"] = witness_to_json(*v.loop_witness);
    j["witness"]["form"] = v.loop_witness->conjugated(0, 0) == 1 ? "A" : "B";
  } else if (v.hyperplane) {
    j["witness"] = {{"hyperplane", matrix_to_json(v.hyperplane->basis())}};
  }
  if (v.literal_decision) j["literal_decision"] = to_string(*v.literal_decision);
  return j;
}

json move_to_json(const MoveRecord& m) {
  return {{"kind", to_string(m.kind)},
          {"edges", m.edges},
          {"vertices", m.vertices},
          {"witness", m.witness},
          {"reason", m.reason}};
}

json report_to_json(const Report& r) {
  json moves = json::array();
  for (const auto& m : r.moves) moves.push_back(move_to_json(m));
  json verdicts = json::array();
  json flags = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back(verdict_to_json(v));
    if (v.flagged())
      flags.push_back({{"edge", v.edge},
                       {"adopted", to_string(v.decision)},
                       {"literal", to_string(*v.literal_decision)},
                       {"message",
                        "the literal finite-order branch disagrees with the hyperplane criterion"}});
  }
  json vertices = json::array();
  for (const auto& [id, c] : r.vertices) vertices.push_back({{"id", id}, {"classification", to_string(c)}});
  return {{"moves", std::move(moves)},
          {"verdicts", std::move(verdicts)},
          {"vertices", std::move(vertices)},
          {"abelianization",
           {{"before", invariants_to_json(r.abelianization_before)},
            {"after", invariants_to_json(r.abelianization_after)}}},
          {"fixed_point", r.fixed_point},
          {"notes", r.notes},
          {"flags", std::move(flags)}};
}

}  // namespace vgbs
