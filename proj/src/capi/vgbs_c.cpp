// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <cstring>
#include <new>

#include "vgbs/error.hpp"
#include "vgbs/generate.hpp"
#include "vgbs/graph.hpp"
#include "vgbs/jsj.hpp"
#include "vgbs/normal_forms.hpp"
#include "vgbs/vgbs.h"

struct vgbs_graph {
  vgbs::GraphOfGroups graph;
};

namespace {

thread_local std::string last_error;

vgbs_status map_code(vgbs::ErrorCode code) {
  using vgbs::ErrorCode;
  switch (code) {
    case ErrorCode::NotContained:
      return VGBS_ERR_NOT_CONTAINED;
    case ErrorCode::NotCorankOne:
      return VGBS_ERR_NOT_CORANK_ONE;
    case ErrorCode::NotSaturated:
      return VGBS_ERR_NOT_SATURATED;
    case ErrorCode::NotRepresentable:
      return VGBS_ERR_NOT_REPRESENTABLE;
    case ErrorCode::NotUnimodular:
      return VGBS_ERR_NOT_UNIMODULAR;
    case ErrorCode::DimensionMismatch:
      return VGBS_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotOneOneLoop:
      return VGBS_ERR_NOT_ONE_ONE_LOOP;
    case ErrorCode::NotTwoTwoEdge:
      return VGBS_ERR_NOT_TWO_TWO_EDGE;
    case ErrorCode::NotIndexTwo:
      return VGBS_ERR_NOT_INDEX_TWO;
    case ErrorCode::NotReduced:
      return VGBS_ERR_NOT_REDUCED;
    case ErrorCode::UnsupportedVertexKind:
      return VGBS_ERR_UNSUPPORTED_VERTEX_KIND;
    case ErrorCode::WitnessInvalid:
      return VGBS_ERR_WITNESS_INVALID;
    case ErrorCode::NoDeficiencyOne:
      return VGBS_ERR_NO_DEFICIENCY_ONE;
    case ErrorCode::RankTooSmall:
      return VGBS_ERR_RANK_TOO_SMALL;
    case ErrorCode::UnknownId:
      return VGBS_ERR_UNKNOWN_ID;
    case ErrorCode::InvalidGraph:
      return VGBS_ERR_INVALID_GRAPH;
    case ErrorCode::ParseError:
      return VGBS_ERR_PARSE;
    case ErrorCode::ParamError:
      return VGBS_ERR_PARAM;
    case ErrorCode::Internal:
      break;
  }
  return VGBS_ERR_INTERNAL;
}

template <typename F>
vgbs_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return VGBS_OK;
  } catch (const vgbs::Error& e) {
    last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return VGBS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return VGBS_ERR_INTERNAL;
  }
}

vgbs_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return VGBS_ERR_INVALID_ARGUMENT;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

vgbs_graph* wrap(vgbs::GraphOfGroups g) { return new vgbs_graph{std::move(g)}; }

}  // namespace

extern "C" {

const char* vgbs_version(void) { return "1.0.0"; }

const char* vgbs_status_name(vgbs_status status) {
  switch (status) {
    case VGBS_OK:
      return "ok";
    case VGBS_ERR_INVALID_ARGUMENT:
      return "invalid-argument";
    case VGBS_ERR_PARSE:
      return "parse";
    case VGBS_ERR_INVALID_GRAPH:
      return "invalid-graph";
    case VGBS_ERR_UNKNOWN_ID:
      return "unknown-id";
    case VGBS_ERR_NOT_CONTAINED:
      return "not-contained";
    case VGBS_ERR_NOT_CORANK_ONE:
      return "not-corank-one";
    case VGBS_ERR_NOT_SATURATED:
      return "not-saturated";
    case VGBS_ERR_NOT_REPRESENTABLE:
      return "not-representable";
    case VGBS_ERR_NOT_UNIMODULAR:
      return "not-unimodular";
    case VGBS_ERR_DIMENSION_MISMATCH:
      return "dimension-mismatch";
    case VGBS_ERR_NOT_ONE_ONE_LOOP:
      return "not-one-one-loop";
    case VGBS_ERR_NOT_TWO_TWO_EDGE:
      return "not-two-two-edge";
    case VGBS_ERR_NOT_INDEX_TWO:
      return "not-index-two";
    case VGBS_ERR_NOT_REDUCED:
      return "not-reduced";
    case VGBS_ERR_UNSUPPORTED_VERTEX_KIND:
      return "unsupported-vertex-kind";
    case VGBS_ERR_WITNESS_INVALID:
      return "witness-invalid";
    case VGBS_ERR_NO_DEFICIENCY_ONE:
      return "no-deficiency-one";
    case VGBS_ERR_RANK_TOO_SMALL:
      return "rank-too-small";
    case VGBS_ERR_PARAM:
      return "param";
    case VGBS_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* vgbs_last_error(void) { return last_error.c_str(); }

void vgbs_string_free(char* s) { std::free(s); }

vgbs_status vgbs_graph_from_json(const char* text, vgbs_graph** out) {
  if (!text) return missing("text");
  if (!out) return missing("out");
  return guarded([&] { *out = wrap(vgbs::parse_graph(text)); });
}

void vgbs_graph_free(vgbs_graph* g) { delete g; }

vgbs_status vgbs_graph_to_json(const vgbs_graph* g, char** out) {
  if (!g) return missing("graph");
  if (!out) return missing("out");
  return guarded([&] { *out = copy_out(vgbs::serialize(g->graph)); });
}

vgbs_status vgbs_graph_to_dot(const vgbs_graph* g, char** out) {
  if (!g) return missing("graph");
  if (!out) return missing("out");
  return guarded([&] { *out = copy_out(vgbs::to_dot(g->graph)); });
}

size_t vgbs_graph_vertex_count(const vgbs_graph* g) { return g ? g->graph.vertices().size() : 0; }

size_t vgbs_graph_edge_count(const vgbs_graph* g) { return g ? g->graph.edges().size() : 0; }

vgbs_status vgbs_graph_validate(const vgbs_graph* g, int* valid, char** diagnostics) {
  if (!g) return missing("graph");
  if (!valid) return missing("valid");
  return guarded([&] {
    auto diags = vgbs::validate(g->graph);
    nlohmann::json j = nlohmann::json::array();
    for (const auto& d : diags) j.push_back({{"location", d.location}, {"message", d.message}});
    if (diagnostics) *diagnostics = copy_out(j.dump(2) + "\n");
    *valid = diags.empty() ? 1 : 0;
  });
}

vgbs_status vgbs_graph_abelianization(const vgbs_graph* g, char** out) {
  if (!g) return missing("graph");
  if (!out) return missing("out");
  return guarded([&] {
    vgbs::AbelianInvariants a = vgbs::abelianization(g->graph);
    nlohmann::json j = {{"free_rank", a.free_rank}, {"torsion", vgbs::vector_to_json(a.torsion)}};
    *out = copy_out(j.dump() + "\n");
  });
}

vgbs_status vgbs_graph_reduce(const vgbs_graph* g, vgbs_graph** out, char** records) {
  if (!g) return missing("graph");
  if (!out) return missing("out");
  return guarded([&] {
    auto diags = vgbs::validate(g->graph);
    if (!diags.empty())
      throw vgbs::Error(vgbs::ErrorCode::InvalidGraph,
                        diags.front().location + ": " + diags.front().message);
    vgbs::ReduceResult r = vgbs::reduce(g->graph);
    if (records) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& m : r.records) j.push_back(vgbs::move_to_json(m));
      *records = copy_out(j.dump(2) + "\n");
    }
    *out = wrap(std::move(r.graph));
  });
}

vgbs_status vgbs_jsj_compute(const vgbs_graph* g, unsigned flags, vgbs_graph** out,
                             char** report) {
  if (!g) return missing("graph");
  if (!out) return missing("out");
  return guarded([&] {
    vgbs::JsjOptions options;
    options.reduce_output = (flags & VGBS_JSJ_REDUCE_OUTPUT) != 0;
    options.checked = (flags & VGBS_JSJ_UNCHECKED) == 0;
    vgbs::JsjResult r = vgbs::compute_jsj(g->graph, options);
    char* text = report ? copy_out(vgbs::report_to_json(r.report).dump(2) + "\n") : nullptr;
    *out = wrap(std::move(r.graph));
    if (report) *report = text;
  });
}

vgbs_status vgbs_bounded_rank(const vgbs_graph* g, size_t bound, vgbs_graph** out) {
  if (!g) return missing("graph");
  if (!out) return missing("out");
  return guarded([&] { *out = wrap(vgbs::bounded_rank_jsj(g->graph, bound)); });
}

vgbs_status vgbs_classify_matrix(const char* matrix, char** out) {
  if (!matrix) return missing("matrix");
  if (!out) return missing("out");
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(matrix);
    } catch (const nlohmann::json::parse_error& e) {
      throw vgbs::Error(vgbs::ErrorCode::ParseError, std::string("syntax error: ") + e.what());
    }
    vgbs::IntMatrix m = vgbs::matrix_from_json(j, "");
    if (m.rows() == 0 || m.rows() != m.cols())
      throw vgbs::Error(vgbs::ErrorCode::DimensionMismatch, "matrix must be square and nonempty");
    vgbs::SemidirectClass c = vgbs::classify_semidirect(vgbs::UnimodularAuto(m));
    *out = copy_out(vgbs::semidirect_to_json(c).dump() + "\n");
  });
}

void vgbs_gen_params_default(vgbs_gen_params* p) {
  if (!p) return;
  vgbs::GenParams d;
  p->seed = d.seed;
  p->max_rank = d.max_rank;
  p->n_vertices = d.n_vertices;
  p->n_edges = d.n_edges;
  p->max_entry = d.max_entry;
  p->weight_generic = d.weight_generic;
  p->weight_loop = d.weight_loop;
  p->weight_one_one = d.weight_one_one;
  p->weight_two_two = d.weight_two_two;
  p->align_percent = d.align_percent;
}

vgbs_status vgbs_generate(const vgbs_gen_params* p, vgbs_graph** out) {
  if (!p) return missing("params");
  if (!out) return missing("out");
  return guarded([&] {
    vgbs::GenParams q;
    q.seed = p->seed;
    q.max_rank = p->max_rank;
    q.n_vertices = p->n_vertices;
    q.n_edges = p->n_edges;
    q.max_entry = p->max_entry;
    q.weight_generic = p->weight_generic;
    q.weight_loop = p->weight_loop;
    q.weight_one_one = p->weight_one_one;
    q.weight_two_two = p->weight_two_two;
    q.align_percent = p->align_percent;
    *out = wrap(vgbs::generate_random(q));
  });
}

}  // extern "C"
