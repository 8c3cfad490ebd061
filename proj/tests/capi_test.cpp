// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "vgbs/vgbs.h"

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(VGBS_TEST_DATA_DIR) + "/fixtures/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  std::string out = s ? s : "";
  vgbs_string_free(s);
  return out;
}

vgbs_graph* load(const std::string& name) {
  vgbs_graph* g = nullptr;
  EXPECT_EQ(vgbs_graph_from_json(fixture(name).c_str(), &g), VGBS_OK) << vgbs_last_error();
  return g;
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(vgbs_version(), "1.0.0");
  EXPECT_STREQ(vgbs_status_name(VGBS_OK), "ok");
  EXPECT_STREQ(vgbs_status_name(VGBS_ERR_PARSE), "parse");
}

TEST(CApi, RoundTrip) {
  vgbs_graph* g = load("fig3.json");
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(vgbs_graph_vertex_count(g), 7u);
  EXPECT_EQ(vgbs_graph_edge_count(g), 6u);
  char* text = nullptr;
  ASSERT_EQ(vgbs_graph_to_json(g, &text), VGBS_OK);
  std::string once = take(text);
  vgbs_graph* h = nullptr;
  ASSERT_EQ(vgbs_graph_from_json(once.c_str(), &h), VGBS_OK);
  ASSERT_EQ(vgbs_graph_to_json(h, &text), VGBS_OK);
  EXPECT_EQ(take(text), once);
  vgbs_graph_free(g);
  vgbs_graph_free(h);
}

TEST(CApi, ParseErrorsCarryMessages) {
  vgbs_graph* g = nullptr;
  EXPECT_EQ(vgbs_graph_from_json("{", &g), VGBS_ERR_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_STRNE(vgbs_last_error(), "");
  EXPECT_EQ(vgbs_graph_from_json(nullptr, &g), VGBS_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(vgbs_graph_to_json(nullptr, nullptr), VGBS_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Validate) {
  vgbs_graph* g = load("invalid_disconnected.json");
  int valid = 1;
  char* diags = nullptr;
  ASSERT_EQ(vgbs_graph_validate(g, &valid, &diags), VGBS_OK);
  EXPECT_EQ(valid, 0);
  EXPECT_NE(take(diags).find("not connected"), std::string::npos);
  vgbs_graph* out = nullptr;
  EXPECT_EQ(vgbs_jsj_compute(g, 0, &out, nullptr), VGBS_ERR_INVALID_GRAPH);
  vgbs_graph_free(g);
}

TEST(CApi, JsjAndReport) {
  vgbs_graph* g = load("fig3.json");
  vgbs_graph* out = nullptr;
  char* report = nullptr;
  ASSERT_EQ(vgbs_jsj_compute(g, 0, &out, &report), VGBS_OK) << vgbs_last_error();
  std::string r = take(report);
  EXPECT_NE(r.find("\"fixed_point\": true"), std::string::npos);
  EXPECT_NE(r.find("Collapse22"), std::string::npos);
  EXPECT_EQ(vgbs_graph_vertex_count(out), 6u);

  char* abel = nullptr;
  ASSERT_EQ(vgbs_graph_abelianization(out, &abel), VGBS_OK);
  EXPECT_EQ(take(abel), "{\"free_rank\":2,\"torsion\":[2,2,2,2,2]}\n");

  vgbs_graph* bounded = nullptr;
  ASSERT_EQ(vgbs_bounded_rank(out, 0, &bounded), VGBS_OK);
  EXPECT_EQ(vgbs_graph_vertex_count(bounded), 1u);
  vgbs_graph_free(bounded);
  vgbs_graph_free(out);
  vgbs_graph_free(g);
}

TEST(CApi, Reduce) {
  vgbs_graph* g = load("fig1.json");
  vgbs_graph* out = nullptr;
  char* records = nullptr;
  ASSERT_EQ(vgbs_graph_reduce(g, &out, &records), VGBS_OK);
  EXPECT_EQ(take(records), "[]\n");
  EXPECT_EQ(vgbs_graph_edge_count(out), 1u);
  vgbs_graph_free(out);
  vgbs_graph_free(g);
}

TEST(CApi, ClassifyMatrix) {
  char* out = nullptr;
  ASSERT_EQ(vgbs_classify_matrix("[[0,-1],[1,0]]", &out), VGBS_OK);
  EXPECT_EQ(take(out), "{\"tag\":\"UniqueJSJ\"}\n");
  EXPECT_EQ(vgbs_classify_matrix("[[2,0],[0,1]]", &out), VGBS_ERR_NOT_UNIMODULAR);
  EXPECT_EQ(vgbs_classify_matrix("[[1,0]]", &out), VGBS_ERR_DIMENSION_MISMATCH);
  EXPECT_EQ(vgbs_classify_matrix("nope", &out), VGBS_ERR_PARSE);
}

TEST(CApi, Generate) {
  vgbs_gen_params p;
  vgbs_gen_params_default(&p);
  p.seed = 42;
  vgbs_graph* a = nullptr;
  vgbs_graph* b = nullptr;
  ASSERT_EQ(vgbs_generate(&p, &a), VGBS_OK);
  ASSERT_EQ(vgbs_generate(&p, &b), VGBS_OK);
  char* ta = nullptr;
  char* tb = nullptr;
  vgbs_graph_to_json(a, &ta);
  vgbs_graph_to_json(b, &tb);
  EXPECT_EQ(take(ta), take(tb));
  vgbs_graph_free(a);
  vgbs_graph_free(b);
  p.n_vertices = 0;
  vgbs_graph* c = nullptr;
  EXPECT_EQ(vgbs_generate(&p, &c), VGBS_ERR_PARAM);
}

TEST(CApi, Dot) {
  vgbs_graph* g = load("fig2_k1.json");
  char* dot = nullptr;
  ASSERT_EQ(vgbs_graph_to_dot(g, &dot), VGBS_OK);
  EXPECT_EQ(take(dot).rfind("digraph vgbs {", 0), 0u);
  vgbs_graph_free(g);
}

}  // namespace
