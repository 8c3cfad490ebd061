// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the C interface of libvgbs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vgbs/vgbs.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Failure {
  int code;
  std::string message;
};

struct GraphDeleter {
  void operator()(vgbs_graph* g) const { vgbs_graph_free(g); }
};
using Graph = std::unique_ptr<vgbs_graph, GraphDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  vgbs_string_free(s);
  return out;
}

void check(vgbs_status status, const std::string& what) {
  if (status == VGBS_OK) return;
  throw Failure{kFailure, what + ": " + vgbs_status_name(status) + ": " + vgbs_last_error()};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kFailure, "cannot write '" + path + "'"};
  out << text;
}

Graph load(const std::string& path) {
  vgbs_graph* g = nullptr;
  check(vgbs_graph_from_json(read_input(path).c_str(), &g), path);
  Graph graph(g);
  int valid = 0;
  char* diags = nullptr;
  check(vgbs_graph_validate(graph.get(), &valid, &diags), path);
  std::string text = take(diags);
  if (!valid) throw Failure{kFailure, path + ": invalid graph\n" + text};
  return graph;
}

std::string to_json(const vgbs_graph* g) {
  char* s = nullptr;
  check(vgbs_graph_to_json(g, &s), "serialize");
  return take(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian JSJ decompositions of generalized Baumslag-Solitar groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vgbs_version()));

  std::string input, output, dot_path, report_path, records_path, matrix;
  bool post_reduce = false, unchecked = false;
  long bound = -1;
  vgbs_gen_params gen;
  vgbs_gen_params_default(&gen);

  auto* check_cmd = app.add_subcommand("check", "Parse and validate a graph");
  check_cmd->add_option("input", input, "vgbs-v1 JSON file or -")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Contract edges with a bijective attachment");
  reduce_cmd->add_option("input", input, "vgbs-v1 JSON file or -")->required();
  reduce_cmd->add_option("-o,--output", output, "Output graph (default stdout)");
  reduce_cmd->add_option("--records", records_path, "Write the contraction log");

  auto* jsj_cmd = app.add_subcommand("jsj", "Compute the abelian JSJ decomposition");
  jsj_cmd->add_option("input", input, "vgbs-v1 JSON file or -")->required();
  jsj_cmd->add_option("-o,--output", output, "Output graph (default stdout)");
  jsj_cmd->add_option("--report", report_path, "Write the JSON report");
  jsj_cmd->add_option("--dot", dot_path, "Write the output graph as DOT");
  jsj_cmd->add_flag("--reduce", post_reduce, "Reduce the output graph");
  jsj_cmd->add_option("--bound", bound, "Collapse edges of rank above this bound")
      ->check(CLI::NonNegativeNumber);
  jsj_cmd->add_flag("--unchecked", unchecked, "Skip per-move abelianization checks");

  auto* classify_cmd = app.add_subcommand("classify-matrix", "Classify Z^n x| Z by its automorphism");
  classify_cmd->add_option("matrix", matrix, "Square unimodular matrix as JSON rows")->required();

  auto* abel_cmd = app.add_subcommand("abel", "Abelianization of the fundamental group");
  abel_cmd->add_option("input", input, "vgbs-v1 JSON file or -")->required();

  auto* dot_cmd = app.add_subcommand("dot", "Export a graph as DOT");
  dot_cmd->add_option("input", input, "vgbs-v1 JSON file or -")->required();
  dot_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random graph");
  gen_cmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  gen_cmd->add_option("--max-rank", gen.max_rank, "Largest vertex rank")->capture_default_str();
  gen_cmd->add_option("--vertices", gen.n_vertices, "Number of vertices")->capture_default_str();
  gen_cmd->add_option("--edges", gen.n_edges, "Number of edges")->capture_default_str();
  gen_cmd->add_option("--max-entry", gen.max_entry, "Largest attachment entry")->capture_default_str();
  gen_cmd->add_option("--w-generic", gen.weight_generic, "Weight of generic edges");
  gen_cmd->add_option("--w-loop", gen.weight_loop, "Weight of generic loops");
  gen_cmd->add_option("--w-one-one", gen.weight_one_one, "Weight of 1-1 loops");
  gen_cmd->add_option("--w-two-two", gen.weight_two_two, "Weight of 2-2 edges");
  gen_cmd->add_option("--align", gen.align_percent, "Percent of edge ends aligned with a vertex hyperplane")
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check_cmd) {
      Graph g = load(input);
      std::cout << "ok: " << vgbs_graph_vertex_count(g.get()) << " vertices, "
                << vgbs_graph_edge_count(g.get()) << " edges\n";
    } else if (*reduce_cmd) {
      Graph g = load(input);
      vgbs_graph* out = nullptr;
      char* records = nullptr;
      check(vgbs_graph_reduce(g.get(), &out, records_path.empty() ? nullptr : &records), "reduce");
      Graph reduced(out);
      if (!records_path.empty()) write_output(records_path, take(records));
      write_output(output, to_json(reduced.get()));
    } else if (*jsj_cmd) {
      Graph g = load(input);
      unsigned flags = (post_reduce ? VGBS_JSJ_REDUCE_OUTPUT : 0u) | (unchecked ? VGBS_JSJ_UNCHECKED : 0u);
      vgbs_graph* out = nullptr;
      char* report = nullptr;
      check(vgbs_jsj_compute(g.get(), flags, &out, report_path.empty() ? nullptr : &report), "jsj");
      Graph result(out);
      if (bound >= 0) {
        vgbs_graph* bounded = nullptr;
        check(vgbs_bounded_rank(result.get(), static_cast<size_t>(bound), &bounded), "bound");
        result.reset(bounded);
      }
      if (!report_path.empty()) write_output(report_path, take(report));
      if (!dot_path.empty()) {
        char* dot = nullptr;
        check(vgbs_graph_to_dot(result.get(), &dot), "dot");
        write_output(dot_path, take(dot));
      }
      write_output(output, to_json(result.get()));
    } else if (*classify_cmd) {
      char* out = nullptr;
      check(vgbs_classify_matrix(matrix.c_str(), &out), "classify-matrix");
      std::cout << take(out);
    } else if (*abel_cmd) {
      Graph g = load(input);
      char* out = nullptr;
      check(vgbs_graph_abelianization(g.get(), &out), "abel");
      std::cout << take(out);
    } else if (*dot_cmd) {
      Graph g = load(input);
      char* dot = nullptr;
      check(vgbs_graph_to_dot(g.get(), &dot), "dot");
      write_output(output, take(dot));
    } else if (*gen_cmd) {
      vgbs_graph* out = nullptr;
      vgbs_status s = vgbs_generate(&gen, &out);
      if (s == VGBS_ERR_PARAM) throw Failure{kUsage, std::string("gen: ") + vgbs_last_error()};
      check(s, "gen");
      Graph g(out);
      write_output(output, to_json(g.get()));
    }
  } catch (const Failure& f) {
    std::cerr << "vgbs: " << f.message << "\n";
    return f.code;
  }
  return kOk;
}
