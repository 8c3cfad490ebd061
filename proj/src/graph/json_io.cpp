// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <sstream>

#include "vgbs/error.hpp"
#include "vgbs/graph.hpp"

namespace vgbs {

using nlohmann::json;

namespace {

constexpr long kExactDoubleLimit = 9007199254740992L;  // 2^53

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::ParseError, (path.empty() ? "/" : path) + ": " + message);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "/" + key, "missing required field \"" + key + "\"");
  return *it;
}

std::string string_field(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) fail(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

std::size_t count_field(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer() && v.get<long>() >= 0) return static_cast<std::size_t>(v.get<long>());
  fail(path + "/" + key, "expected a nonnegative integer");
}

GraphOfGroups parse_body(const json& doc, const std::string& path) {
  if (!doc.is_object()) fail(path, "expected an object");
  GraphOfGroups g;

  const json& vertices = require(doc, "vertices", path);
  if (!vertices.is_array()) fail(path + "/vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string at = path + "/vertices/" + std::to_string(i);
    const json& v = vertices[i];
    if (!v.is_object()) fail(at, "expected an object");
    std::string id = string_field(v, "id", at);
    if (g.has_vertex(id)) fail(at + "/id", "duplicate vertex id \"" + id + "\"");
    std::string kind = string_field(v, "kind", at);
    if (kind == "abelian") {
      g.add_vertex(id, VertexGroup::abelian(count_field(v, "rank", at)));
    } else if (kind == "polycyclic") {
      std::size_t rank = count_field(v, "rank", at);
      IntMatrix m = matrix_from_json(require(v, "automorphism", at), at + "/automorphism");
      if (m.rows() != rank || m.cols() != rank)
        fail(at + "/automorphism", "expected a " + std::to_string(rank) + "x" +
                                       std::to_string(rank) + " matrix");
      if (abs(determinant(m)) != 1) fail(at + "/automorphism", "matrix is not unimodular");
      g.add_vertex(id, VertexGroup::polycyclic(UnimodularAuto(m)));
    } else if (kind == "opaque") {
      g.add_vertex(id, VertexGroup::opaque(parse_body(require(v, "subgraph", at), at + "/subgraph")));
    } else {
      fail(at + "/kind", "unknown vertex kind \"" + kind + "\"");
    }
  }

  const json& edges = require(doc, "edges", path);
  if (!edges.is_array()) fail(path + "/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = path + "/edges/" + std::to_string(i);
    const json& e = edges[i];
    if (!e.is_object()) fail(at, "expected an object");
    Edge edge;
    edge.id = string_field(e, "id", at);
    if (g.has_edge(edge.id)) fail(at + "/id", "duplicate edge id \"" + edge.id + "\"");
    edge.from = string_field(e, "from", at);
    edge.to = string_field(e, "to", at);
    edge.rank = count_field(e, "rank", at);
    edge.att_from = matrix_from_json(require(e, "att_from", at), at + "/att_from");
    edge.att_to = matrix_from_json(require(e, "att_to", at), at + "/att_to");
    if (e.contains("anchor_from")) edge.anchor_from = string_field(e, "anchor_from", at);
    if (e.contains("anchor_to")) edge.anchor_to = string_field(e, "anchor_to", at);
    g.add_edge(std::move(edge));
  }
  return g;
}

json body_to_json(const GraphOfGroups& g) {
  json vertices = json::array();
  for (const auto& [id, v] : g.vertices()) {
    json jv = {{"id", id}};
    switch (v.kind()) {
      case VertexKind::Abelian:
        jv["kind"] = "abelian";
        jv["rank"] = v.rank();
        break;
      case VertexKind::Polycyclic:
        jv["kind"] = "polycyclic";
        jv["rank"] = v.rank();
        jv["automorphism"] = matrix_to_json(v.polycyclic().automorphism.matrix());
        break;
      case VertexKind::Opaque:
        jv["kind"] = "opaque";
        jv["subgraph"] = body_to_json(*v.opaque().subgraph);
        break;
    }
    vertices.push_back(std::move(jv));
  }
  json edges = json::array();
  for (const auto& [id, e] : g.edges()) {
    json je = {{"id", id},
               {"from", e.from},
               {"to", e.to},
               {"rank", e.rank},
               {"att_from", matrix_to_json(e.att_from)},
               {"att_to", matrix_to_json(e.att_to)}};
    if (!e.anchor_from.empty()) je["anchor_from"] = e.anchor_from;
    if (!e.anchor_to.empty()) je["anchor_to"] = e.anchor_to;
    edges.push_back(std::move(je));
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json int_to_json(const Int& x) {
  if (x.fits_slong_p() && abs(x) < kExactDoubleLimit) return x.get_si();
  return x.get_str();
}

Int int_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
  if (j.is_string()) {
    Int x;
    const std::string s = j.get<std::string>();
    if (s.empty() || x.set_str(s, 10) != 0) fail(path, "\"" + s + "\" is not a decimal integer");
    return x;
  }
  fail(path, "expected an integer");
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) fail(path + "/" + std::to_string(i), "expected a row array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols)
      fail(path + "/" + std::to_string(i), "row length " + std::to_string(j[i].size()) +
                                               " differs from " + std::to_string(cols));
  }
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = int_from_json(j[i][k], path + "/" + std::to_string(i) + "/" + std::to_string(k));
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

json graph_to_json(const GraphOfGroups& g) {
  json doc = body_to_json(g);
  doc["format"] = "vgbs-v1";
  return doc;
}

GraphOfGroups graph_from_json(const json& doc) {
  if (!doc.is_object()) fail("", "expected an object");
  const json& format = require(doc, "format", "");
  if (format != "vgbs-v1") fail("/format", "unsupported format, expected \"vgbs-v1\"");
  return parse_body(doc, "");
}

GraphOfGroups parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("syntax error: ") + e.what());
  }
  return graph_from_json(doc);
}

std::string serialize(const GraphOfGroups& g) { return graph_to_json(g).dump(2) + "\n"; }

std::string to_dot(const GraphOfGroups& g) {
  std::ostringstream os;
  os << "digraph vgbs {\n";
  for (const auto& [id, v] : g.vertices()) {
    std::string label = id + "\\n";
    std::string shape = "ellipse";
    switch (v.kind()) {
      case VertexKind::Abelian:
        label += "abelian Z^" + std::to_string(v.rank());
        break;
      case VertexKind::Polycyclic:
        label += "polycyclic Z^" + std::to_string(v.rank()) + " x| Z";
        shape = "box";
        break;
      case VertexKind::Opaque:
        label += "opaque (" + std::to_string(v.opaque().subgraph->vertices().size()) +
                 " vertices)";
        shape = "box3d";
        break;
    }
    os << "  " << dot_quote(id) << " [label=" << dot_quote(label) << ", shape=" << shape
       << "];\n";
  }
  for (const auto& [id, e] : g.edges()) {
    std::string type = "?";
    if (g.vertex(e.from).is_abelian() && g.vertex(e.to).is_abelian()) type = edge_type(g, id).str();
    std::string label = id + "\\nZ^" + std::to_string(e.rank) + " (" + type + ")";
    os << "  " << dot_quote(e.from) << " -> " << dot_quote(e.to) << " [label=" << dot_quote(label)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace vgbs
