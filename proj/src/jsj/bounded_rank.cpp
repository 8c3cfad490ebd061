// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <functional>
#include <set>

#include "vgbs/error.hpp"
#include "vgbs/jsj.hpp"

namespace vgbs {

GraphOfGroups bounded_rank_jsj(const GraphOfGroups& g, std::size_t n) {
  for (const auto& [id, v] : g.vertices())
    if (v.kind() == VertexKind::Opaque)
      throw Error(ErrorCode::UnsupportedVertexKind, "input already has opaque vertex '" + id + "'");

  std::map<std::string, std::string> parent;
  for (const auto& [id, v] : g.vertices()) parent[id] = id;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    std::string& p = parent[x];
    if (p != x) p = find(p);
    return p;
  };
  std::set<std::string> heavy_roots;
  for (const auto& [id, e] : g.edges()) {
    if (e.rank <= n) continue;
    std::string a = find(e.from), b = find(e.to);
    if (a != b) parent[a] = b;
  }
  for (const auto& [id, e] : g.edges())
    if (e.rank > n) heavy_roots.insert(find(e.from));
  if (heavy_roots.empty()) return g;

  // Component members, in id order.
  std::map<std::string, std::vector<std::string>> members;
  for (const auto& [id, v] : g.vertices()) {
    std::string r = find(id);
    if (heavy_roots.count(r)) members[r].push_back(id);
  }

  GraphOfGroups out;
  std::map<std::string, std::string> image;  // original vertex -> output vertex
  std::set<std::string> taken;
  for (const auto& [id, v] : g.vertices())
    if (!heavy_roots.count(find(id))) taken.insert(id);

  for (const auto& [root, ids] : members) {
    GraphOfGroups sub;
    for (const auto& id : ids) sub.add_vertex(id, g.vertex(id));
    for (const auto& [eid, e] : g.edges())
      if (e.rank > n && find(e.from) == root) sub.add_edge(e);
    std::string name = "opaque:";
    for (std::size_t i = 0; i < ids.size(); ++i) name += (i ? "+" : "") + ids[i];
    std::string unique = name;
    for (std::size_t k = 2; taken.count(unique); ++k) unique = name + "." + std::to_string(k);
    taken.insert(unique);
    for (const auto& id : ids) image[id] = unique;
    out.add_vertex(unique, VertexGroup::opaque(std::move(sub)));
  }
  for (const auto& [id, v] : g.vertices())
    if (!image.count(id)) {
      image[id] = id;
      out.add_vertex(id, v);
    }

  for (const auto& [id, e] : g.edges()) {
    if (e.rank > n) continue;
    Edge copy = e;
    copy.from = image.at(e.from);
    copy.to = image.at(e.to);
    if (copy.from != e.from) copy.anchor_from = e.from;
    if (copy.to != e.to) copy.anchor_to = e.to;
    out.add_edge(std::move(copy));
  }
  return out;
}

}  // namespace vgbs
