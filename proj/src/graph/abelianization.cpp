// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <functional>

#include "vgbs/error.hpp"
#include "vgbs/graph.hpp"

namespace vgbs {

namespace {

// Sparse relation column over the global generator list.
using Relation = std::vector<std::pair<std::size_t, Int>>;

struct Slot {
  std::size_t offset = 0;
  std::map<std::string, Slot> inner;  // opaque vertices only
};

struct Presentation {
  std::size_t generators = 0;
  std::vector<Relation> relations;
};

std::size_t component_count(const GraphOfGroups& g) {
  std::map<std::string, std::string> parent;
  for (const auto& [id, v] : g.vertices()) parent[id] = id;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    std::string& p = parent[x];
    if (p != x) p = find(p);
    return p;
  };
  std::size_t count = g.vertices().size();
  for (const auto& [id, e] : g.edges()) {
    std::string a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

std::map<std::string, Slot> emit(const GraphOfGroups& g, Presentation& p) {
  std::map<std::string, Slot> slots;
  for (const auto& [id, v] : g.vertices()) {
    Slot s;
    switch (v.kind()) {
      case VertexKind::Abelian:
        s.offset = p.generators;
        p.generators += v.rank();
        break;
      case VertexKind::Polycyclic: {
        s.offset = p.generators;
        const IntMatrix& phi = v.polycyclic().automorphism.matrix();
        std::size_t n = v.rank();
        p.generators += n + 1;  // fiber, then the stable letter
        for (std::size_t j = 0; j < n; ++j) {
          Relation r;
          for (std::size_t i = 0; i < n; ++i) {
            Int c = phi(i, j) - (i == j ? 1 : 0);
            if (c != 0) r.emplace_back(s.offset + i, c);
          }
          p.relations.push_back(std::move(r));
        }
        break;
      }
      case VertexKind::Opaque:
        s.inner = emit(*v.opaque().subgraph, p);
        break;
    }
    slots.emplace(id, std::move(s));
  }

  auto base = [&](const std::string& v, const std::string& anchor) {
    const Slot& s = slots.at(v);
    if (g.vertex(v).kind() != VertexKind::Opaque) return s.offset;
    auto it = s.inner.find(anchor);
    if (it == s.inner.end())
      throw Error(ErrorCode::UnknownId, "anchor '" + anchor + "' unresolved in '" + v + "'");
    return it->second.offset;
  };

  for (const auto& [id, e] : g.edges()) {
    std::size_t from = base(e.from, e.anchor_from);
    std::size_t to = base(e.to, e.anchor_to);
    for (std::size_t j = 0; j < e.rank; ++j) {
      std::map<std::size_t, Int> acc;
      for (std::size_t i = 0; i < e.att_from.rows(); ++i) acc[from + i] += e.att_from(i, j);
      for (std::size_t i = 0; i < e.att_to.rows(); ++i) acc[to + i] -= e.att_to(i, j);
      Relation r;
      for (auto& [k, c] : acc)
        if (c != 0) r.emplace_back(k, c);
      p.relations.push_back(std::move(r));
    }
  }

  // One free stable letter per edge outside a spanning forest.
  p.generators += g.edges().size() + component_count(g) - g.vertices().size();
  return slots;
}

}  // namespace

AbelianInvariants abelianization(const GraphOfGroups& g) {
  Presentation p;
  emit(g, p);
  IntMatrix r(p.generators, p.relations.size());
  for (std::size_t j = 0; j < p.relations.size(); ++j)
    for (const auto& [i, c] : p.relations[j]) r(i, j) = c;

  AbelianInvariants out;
  std::size_t rank = 0;
  for (const auto& d : snf(r).diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = p.generators - rank;
  return out;
}

}  // namespace vgbs
