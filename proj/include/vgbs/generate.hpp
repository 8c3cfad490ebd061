// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

// Seeded random graphs of groups for property tests and fuzzing.

#ifndef VGBS_GENERATE_HPP
#define VGBS_GENERATE_HPP

#include <cstdint>

#include "vgbs/graph.hpp"

namespace vgbs {

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t max_rank = 3;
  std::size_t n_vertices = 3;
  std::size_t n_edges = 3;
  long max_entry = 3;
  // Relative weights of the edge shapes.
  unsigned weight_generic = 2;
  unsigned weight_loop = 1;
  unsigned weight_one_one = 2;
  unsigned weight_two_two = 2;
  // Chance, in percent, that an edge end is drawn aligned with the vertex's
  // random hyperplane instead of uniformly.
  unsigned align_percent = 50;
};

// Connected, valid, all-abelian graph; identical params give identical graphs.
GraphOfGroups generate_random(const GenParams& p);

// Parameters of the standard corpus: ranks <= 4, <= 6 edges, entries <= 3,
// three in four edge ends aligned.
GenParams corpus_params(std::uint64_t seed);

}  // namespace vgbs

#endif  // VGBS_GENERATE_HPP
