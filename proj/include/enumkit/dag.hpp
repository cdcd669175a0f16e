#pragma once

#include <cstdint>
#include <vector>

#include "enumkit/enumerator.hpp"

namespace enumkit {

// Directed acyclic graph with a source and a target, vertices 1..vertex_count.
// Acyclicity is established at construction (ValidationError otherwise) and
// yields the topological ranks used to decode a path from its vertex set: the
// vertices of a simple path are totally ordered by reachability, so the set
// determines the sequence.
struct Dag {
  uint32_t vertex_count = 0;
  std::vector<std::pair<uint32_t, uint32_t>> arcs;  // 1-based (from, to)
  uint32_t source = 1;
  uint32_t target = 1;

  std::vector<std::vector<uint32_t>> adjacency;  // built by finalize()
  std::vector<uint32_t> topo_rank;

  static Dag make(uint32_t vertices, std::vector<std::pair<uint32_t, uint32_t>> arc_list,
                  uint32_t source, uint32_t target);

  // Vertex sequence of the path with this vertex set.
  std::vector<uint32_t> decode_path(const Solution& vertex_set) const;
};

// Layered DAG used for streaming experiments: `layers` ranks between source
// and target, two vertices per intermediate rank, complete arcs between
// consecutive ranks; exactly 2^(layers-1) source-target paths.
Dag make_layered_dag(uint32_t layers);

// Enumerates the simple source-target paths, each exactly once, as vertex
// sets. Preprocessing prunes vertices that cannot reach the target, so every
// descent of the traversal ends in an emission and the work per output is
// proportional to the emitted path plus the backtrack distance.
Machine dag_paths(const Dag& g);

}  // namespace enumkit
