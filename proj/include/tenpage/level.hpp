#pragma once
// Peeling levels on the planar skeleton: outer-face vertices are level 0,
// and a vertex is at level l+1 if it reaches the outer face once all levels
// up to l are removed. Computed as a multi-source BFS over faces: every
// face containing a level-l vertex promotes its unleveled vertices to l+1.

#include <vector>

#include "tenpage/plane_graph.hpp"

namespace tenpage {

struct LevelDecomposition {
  std::vector<int> level;  // per vertex; -1 for dummies / unreachable
  int max_level = 0;
};

LevelDecomposition compute_levels(const PlaneGraph& skeleton,
                                  const FaceSet& faces);

}  // namespace tenpage
