#pragma once
// Normalization of a 1-planar drawing: reroute removable crossings, complete
// every crossing to an X-quadrangle (kite), wrap crossings off the outer
// face with an edge copy, then triangulate all remaining big faces. The
// result is a 1-planar multigraph whose interior faces are triangles and
// kites, with at most 4n-7 edges including copies.

#include <string>
#include <vector>

#include "tenpage/plane_graph.hpp"

namespace tenpage {

struct NormalizeStats {
  int reroutes = 0;        // crossings removed by rerouting
  int reroute_rounds = 0;  // fixpoint iterations of the reroute scan
  int kite_edges = 0;      // edges added to complete X-quadrangles
  int wraps = 0;           // copies added to clear the outer face
  int chords = 0;          // triangulation chords
  int copies = 0;          // how many added edges are copies of existing ones
};

struct Normalized {
  PlaneGraph g;
  NormalizeStats stats;
};

Normalized normalize(const PlaneGraph& drawing);

struct NormalFormReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every clause of the normal form: interior faces are triangles or
// kite sides, no crossing touches the outer face, copies are uncrossed, no
// interior empty lens, edge count within 4n-7.
NormalFormReport check_normal_form(const PlaneGraph& g);

}  // namespace tenpage
