#pragma once
// Combinatorial embedding of a 1-planar drawing.
//
// The drawing is stored as its planarization: every crossing is a degree-4
// dummy vertex, and every edge is one arc (uncrossed) or two arcs through its
// dummy. Arcs carry two darts, 2a and 2a+1, with tails at the two arc ends.
// Rotations are clockwise. The face to the LEFT of a dart is the orbit of
// d -> cw_next[twin(d)]; interior faces are traversed counterclockwise that
// way and the outer face clockwise around the graph.

#include <optional>
#include <utility>
#include <vector>

#include "tenpage/core.hpp"

namespace tenpage {

enum class EdgeOrigin { original, augmented };

struct EdgeRec {
  VertexId u = -1, v = -1;
  int copy_index = 0;  // 0 = the edge itself, k = k-th parallel copy
  EdgeOrigin origin = EdgeOrigin::original;
  EdgeId partner = -1;   // crossing partner, -1 if uncrossed
  VertexId dummy = -1;   // crossing point in the planarization
  int arc0 = -1, arc1 = -1;  // arc1 used only when crossed
  bool crossed() const { return partner >= 0; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

struct PlaneGraph {
  int n = 0;       // all vertices, dummies included
  int n_real = 0;  // dummies occupy ids [n_real, n)
  std::vector<EdgeRec> edges;
  std::vector<EdgeId> arc_edge;     // per arc; -1 marks a deleted arc
  std::vector<VertexId> dart_tail;  // per dart
  std::vector<Dart> cw_next, cw_prev;
  std::vector<Dart> vertex_dart;  // some live dart per vertex, -1 if isolated
  Dart outer = -1;                // the outer face lies to its left

  static Dart twin(Dart d) { return d ^ 1; }
  int arcs() const { return (int)arc_edge.size(); }
  int darts() const { return 2 * arcs(); }
  bool arc_alive(int a) const { return arc_edge[a] >= 0; }
  bool dart_alive(Dart d) const { return arc_alive(d >> 1); }
  VertexId tail(Dart d) const { return dart_tail[d]; }
  VertexId head(Dart d) const { return dart_tail[twin(d)]; }
  EdgeId edge_of(Dart d) const { return arc_edge[d >> 1]; }
  Dart face_next(Dart d) const { return cw_next[twin(d)]; }

  bool is_dummy(VertexId v) const { return v >= n_real; }
  int live_edge_count() const;

  // Dart of edge e leaving endpoint x (x must be e.u or e.v); for a crossed
  // edge this is the arc end at x.
  Dart edge_dart(EdgeId e, VertexId x) const;

  int degree(VertexId v) const;

  // --- mutation -------------------------------------------------------
  // A face corner is named by its leaving dart: the dart d with tail at the
  // corner vertex whose left face is the face in question.

  VertexId add_vertex();
  int new_arc(VertexId x, VertexId y);  // darts left unlinked
  void link_after(Dart at, Dart d);     // insert d cw-after `at` (same tail)
  void link_isolated(Dart d);           // first dart at its tail
  void link_before_corner(Dart corner, Dart d);  // insert cw-before `corner`
  void unlink(Dart d);
  void replace_dart(Dart old_d, Dart new_d);  // same rotation slot

  // Insert an uncrossed edge inside the face shared by the two corners.
  EdgeId add_edge_in_face(Dart corner_u, Dart corner_v, EdgeRec proto);

  // Insert vertex + edge from u's corner to a fresh isolated vertex w.
  EdgeId add_edge_to_isolated(Dart corner_u, VertexId w, EdgeRec proto);

  // Insert edge (a,c) crossing the existing uncrossed edge `over`.
  // corner_a / corner_c lie in the two faces adjacent to `over`.
  EdgeId add_crossed_pair(Dart corner_a, VertexId a, Dart corner_c, VertexId c,
                          EdgeId over);

  // Delete edge e. If crossed, the partner collapses back to a single arc in
  // place and the dummy dies.
  void remove_edge(EdgeId e);

  void check_consistency() const;  // debug aid, O(n + m)
};

struct FaceSet {
  std::vector<int> face_of;              // per dart, -1 for dead darts
  std::vector<std::vector<Dart>> faces;  // boundary darts in orbit order
  int outer = -1;
  int size(int f) const { return (int)faces[f].size(); }
};

FaceSet compute_faces(const PlaneGraph& g);

// --- drawing ingestion -------------------------------------------------

struct RawCrossing {
  EdgeId e1 = -1, e2 = -1;
  bool flip = false;  // dummy rotation: false -> [e1@u, e2@u, e1@v, e2@v]
};

struct RawDrawing {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<RawCrossing> crossings;
  std::vector<std::vector<EdgeId>> rotations;  // clockwise, edge ids
  EdgeId outer_edge = -1;
  int outer_end = 0;  // dart leaves edges[outer_edge].u (0) or .v (1)
};

// Validates: no self loops, each edge crossed at most once, dummy degree 4,
// distinct crossing endpoints, connectivity, Euler formula.
PlaneGraph build_drawing(const RawDrawing& spec);

RawDrawing to_raw(const PlaneGraph& g);  // inverse of build_drawing

// Subgraph of uncrossed edges, same vertex/dart numbering (crossed arcs and
// dummies unlinked). The outer dart is inherited and must be uncrossed.
PlaneGraph planar_skeleton(const PlaneGraph& g);

// Orientation view: all direction-sensitive traversals go through a view so
// that odd peeling levels can run on the mirrored embedding (the handedness
// of "counterclockwise" flips each time the outer cycle moves one level in).
struct EmbView {
  const PlaneGraph* g = nullptr;
  bool mirror = false;
  Dart nxt(Dart d) const { return mirror ? g->cw_prev[d] : g->cw_next[d]; }
  Dart prv(Dart d) const { return mirror ? g->cw_next[d] : g->cw_prev[d]; }
  Dart face_next(Dart d) const { return nxt(PlaneGraph::twin(d)); }
  // Id of the face on the view's left of d, given unmirrored face ids.
  int face_left(const FaceSet& fs, Dart d) const {
    return fs.face_of[mirror ? PlaneGraph::twin(d) : d];
  }
};

}  // namespace tenpage
