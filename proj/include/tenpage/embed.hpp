#pragma once
// Composition driver: runs the two-level analysis over all nesting levels of
// a normalized 1-planar multigraph and assembles one global book embedding.
// The fixed page ledger:
//   0      outermost cycle, its chords and backward bindings
//   1, 2   block pages at even levels, the two phases
//   3, 4   block pages at odd levels
//   5, 6   red crossing edges, by level parity
//   7      purple edges, first side of the global 2-coloring
//   8, 9   purple edges, second side, by level parity
// Pages 10 and up only appear when an invariant breaks; the result is then
// flagged as overflow and each such edge gets a diagnostic.

#include <string>
#include <vector>

#include "tenpage/plane_graph.hpp"
#include "tenpage/verify.hpp"

namespace tenpage {

struct InstanceStats {
  int level = 0;
  int roles = 0;   // distinct logical pages used by the instance
  int bgr = 0;     // black, green and red roles among them
  int purple = 0;  // purple sides among them
};

struct EmbedResult {
  BookEmbedding emb;  // spine over the real vertices, page per original edge
  bool overflow = false;
  std::vector<std::string> diagnostics;
  std::vector<InstanceStats> stats;  // one entry per processed instance
};

// g must be the output of normalize(); original edge ids are preserved there,
// so emb.page lines up with the edges of the drawing that was normalized.
EmbedResult ten_page_embed(const PlaneGraph& g);

// The real vertices and original edges of a (possibly normalized) drawing,
// in the shape the verifier consumes.
SimpleGraph original_graph(const PlaneGraph& g);

}  // namespace tenpage
