#pragma once
// Independent validation of book embeddings, plus brute-force exact book
// thickness for tiny graphs. Works on plain edge lists so it can check
// graphs that are not 1-planar (K_n calibration) as well as pipeline output.

#include <optional>
#include <tuple>
#include <vector>

#include "tenpage/core.hpp"

namespace tenpage {

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

struct BookEmbedding {
  std::vector<VertexId> spine;  // permutation of 0..n-1
  std::vector<int> page;        // per edge; -1 = unassigned
  int pages_used = 0;
};

struct VerifyReport {
  bool valid = false;
  std::vector<std::tuple<int, EdgeId, EdgeId>> conflicts;  // (page, e1, e2)
  int pages_used = 0;
  std::vector<EdgeId> unassigned;
};

// Strict interleaving of the two edges' endpoints under the given positions;
// edges sharing an endpoint never twist.
bool twist(const std::vector<int>& position, std::pair<VertexId, VertexId> e1,
           std::pair<VertexId, VertexId> e2);

// Per-page twist check: a stack-validity sweep in O(m log m), with a
// quadratic cross-check (full conflict list) for small inputs.
VerifyReport verify(const SimpleGraph& g, const BookEmbedding& emb);

// Minimum page count for a fixed spine order, by exact backtracking over the
// twist graph coloring. Guarded to tiny graphs.
int pages_for_fixed_order(const SimpleGraph& g, const std::vector<VertexId>& order);

struct OracleResult {
  int book_thickness = 0;
  BookEmbedding witness;
  long long orders_tried = 0;
};

// Exact book thickness over all canonical circular spine orders. |V| <= 8.
OracleResult exact_book_thickness(const SimpleGraph& g);

}  // namespace tenpage
