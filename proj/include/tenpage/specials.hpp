#pragma once
// Special-case embedders and instance generators: the 4-page scheme for
// drawings whose planar skeleton has a Hamiltonian cycle, the density lower
// bound for page counts, and seeded generators for the test corpus.

#include <cstdint>
#include <optional>
#include <vector>

#include "tenpage/plane_graph.hpp"
#include "tenpage/verify.hpp"

namespace tenpage {

struct HamiltonianCertificate {
  enum class Source { provided, xw_closed_form, search };
  std::vector<VertexId> cycle;  // Hamiltonian cycle of the planar skeleton
  Source source = Source::provided;
};

// Book embedding along a skeleton Hamiltonian cycle. Spine = cycle order.
// Each crossing pair is split green/red (green = smaller edge id); uncrossed
// and green edges go to pages 0/1, red edges to pages 2/3, split by which
// side of the cycle the edge is drawn on. At most 4 pages, at most 2 when
// the drawing has no crossings. Pages cover the original edges of g.
BookEmbedding hamiltonian_embed(const PlaneGraph& g,
                                const HamiltonianCertificate& cert);

// Hamiltonian cycle of the planar skeleton, if one is found: closed form for
// extended wheels, bounded backtracking otherwise (n <= 30, capped effort).
// Absence (or giving up) returns nullopt, never an error.
std::optional<HamiltonianCertificate> find_skeleton_hamiltonian(
    const PlaneGraph& g);

// ceil((m - n) / (n - 3)): every book embedding of an n-vertex m-edge graph
// needs at least this many pages. Requires n >= 4.
int lower_bound(int n, int m);

// Extended wheel XW_2k: a rim cycle v_1..v_2k, two poles adjacent to every
// rim vertex (no pole-pole edge), and chords (v_i, v_i+2) each crossing one
// pole edge. n = 2k + 2 vertices, 4n - 8 edges. Requires k >= 3.
RawDrawing gen_xw(int k);

// XW_6: 8 vertices, 24 edges, the smallest extended wheel.
RawDrawing gen_crossed_cube();

// Complete graph as a plain edge list (not 1-planar for n >= 7).
SimpleGraph gen_kn(int n);

// Random maximal planar graph with 3n - 6 edges, by inserting each new
// vertex into a uniformly random interior face. Requires n >= 3.
RawDrawing gen_planar_triangulation(int n, uint32_t seed);

// Random 1-planar drawing: a seeded triangulation plus crossed chords, one
// through each of a maximal set of interior edges whose two flanking
// triangles are still crossing-free. Requires n >= 4.
RawDrawing gen_random_one_planar(int n, uint32_t seed);

}  // namespace tenpage
