#pragma once
// Hand-checked drawings used across the test suite. Rotations are clockwise
// edge-id lists; each fixture's outer dart is chosen so the declared outer
// cycle reads clockwise around the drawing.

#include <utility>
#include <vector>

#include "tenpage/plane_graph.hpp"

namespace fixtures {

using tenpage::RawDrawing;

// Planar K4: triangle a,b,c outside, x = 3 in the middle.
// Edges: 0 ab, 1 ac, 2 ax, 3 bc, 4 bx, 5 cx.
inline RawDrawing k4_planar() {
  RawDrawing d;
  d.n = 4;
  d.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  d.rotations = {{0, 2, 1}, {3, 4, 0}, {1, 5, 3}, {2, 4, 5}};
  d.outer_edge = 0;  // dart a->b, outer face (a,b,c)
  d.outer_end = 0;
  return d;
}

// Square a,b,c,d (clockwise) with crossed diagonals ac x bd.
// Edges: 0 ab, 1 bc, 2 cd, 3 da, 4 ac, 5 bd.
inline RawDrawing k4_crossed() {
  RawDrawing d;
  d.n = 4;
  d.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}};
  d.crossings = {{4, 5, false}};
  d.rotations = {{0, 4, 3}, {1, 5, 0}, {2, 4, 1}, {3, 5, 2}};
  d.outer_edge = 0;  // dart a->b, outer face (a,b,c,d)
  d.outer_end = 0;
  return d;
}

// Octahedron, planar. Outer triangle a,b,c (= 0,1,2); inner triangle d,e,f
// (= 3,4,5) with d adjacent to {c,a}, e to {c,b}, f to {a,b}.
// Edges: 0 ab, 1 ac, 2 ad, 3 af, 4 bc, 5 be, 6 bf, 7 cd, 8 ce, 9 de,
//        10 df, 11 ef.
inline RawDrawing octahedron() {
  RawDrawing d;
  d.n = 6;
  d.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 4},
             {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}};
  d.rotations = {
      {0, 3, 2, 1},   // a: b, f, d, c
      {4, 5, 6, 0},   // b: c, e, f, a
      {1, 7, 8, 4},   // c: a, d, e, b
      {7, 2, 10, 9},  // d: c, a, f, e
      {8, 9, 11, 5},  // e: c, d, f, b
      {10, 3, 6, 11}  // f: d, a, b, e
  };
  d.outer_edge = 0;  // dart a->b, outer face (a,b,c)
  d.outer_end = 0;
  return d;
}

// Icosahedron, planar. a = 0 at the centre, rings b_0..b_4 = 1..5 and
// c_0..c_4 = 6..10, z = 11 outside. Ring indices wrap mod 5.
inline RawDrawing icosahedron() {
  RawDrawing d;
  d.n = 12;
  auto B = [](int i) { return 1 + ((i % 5) + 5) % 5; };
  auto C = [](int i) { return 6 + ((i % 5) + 5) % 5; };
  std::vector<std::pair<int, int>> e;
  auto add = [&](int u, int v) {
    e.push_back({u, v});
    return (int)e.size() - 1;
  };
  int ab[5], bb[5], bc_same[5], bc_next[5], cc[5], cz[5];
  for (int i = 0; i < 5; ++i) ab[i] = add(0, B(i));
  for (int i = 0; i < 5; ++i) bb[i] = add(B(i), B(i + 1));
  for (int i = 0; i < 5; ++i) bc_same[i] = add(B(i), C(i));
  for (int i = 0; i < 5; ++i) bc_next[i] = add(B(i + 1), C(i));
  for (int i = 0; i < 5; ++i) cc[i] = add(C(i), C(i + 1));
  for (int i = 0; i < 5; ++i) cz[i] = add(C(i), 11);
  d.n = 12;
  d.edges = e;
  d.rotations.resize(12);
  for (int i = 0; i < 5; ++i) d.rotations[0].push_back(ab[i]);
  for (int i = 0; i < 5; ++i) {
    // b_i: a, b_{i-1}, c_{i-1}, c_i, b_{i+1}
    d.rotations[B(i)] = {ab[i], bb[(i + 4) % 5], bc_next[(i + 4) % 5],
                         bc_same[i], bb[i]};
    // c_i: b_i, c_{i-1}, z, c_{i+1}, b_{i+1}
    d.rotations[C(i)] = {bc_same[i], cc[(i + 4) % 5], cz[i], cc[i],
                         bc_next[i]};
  }
  // z clockwise: c_4, c_3, c_2, c_1, c_0
  d.rotations[11] = {cz[4], cz[3], cz[2], cz[1], cz[0]};
  d.outer_edge = cz[0];  // dart z->c_0, outer face (z, c_0, c_1)
  d.outer_end = 1;
  return d;
}

// Square a,b,c,d with crossed diagonals plus an ear vertex e outside,
// joined to a and c so that the interior face (a,b,c,e) holds both
// endpoints of the crossed edge ac; normalization must reroute ac there.
// Edges: 0 ab, 1 bc, 2 cd, 3 da, 4 ac, 5 bd, 6 ea, 7 ec.
inline RawDrawing square_with_ear() {
  RawDrawing d;
  d.n = 5;
  d.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {4, 0}, {4, 2}};
  d.crossings = {{4, 5, false}};
  d.rotations = {
      {4, 3, 6, 0},  // a: c, d, e, b
      {1, 5, 0},     // b: c, d, a
      {2, 4, 1, 7},  // c: d, a, b, e
      {3, 5, 2},     // d: a, b, c
      {7, 6}         // e: c, a
  };
  d.outer_edge = 6;  // dart a->e, outer face (a,e,c,d)
  d.outer_end = 1;
  return d;
}

}  // namespace fixtures
