#include "tenpage/normalize.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace tenpage {

namespace {

uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (uint64_t)u << 32 | (uint32_t)v;
}

struct Normalizer {
  PlaneGraph g;
  NormalizeStats stats;
  std::unordered_map<uint64_t, int> edge_count;  // live edges per vertex pair

  explicit Normalizer(const PlaneGraph& in) : g(in) {
    for (const auto& e : g.edges)
      if (e.arc0 >= 0) ++edge_count[pair_key(e.u, e.v)];
  }

  int copies_of(VertexId u, VertexId v) const {
    auto it = edge_count.find(pair_key(u, v));
    return it == edge_count.end() ? 0 : it->second;
  }

  EdgeRec proto_for(VertexId u, VertexId v) {
    EdgeRec p;
    p.origin = EdgeOrigin::augmented;
    p.copy_index = copies_of(u, v);
    if (p.copy_index > 0) ++stats.copies;
    ++edge_count[pair_key(u, v)];
    return p;
  }

  std::vector<Dart> orbit(Dart d0) const {
    std::vector<Dart> out;
    Dart d = d0;
    do {
      out.push_back(d);
      d = g.face_next(d);
    } while (d != d0);
    return out;
  }

  // --- step 1: reroute crossed edges both of whose endpoints share an
  // interior face. Each reroute removes one crossing. Repeats until no
  // candidate remains; added edges can only split faces, so the fixpoint
  // is stable afterwards.
  void reroute_all() {
    for (;;) {
      ++stats.reroute_rounds;
      FaceSet fs = compute_faces(g);
      StampedMap at_face;
      at_face.resize(g.n);
      EdgeId best = -1;
      int best_face = -1;
      for (int f = 0; f < (int)fs.faces.size(); ++f) {
        if (f == fs.outer) continue;
        at_face.clear();
        for (Dart d : fs.faces[f]) at_face.set(g.tail(d), 1);
        for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e) {
          const EdgeRec& r = g.edges[e];
          if (r.arc0 < 0 || !r.crossed()) continue;
          if (!at_face.has(r.u) || !at_face.has(r.v)) continue;
          // A crossed edge with an uncrossed copy is already wrapped;
          // rerouting it next to the copy would only create an empty lens.
          if (copies_of(r.u, r.v) > 1) continue;
          if (best < 0 || e < best) {
            best = e;
            best_face = f;
          }
        }
      }
      if (best < 0) return;
      reroute(best, fs, best_face);
      ++stats.reroutes;
    }
  }

  void reroute(EdgeId e, const FaceSet& fs, int f) {
    EdgeId p = g.edges[e].partner;
    VertexId u = g.edges[e].u, v = g.edges[e].v;
    // A boundary dart of f that survives the removal, to find the merged
    // face again.
    Dart anchor = -1;
    for (Dart d : fs.faces[f])
      if (g.edge_of(d) != e && g.edge_of(d) != p) {
        anchor = d;
        break;
      }
    require(anchor >= 0, Err::Internal, "reroute face has no stable dart");
    keep_outer_off(e, p);
    g.remove_edge(e);
    // Re-attach e inside the merged face, at the first corners of u and v.
    Dart cu = -1, cv = -1;
    for (Dart d : orbit(anchor)) {
      if (cu < 0 && g.tail(d) == u) cu = d;
      if (cv < 0 && g.tail(d) == v) cv = d;
    }
    require(cu >= 0 && cv >= 0, Err::Internal, "reroute lost an endpoint");
    int a = g.new_arc(u, v);
    g.arc_edge[a] = e;
    g.edges[e].arc0 = a;
    g.link_before_corner(cu, 2 * a);
    g.link_before_corner(cv, 2 * a + 1);
  }

  // Keep g.outer on a dart that survives deleting edges e and p.
  void keep_outer_off(EdgeId e, EdgeId p) {
    if (g.edge_of(g.outer) != e && g.edge_of(g.outer) != p) return;
    for (Dart d : orbit(g.outer))
      if (g.edge_of(d) != e && g.edge_of(d) != p) {
        g.outer = d;
        return;
      }
    fail(Err::Internal, "outer face lost during reroute");
  }

  // --- step 2: wrap crossings off the outer face. While a dummy sits on
  // the outer boundary, connect its two real neighbours on that face; when
  // the outer face is just that kite triangle, the connection is an edge
  // copy and the new outer face is the resulting 2-gon.
  void wrap_outer() {
    for (;;) {
      std::vector<Dart> ob = orbit(g.outer);
      Dart at_dummy = -1;
      for (size_t i = 0; i < ob.size(); ++i)
        if (g.is_dummy(g.tail(ob[i]))) {
          at_dummy = (int)i;
          break;
        }
      if (at_dummy < 0) return;
      Dart d = ob[at_dummy];  // leaves the dummy
      Dart prev = ob[(at_dummy + ob.size() - 1) % ob.size()];
      VertexId x = g.head(d), y = g.tail(prev);
      Dart corner_x = g.face_next(d);
      Dart corner_y = prev;  // dart y -> dummy
      EdgeId ne = g.add_edge_in_face(corner_x, corner_y, proto_for(x, y));
      // The dummy-side split face is always the left of dart x->y; the
      // other side (a 2-gon when the old outer face was the kite triangle)
      // becomes the outer face.
      g.outer = 2 * g.edges[ne].arc0 + 1;
      ++stats.wraps;
    }
  }

  // --- step 3: complete every crossing to an X-quadrangle. Each of the
  // four faces at a dummy gets the edge between the dummy's two adjacent
  // real neighbours unless it is already a triangle.
  void add_kites() {
    for (VertexId w = g.n_real; w < g.n; ++w) {
      if (g.vertex_dart[w] < 0) continue;
      Dart ds[4];
      Dart d0 = g.vertex_dart[w];
      ds[0] = d0;
      for (int i = 1; i < 4; ++i) ds[i] = g.cw_next[ds[i - 1]];
      for (Dart d : ds) {
        std::vector<Dart> fb = orbit(d);
        require(fb.size() >= 3, Err::NotAnEmbedding, "degenerate kite face");
        if (fb.size() == 3) continue;
        VertexId x = g.head(d);
        VertexId y = g.head(g.cw_prev[d]);
        Dart corner_x = g.face_next(d);
        Dart corner_y = PlaneGraph::twin(g.cw_prev[d]);  // y -> w
        g.add_edge_in_face(corner_x, corner_y, proto_for(x, y));
        ++stats.kite_edges;
      }
    }
  }

  // --- step 4: triangulate every remaining face of size >= 4 (they have
  // no dummy corners by now). Chord choice: least orbit position i, then
  // least j, skipping neighbours, preferring a chord that is not a copy.
  void triangulate_all() {
    FaceSet fs = compute_faces(g);
    for (int f = 0; f < (int)fs.faces.size(); ++f)
      if (fs.size(f) >= 4) triangulate_face(fs.faces[f][0]);
  }

  void triangulate_face(Dart d0) {
    std::vector<Dart> fb = orbit(d0);
    int k = (int)fb.size();
    if (k <= 3) return;
    int bi = -1, bj = -1;         // first valid chord, copy or not
    int ni = -1, nj = -1;         // first valid non-copy chord
    for (int i = 0; i < k && ni < 0; ++i)
      for (int j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        VertexId u = g.tail(fb[i]), v = g.tail(fb[j]);
        if (u == v) continue;
        if (bi < 0) bi = i, bj = j;
        if (copies_of(u, v) == 0) {
          ni = i, nj = j;
          break;
        }
      }
    if (ni >= 0) bi = ni, bj = nj;
    require(bi >= 0, Err::Internal, "no valid triangulation chord");
    VertexId u = g.tail(fb[bi]), v = g.tail(fb[bj]);
    EdgeId ne = g.add_edge_in_face(fb[bi], fb[bj], proto_for(u, v));
    ++stats.chords;
    triangulate_face(2 * g.edges[ne].arc0);
    triangulate_face(2 * g.edges[ne].arc0 + 1);
  }
};

}  // namespace

Normalized normalize(const PlaneGraph& drawing) {
  Normalizer nz(drawing);
  if (nz.g.n_real >= 3 && nz.g.live_edge_count() >= 3) {
    nz.reroute_all();
    nz.wrap_outer();
    nz.add_kites();
    nz.triangulate_all();
  }
  nz.g.check_consistency();
  return {std::move(nz.g), nz.stats};
}

NormalFormReport check_normal_form(const PlaneGraph& g) {
  NormalFormReport rep;
  auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
  FaceSet fs = compute_faces(g);
  for (int f = 0; f < (int)fs.faces.size(); ++f) {
    int dummies = 0;
    for (Dart d : fs.faces[f])
      if (g.is_dummy(g.tail(d))) ++dummies;
    if (f == fs.outer) {
      if (dummies > 0) bad("crossing in outer face");
      if (fs.size(f) >= 4) bad("outer face of size " + std::to_string(fs.size(f)));
      continue;
    }
    if (dummies > 0) {
      if (fs.size(f) != 3 || dummies != 1)
        bad("crossing face is not a kite side (size " +
            std::to_string(fs.size(f)) + ")");
    } else if (fs.size(f) == 2) {
      bad("empty lens (interior 2-gon)");
    } else if (fs.size(f) != 3) {
      bad("face of size " + std::to_string(fs.size(f)));
    }
  }
  std::unordered_map<uint64_t, int> copies;
  for (const auto& e : g.edges) {
    if (e.arc0 < 0) continue;
    ++copies[pair_key(e.u, e.v)];
    if (e.copy_index >= 1 && e.crossed()) bad("crossed copy");
  }
  for (VertexId w = g.n_real; w < g.n; ++w)
    if (g.vertex_dart[w] >= 0 && g.degree(w) != 4)
      bad("dummy of degree " + std::to_string(g.degree(w)));
  int m = g.live_edge_count();
  if (g.n_real >= 3 && m > 4 * g.n_real - 7)
    bad("edge count " + std::to_string(m) + " exceeds 4n-7");
  return rep;
}

}  // namespace tenpage
