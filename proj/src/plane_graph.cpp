#include "tenpage/plane_graph.hpp"

#include <algorithm>
#include <cassert>

namespace tenpage {

int PlaneGraph::live_edge_count() const {
  int c = 0;
  for (const auto& e : edges)
    if (e.arc0 >= 0) ++c;
  return c;
}

Dart PlaneGraph::edge_dart(EdgeId e, VertexId x) const {
  const EdgeRec& r = edges[e];
  if (x == r.u) return 2 * r.arc0;
  assert(x == r.v);
  return r.crossed() ? 2 * r.arc1 + 1 : 2 * r.arc0 + 1;
}

int PlaneGraph::degree(VertexId v) const {
  Dart d0 = vertex_dart[v];
  if (d0 < 0) return 0;
  int c = 0;
  Dart d = d0;
  do {
    ++c;
    d = cw_next[d];
  } while (d != d0);
  return c;
}

VertexId PlaneGraph::add_vertex() {
  vertex_dart.push_back(-1);
  return n++;
}

int PlaneGraph::new_arc(VertexId x, VertexId y) {
  int a = arcs();
  arc_edge.push_back(-2);  // caller sets the edge id
  dart_tail.push_back(x);
  dart_tail.push_back(y);
  cw_next.push_back(-1);
  cw_next.push_back(-1);
  cw_prev.push_back(-1);
  cw_prev.push_back(-1);
  return a;
}

void PlaneGraph::link_after(Dart at, Dart d) {
  Dart nx = cw_next[at];
  cw_next[at] = d;
  cw_prev[d] = at;
  cw_next[d] = nx;
  cw_prev[nx] = d;
}

void PlaneGraph::link_isolated(Dart d) {
  cw_next[d] = d;
  cw_prev[d] = d;
  vertex_dart[dart_tail[d]] = d;
}

void PlaneGraph::link_before_corner(Dart corner, Dart d) {
  link_after(cw_prev[corner], d);
}

void PlaneGraph::unlink(Dart d) {
  VertexId v = dart_tail[d];
  if (cw_next[d] == d) {
    vertex_dart[v] = -1;
  } else {
    cw_next[cw_prev[d]] = cw_next[d];
    cw_prev[cw_next[d]] = cw_prev[d];
    if (vertex_dart[v] == d) vertex_dart[v] = cw_next[d];
  }
  cw_next[d] = cw_prev[d] = -1;
}

void PlaneGraph::replace_dart(Dart old_d, Dart new_d) {
  VertexId v = dart_tail[old_d];
  assert(v == dart_tail[new_d]);
  if (cw_next[old_d] == old_d) {
    cw_next[new_d] = cw_prev[new_d] = new_d;
  } else {
    cw_next[new_d] = cw_next[old_d];
    cw_prev[new_d] = cw_prev[old_d];
    cw_next[cw_prev[old_d]] = new_d;
    cw_prev[cw_next[old_d]] = new_d;
  }
  if (vertex_dart[v] == old_d) vertex_dart[v] = new_d;
  cw_next[old_d] = cw_prev[old_d] = -1;
}

EdgeId PlaneGraph::add_edge_in_face(Dart corner_u, Dart corner_v,
                                    EdgeRec proto) {
  VertexId u = dart_tail[corner_u], v = dart_tail[corner_v];
  assert(u != v);
  proto.u = u;
  proto.v = v;
  proto.partner = -1;
  proto.dummy = -1;
  int a = new_arc(u, v);
  proto.arc0 = a;
  proto.arc1 = -1;
  EdgeId e = (EdgeId)edges.size();
  edges.push_back(proto);
  arc_edge[a] = e;
  link_before_corner(corner_u, 2 * a);
  link_before_corner(corner_v, 2 * a + 1);
  return e;
}

EdgeId PlaneGraph::add_edge_to_isolated(Dart corner_u, VertexId w,
                                        EdgeRec proto) {
  VertexId u = dart_tail[corner_u];
  assert(vertex_dart[w] < 0 && u != w);
  proto.u = u;
  proto.v = w;
  proto.partner = -1;
  proto.dummy = -1;
  int a = new_arc(u, w);
  proto.arc0 = a;
  proto.arc1 = -1;
  EdgeId e = (EdgeId)edges.size();
  edges.push_back(proto);
  arc_edge[a] = e;
  link_before_corner(corner_u, 2 * a);
  link_isolated(2 * a + 1);
  return e;
}

EdgeId PlaneGraph::add_crossed_pair(Dart corner_a, VertexId a, Dart corner_c,
                                    VertexId c, EdgeId over) {
  EdgeRec& o = edges[over];
  assert(!o.crossed());
  VertexId b = o.u, d = o.v;
  VertexId w = add_vertex();

  // Split `over` at w, keeping its rotation slots at b and d.
  int ab = new_arc(b, w);
  int wd = new_arc(w, d);
  int old_arc = o.arc0;
  replace_dart(2 * old_arc, 2 * ab);          // at b
  replace_dart(2 * old_arc + 1, 2 * wd + 1);  // at d
  arc_edge[old_arc] = -1;
  o.arc0 = ab;
  o.arc1 = wd;
  o.dummy = w;
  arc_edge[ab] = over;
  arc_edge[wd] = over;

  // New edge (a, c) through w.
  int aw = new_arc(a, w);
  int wc = new_arc(w, c);
  EdgeId e = (EdgeId)edges.size();
  EdgeRec r;
  r.u = a;
  r.v = c;
  r.origin = EdgeOrigin::augmented;
  r.partner = over;
  r.dummy = w;
  r.arc0 = aw;
  r.arc1 = wc;
  edges.push_back(r);
  o.partner = e;
  arc_edge[aw] = e;
  arc_edge[wc] = e;
  assert(dart_tail[corner_a] == a && dart_tail[corner_c] == c);
  link_before_corner(corner_a, 2 * aw);
  link_before_corner(corner_c, 2 * wc + 1);

  // Rotation at the dummy. corner_a names a corner of a face bounded by
  // `over`; if that face lies to the left of the dart b->d, then clockwise
  // around w the neighbours read b, a, d, c.
  Dart bw = 2 * ab, wb = 2 * ab + 1, wd0 = 2 * wd;
  Dart wa = 2 * aw + 1, wc0 = 2 * wc;
  // Guess the rotation [b, a, d, c]; the face orbit test below flips a and c
  // if corner_a actually sat on the other side of `over`.
  Dart cur = 2 * aw;  // dart a->w
  cw_next[wb] = wa;
  cw_prev[wa] = wb;
  cw_next[wa] = wd0;
  cw_prev[wd0] = wa;
  cw_next[wd0] = wc0;
  cw_prev[wc0] = wd0;
  cw_next[wc0] = wb;
  cw_prev[wb] = wc0;
  vertex_dart[w] = wb;
  // The guess is correct iff the face left of a->w closes back to a without
  // passing through c; with the wrong chirality the two new faces at a and c
  // merge with the wrong sides. Validate: face orbit from a->w must return
  // to corner_a's tail after visiting w exactly once.
  {
    // Walk the face to the left of a->w; it must be a, w, b-side face that
    // eventually returns to a. If instead it hits c before returning, swap.
    Dart t = cur;
    int guard = 0;
    bool saw_c = false;
    do {
      t = face_next(t);
      if (dart_tail[t] == c) saw_c = true;
      if (++guard > darts() + 2) break;
    } while (t != cur);
    bool bad = saw_c || guard > darts() + 1;
    if (bad) {
      // swap a and c in w's rotation: [b, c, d, a]
      cw_next[wb] = wc0;
      cw_prev[wc0] = wb;
      cw_next[wc0] = wd0;
      cw_prev[wd0] = wc0;
      cw_next[wd0] = wa;
      cw_prev[wa] = wd0;
      cw_next[wa] = wb;
      cw_prev[wb] = wa;
    }
  }
  return e;
}

void PlaneGraph::remove_edge(EdgeId e) {
  EdgeRec& r = edges[e];
  assert(r.arc0 >= 0);
  if (!r.crossed()) {
    unlink(2 * r.arc0);
    unlink(2 * r.arc0 + 1);
    arc_edge[r.arc0] = -1;
    r.arc0 = -1;
    return;
  }
  EdgeId pe = r.partner;
  EdgeRec& p = edges[pe];
  VertexId w = r.dummy;
  // Drop e's arcs.
  unlink(2 * r.arc0);
  unlink(2 * r.arc0 + 1);
  unlink(2 * r.arc1);
  unlink(2 * r.arc1 + 1);
  arc_edge[r.arc0] = -1;
  arc_edge[r.arc1] = -1;
  // Collapse the partner to one arc occupying its old rotation slots.
  int a = new_arc(p.u, p.v);
  replace_dart(2 * p.arc0, 2 * a);          // at p.u
  replace_dart(2 * p.arc1 + 1, 2 * a + 1);  // at p.v
  unlink(2 * p.arc0 + 1);                   // dummy-side darts
  unlink(2 * p.arc1);
  arc_edge[p.arc0] = -1;
  arc_edge[p.arc1] = -1;
  arc_edge[a] = pe;
  p.arc0 = a;
  p.arc1 = -1;
  p.partner = -1;
  p.dummy = -1;
  r.arc0 = r.arc1 = -1;
  r.partner = -1;
  r.dummy = -1;
  vertex_dart[w] = -1;
}

void PlaneGraph::check_consistency() const {
  for (Dart d = 0; d < darts(); ++d) {
    if (!dart_alive(d)) continue;
    if (cw_next[d] < 0) continue;  // unlinked live dart would be a bug
    assert(cw_prev[cw_next[d]] == d);
    assert(dart_tail[cw_next[d]] == dart_tail[d]);
  }
  for (VertexId v = 0; v < n; ++v)
    if (vertex_dart[v] >= 0) assert(dart_tail[vertex_dart[v]] == v);
}

FaceSet compute_faces(const PlaneGraph& g) {
  FaceSet fs;
  fs.face_of.assign(g.darts(), -1);
  for (Dart d = 0; d < g.darts(); ++d) {
    if (!g.dart_alive(d) || fs.face_of[d] >= 0) continue;
    int f = (int)fs.faces.size();
    fs.faces.emplace_back();
    Dart t = d;
    do {
      fs.face_of[t] = f;
      fs.faces[f].push_back(t);
      t = g.face_next(t);
    } while (t != d);
  }
  if (g.outer >= 0) fs.outer = fs.face_of[g.outer];
  return fs;
}

// --- ingestion ----------------------------------------------------------

PlaneGraph build_drawing(const RawDrawing& spec) {
  require(spec.n >= 1, Err::BadParameter, "empty vertex set");
  PlaneGraph g;
  g.n_real = spec.n;
  g.n = spec.n;
  g.vertex_dart.assign(spec.n, -1);

  int m = (int)spec.edges.size();
  std::vector<int> cross_of(m, -1);
  for (int i = 0; i < (int)spec.crossings.size(); ++i) {
    const RawCrossing& c = spec.crossings[i];
    require(c.e1 >= 0 && c.e1 < m && c.e2 >= 0 && c.e2 < m && c.e1 != c.e2,
            Err::ParseError, "crossing references bad edge id");
    require(cross_of[c.e1] < 0 && cross_of[c.e2] < 0, Err::NotOnePlanar,
            "edge crossed more than once");
    cross_of[c.e1] = i;
    cross_of[c.e2] = i;
  }

  g.edges.resize(m);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = spec.edges[e];
    require(u >= 0 && u < spec.n && v >= 0 && v < spec.n, Err::ParseError,
            "edge endpoint out of range");
    require(u != v, Err::SelfLoop, "self loop");
    g.edges[e].u = u;
    g.edges[e].v = v;
  }

  // Dummies and arcs.
  for (const RawCrossing& c : spec.crossings) {
    const EdgeRec &r1 = g.edges[c.e1], &r2 = g.edges[c.e2];
    require(r1.u != r2.u && r1.u != r2.v && r1.v != r2.u && r1.v != r2.v,
            Err::NotOnePlanar, "crossing pair shares an endpoint");
    VertexId w = g.add_vertex();
    for (EdgeId e : {c.e1, c.e2}) {
      EdgeRec& r = g.edges[e];
      r.dummy = w;
      r.arc0 = g.new_arc(r.u, w);
      r.arc1 = g.new_arc(w, r.v);
      g.arc_edge[r.arc0] = e;
      g.arc_edge[r.arc1] = e;
    }
    g.edges[c.e1].partner = c.e2;
    g.edges[c.e2].partner = c.e1;
  }
  for (int e = 0; e < m; ++e) {
    EdgeRec& r = g.edges[e];
    if (r.arc0 < 0) {
      r.arc0 = g.new_arc(r.u, r.v);
      g.arc_edge[r.arc0] = e;
    }
  }

  // Rotations at real vertices.
  require((int)spec.rotations.size() == spec.n, Err::ParseError,
          "rotation list size mismatch");
  std::vector<int> seen(m, 0);
  for (VertexId v = 0; v < spec.n; ++v) {
    Dart prev = -1, first = -1;
    for (EdgeId e : spec.rotations[v]) {
      require(e >= 0 && e < m, Err::ParseError, "rotation has bad edge id");
      const EdgeRec& r = g.edges[e];
      require(r.u == v || r.v == v, Err::NotAnEmbedding,
              "rotation lists non-incident edge");
      Dart d = g.edge_dart(e, v);
      if (prev < 0) {
        g.cw_next[d] = d;
        g.cw_prev[d] = d;
        g.vertex_dart[v] = d;
        first = d;
      } else {
        g.link_after(prev, d);
      }
      prev = d;
      ++seen[e];
    }
    (void)first;
  }
  for (int e = 0; e < m; ++e)
    require(seen[e] == 2, Err::NotAnEmbedding,
            "edge must appear in exactly two rotations");

  // Dummy rotations.
  for (const RawCrossing& c : spec.crossings) {
    const EdgeRec &r1 = g.edges[c.e1], &r2 = g.edges[c.e2];
    Dart d1u = 2 * r1.arc0 + 1, d1v = 2 * r1.arc1;  // darts leaving the dummy
    Dart d2u = 2 * r2.arc0 + 1, d2v = 2 * r2.arc1;
    Dart order[4] = {d1u, c.flip ? d2v : d2u, d1v, c.flip ? d2u : d2v};
    for (int i = 0; i < 4; ++i) {
      g.cw_next[order[i]] = order[(i + 1) % 4];
      g.cw_prev[order[(i + 1) % 4]] = order[i];
    }
    g.vertex_dart[r1.dummy] = d1u;
  }

  require(spec.outer_edge >= 0 && spec.outer_edge < m, Err::ParseError,
          "outer dart references bad edge");
  {
    const EdgeRec& r = g.edges[spec.outer_edge];
    g.outer = g.edge_dart(spec.outer_edge, spec.outer_end == 0 ? r.u : r.v);
  }

  // Connectivity over darts.
  {
    std::vector<char> vis(g.n, 0);
    std::vector<VertexId> stack;
    VertexId s = g.edges.empty() ? 0 : g.edges[0].u;
    stack.push_back(s);
    vis[s] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++cnt;
      Dart d0 = g.vertex_dart[v];
      if (d0 < 0) continue;
      Dart d = d0;
      do {
        VertexId h = g.head(d);
        if (!vis[h]) {
          vis[h] = 1;
          stack.push_back(h);
        }
        d = g.cw_next[d];
      } while (d != d0);
    }
    // Isolated vertices only make sense for n == 1.
    require(cnt == g.n || (g.n == 1), Err::Disconnected,
            "drawing must be connected");
  }

  // Euler check on the planarization.
  if (!g.edges.empty()) {
    FaceSet fs = compute_faces(g);
    long V = g.n, A = 0;
    for (int a = 0; a < g.arcs(); ++a)
      if (g.arc_alive(a)) ++A;
    long F = (long)fs.faces.size();
    require(V - A + F == 2, Err::NotAnEmbedding,
            "rotation system is not a sphere embedding");
  }
  return g;
}

RawDrawing to_raw(const PlaneGraph& g) {
  RawDrawing out;
  out.n = g.n_real;
  // Live edges are renumbered densely.
  std::vector<int> id(g.edges.size(), -1);
  for (int e = 0; e < (int)g.edges.size(); ++e) {
    if (g.edges[e].arc0 < 0) continue;
    id[e] = (int)out.edges.size();
    out.edges.push_back({g.edges[e].u, g.edges[e].v});
  }
  for (int e = 0; e < (int)g.edges.size(); ++e) {
    const EdgeRec& r = g.edges[e];
    if (r.arc0 < 0 || !r.crossed() || r.partner < e) continue;
    RawCrossing c;
    c.e1 = id[e];
    c.e2 = id[r.partner];
    // flip reconstructs the dummy rotation: look at cw_next of e's dart
    // leaving the dummy towards u.
    Dart d1u = 2 * r.arc0 + 1;
    const EdgeRec& p = g.edges[r.partner];
    Dart d2u = 2 * p.arc0 + 1;
    c.flip = (g.cw_next[d1u] != d2u);
    out.crossings.push_back(c);
  }
  out.rotations.resize(g.n_real);
  for (VertexId v = 0; v < g.n_real; ++v) {
    Dart d0 = g.vertex_dart[v];
    if (d0 < 0) continue;
    Dart d = d0;
    do {
      out.rotations[v].push_back(id[g.edge_of(d)]);
      d = g.cw_next[d];
    } while (d != d0);
  }
  const EdgeRec& orec = g.edges[g.edge_of(g.outer)];
  out.outer_edge = id[g.edge_of(g.outer)];
  out.outer_end = (g.tail(g.outer) == orec.u) ? 0 : 1;
  return out;
}

PlaneGraph planar_skeleton(const PlaneGraph& g) {
  PlaneGraph s = g;
  for (int e = 0; e < (int)s.edges.size(); ++e) {
    EdgeRec& r = s.edges[e];
    if (r.arc0 < 0 || !r.crossed()) continue;
    s.unlink(2 * r.arc0);
    s.unlink(2 * r.arc0 + 1);
    s.unlink(2 * r.arc1);
    s.unlink(2 * r.arc1 + 1);
    s.arc_edge[r.arc0] = -1;
    s.arc_edge[r.arc1] = -1;
    r.arc0 = r.arc1 = -1;
    s.vertex_dart[r.dummy] = -1;
  }
  require(s.outer >= 0 && s.dart_alive(s.outer), Err::NotNormalized,
          "outer dart is on a crossed edge");
  return s;
}

}  // namespace tenpage
