#include "tenpage/twolevel.hpp"

#include <algorithm>
#include <climits>
#include <unordered_set>

namespace tenpage {

// ---------------------------------------------------------------------------
// shared context

PipelineContext::PipelineContext(const PlaneGraph& graph)
    : g(&graph), skel(planar_skeleton(graph)) {
  sfs = compute_faces(skel);
  levels = compute_levels(skel, sfs);
  quad_of_dummy.assign(graph.n, -1);
  pair_of_dummy.assign(graph.n, {-1, -1});
  dummies_in_face.assign(sfs.faces.size(), {});
  for (EdgeId e = 0; e < (EdgeId)graph.edges.size(); ++e) {
    const EdgeRec& r = graph.edges[e];
    if (r.arc0 < 0 || !r.crossed() || e > r.partner) continue;
    VertexId w = r.dummy;
    pair_of_dummy[w] = {e, r.partner};
    // In normal form every planarization face at a dummy is a kite triangle
    // (w, x, y); the side x->y is uncrossed, and the skeleton face on its
    // left is the quadrangle of the whole crossing.
    Dart d0 = graph.vertex_dart[w];
    require(d0 >= 0, Err::NotNormalized, "dangling crossing point");
    Dart mid = graph.face_next(d0);
    require(!graph.edges[graph.edge_of(mid)].crossed(), Err::NotNormalized,
            "crossing without a kite");
    int f = sfs.face_of[mid];
    quad_of_dummy[w] = f;
    dummies_in_face[f].push_back(w);
  }
}

// ---------------------------------------------------------------------------
// small helpers

void TwoLevelAnalysis::note(const std::string& msg) { diagnostics.push_back(msg); }

int TwoLevelAnalysis::roles_used() const {
  int c = 0;
  for (bool b : role_used) c += b ? 1 : 0;
  return c;
}

int TwoLevelAnalysis::bgr_roles_used() const {
  return (role_used[0] ? 1 : 0) + (role_used[1] ? 1 : 0) +
         (role_used[2] ? 1 : 0) + (role_used[3] ? 1 : 0);
}

int TwoLevelAnalysis::purple_roles_used() const {
  return (role_used[4] ? 1 : 0) + (role_used[5] ? 1 : 0);
}

int TwoLevelAnalysis::outer_index(VertexId v) const { return outer_pos_.get(v); }
int TwoLevelAnalysis::position(VertexId v) const { return pos_.get(v); }
int TwoLevelAnalysis::block_of(VertexId v) const { return vertex_block_.get(v); }

int TwoLevelAnalysis::pi_phase(int s) const {
  require(s >= 0 && s < (int)supers.size(), Err::BadParameter, "no such super-block");
  return (supers[s].depth + tree_flip[supers[s].tree]) & 1;
}

std::vector<Dart> TwoLevelAnalysis::face_darts_view(int f) const {
  const std::vector<Dart>& o = ctx->sfs.faces[f];
  std::vector<Dart> out;
  out.reserve(o.size());
  if (!mirror) {
    out = o;
  } else {
    // The mirrored orbit of a face is the reversed twin orbit.
    for (auto it = o.rbegin(); it != o.rend(); ++it)
      out.push_back(PlaneGraph::twin(*it));
  }
  return out;
}

int TwoLevelAnalysis::least_outer_on_face(int f) const {
  int best = INT_MAX;
  for (Dart d : ctx->sfs.faces[f]) {
    int i = outer_pos_.get(ctx->skel.tail(d));
    if (i >= 0 && i < best) best = i;
  }
  require(best != INT_MAX, Err::Internal, "region face misses the outer cycle");
  return best;
}

void TwoLevelAnalysis::mark_role(PageRole role, int s) {
  switch (role) {
    case PageRole::eta:
      role_used[0] = true;
      break;
    case PageRole::rho:
      role_used[3] = true;
      break;
    case PageRole::pi:
    case PageRole::pibar: {
      int phase = role == PageRole::pibar ? 1 : 0;
      if (s >= 0) phase = (supers[s].depth + phase) & 1;
      role_used[1 + phase] = true;
      break;
    }
    case PageRole::chi:
      role_used[4] = true;
      break;
    default:
      break;
  }
}

// ---------------------------------------------------------------------------
// build

void TwoLevelAnalysis::build(const PipelineContext& c, const std::vector<Dart>& cyc,
                             bool mir, int lvl, bool displace, int phase_seed) {
  ctx = &c;
  mirror = mir;
  level = lvl;
  phase_seed_ = phase_seed < 0 ? -1 : phase_seed & 1;
  cycle = cyc;
  const PlaneGraph& sk = ctx->skel;

  size_t nv = (size_t)sk.n;
  size_t nf = ctx->sfs.faces.size();
  size_t ne = sk.edges.size();
  size_t cap = std::max(std::max(nv, nf), ne);
  if (outer_pos_.size() < nv) {
    outer_pos_.resize(nv);
    inner_mark_.resize(nv);
    vertex_block_.resize(nv);
    vertex_tree_.resize(nv);
    pos_.resize(nv);
    stack_index_.assign(nv, -1);
  }
  if (region_.size() < nf) {
    region_.resize(nf);
    face_alpha_.resize(nf);
    face_pos_.resize(nf);
  }
  if (edge_block_.size() < ne) {
    edge_block_.resize(ne);
    edge_flags_.resize(ne);
    edge_assign_.resize(ne);
    cycle_edge_.resize(ne);
  }
  if (scratch_.size() < cap) {
    scratch_.resize(cap);
    scratch2_.resize(cap);
  }
  outer_pos_.clear();
  inner_mark_.clear();
  vertex_block_.clear();
  vertex_tree_.clear();
  pos_.clear();
  region_.clear();
  face_alpha_.clear();
  face_pos_.clear();
  edge_block_.clear();
  edge_flags_.clear();
  edge_assign_.clear();
  cycle_edge_.clear();
  owned_.clear();
  clusters_at_.clear();

  outer.clear();
  region_faces.clear();
  inner.clear();
  crossings.clear();
  inner_edge_count = 0;
  blocks.clear();
  trees.clear();
  clusters.clear();
  supers.clear();
  super_order.clear();
  tree_flip.clear();
  layout.clear();
  chunks.clear();
  assigns.clear();
  children.clear();
  diagnostics.clear();
  for (bool& b : role_used) b = false;

  require(cycle.size() >= 2, Err::BadParameter, "outer cycle too short");
  outer.reserve(cycle.size());
  for (Dart d : cycle) outer.push_back(sk.tail(d));
  for (int i = 0; i < (int)outer.size(); ++i) {
    require(sk.head(cycle[i]) == outer[(i + 1) % outer.size()], Err::BadParameter,
            "outer darts do not chain into a cycle");
    require(!outer_pos_.has(outer[i]), Err::Internal, "outer cycle repeats a vertex");
    outer_pos_.set(outer[i], i);
  }
  for (Dart d : cycle) cycle_edge_.set(sk.edge_of(d), 1);

  extract_region();
  sweep_face_keys();
  find_trees_and_blocks();
  finish_blocks();
  detect_clusters();
  expand_super_blocks();
  make_layout();
  color_and_assign(displace);

  for (int b = 0; b < (int)blocks.size(); ++b) {
    const Block& B = blocks[b];
    if (B.elementary || B.is_bridge) continue;
    ChildInstance ch;
    ch.cycle = B.cycle_darts;
    ch.block = b;
    ch.displace_last_chords = B.displace_child;
    children.push_back(std::move(ch));
  }
}

// ---------------------------------------------------------------------------
// region extraction

void TwoLevelAnalysis::extract_region() {
  const PlaneGraph& sk = ctx->skel;
  const FaceSet& fs = ctx->sfs;

  std::vector<int> work;
  auto push_face = [&](int f) {
    if (region_.has(f)) return;
    region_.set(f, 1);
    region_faces.push_back(f);
    work.push_back(f);
  };
  for (Dart d : cycle) push_face(fs.face_of[mirror ? d : PlaneGraph::twin(d)]);
  while (!work.empty()) {
    int f = work.back();
    work.pop_back();
    for (Dart d : fs.faces[f]) {
      EdgeId e = sk.edge_of(d);
      if (cycle_edge_.has(e)) continue;  // never step outside the cycle
      const EdgeRec& r = sk.edges[e];
      if (ctx->levels.level[r.u] != level && ctx->levels.level[r.v] != level)
        continue;  // inner-subgraph edge: its far side belongs to a child
      push_face(fs.face_of[PlaneGraph::twin(d)]);
    }
  }

  for (int f : region_faces) {
    for (Dart d : fs.faces[f]) {
      VertexId v = sk.tail(d);
      if (!outer_pos_.has(v)) {
        require(ctx->levels.level[v] == level + 1, Err::Internal,
                "region corner off both levels");
        if (!inner_mark_.has(v)) {
          inner_mark_.set(v, 1);
          inner.push_back(v);
        }
      }
      // Every uncrossed edge on a region face is paged by this instance,
      // except the outer cycle itself below the root.
      EdgeId ed = sk.edge_of(d);
      if (!edge_assign_.has(ed) && !(cycle_edge_.has(ed) && level > 0)) {
        EdgeAssign a;
        a.e = ed;
        edge_assign_.set(ed, (int)assigns.size());
        owned_.push_back(ed);
        assigns.push_back(a);
      }
    }
    for (VertexId w : ctx->dummies_in_face[f]) crossings.push_back(w);
  }
}

// ---------------------------------------------------------------------------
// face keys: (least outer corner, ccw position in its sector)

void TwoLevelAnalysis::sweep_face_keys() {
  const PlaneGraph& sk = ctx->skel;
  EmbView view{&sk, mirror};
  int t1 = (int)cycle.size();
  std::vector<int> seen;
  for (int i = 0; i < t1; ++i) {
    seen.clear();
    Dart stop = PlaneGraph::twin(cycle[(i + t1 - 1) % t1]);
    Dart d = cycle[i];
    int guard = 0, deg = sk.degree(outer[i]);
    do {
      d = view.nxt(d);
      int f = view.face_left(ctx->sfs, d);
      if (region_.has(f) && !face_alpha_.has(f)) {
        face_alpha_.set(f, i);
        seen.push_back(f);
      }
      require(++guard <= deg, Err::Internal, "sector sweep ran away");
    } while (d != stop);
    // The sweep runs clockwise in the view; positions count counterclockwise.
    for (int k = 0; k < (int)seen.size(); ++k)
      face_pos_.set(seen[k], (int)seen.size() - 1 - k);
  }
}

// ---------------------------------------------------------------------------
// block trees off the boundary walk

void TwoLevelAnalysis::find_trees_and_blocks() {
  const PlaneGraph& sk = ctx->skel;
  EmbView view{&sk, mirror};

  struct Key {
    int a, p, f;
  };
  std::vector<Key> order;
  order.reserve(region_faces.size());
  for (int f : region_faces) {
    require(face_alpha_.has(f), Err::Internal, "region face without a sector key");
    order.push_back({face_alpha_.get(f), face_pos_.get(f), f});
  }
  std::sort(order.begin(), order.end(), [](const Key& x, const Key& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.p < y.p;
  });

  for (const Key& k : order) {
    std::vector<Dart> orbit = face_darts_view(k.f);
    int s = -1;
    for (int j = 0; j < (int)orbit.size(); ++j)
      if (outer_pos_.get(sk.tail(orbit[j])) == k.a) {
        s = j;
        break;
      }
    require(s >= 0, Err::Internal, "face key corner missing");
    int last_outer = k.a;
    for (int j = 0; j < (int)orbit.size(); ++j) {
      Dart d = orbit[(s + j) % orbit.size()];
      VertexId v = sk.tail(d);
      int op = outer_pos_.get(v);
      if (op >= 0) {
        last_outer = op;
        continue;
      }
      if (vertex_tree_.has(v)) continue;

      int tid = (int)trees.size();
      trees.push_back({});
      BlockTree& tr = trees.back();
      tr.f_T = k.f;
      tr.lambda = v;
      tr.alpha = k.a;
      tr.omega = last_outer;

      // Walk start: the first inner-headed dart clockwise in the view from
      // this corner's exit dart, the exit dart itself included.
      Dart start = -1, r = d;
      int deg = sk.degree(v);
      for (int g2 = 0; g2 < deg; ++g2) {
        if (inner_mark_.has(sk.head(r))) {
          start = r;
          break;
        }
        r = view.nxt(r);
      }
      if (start < 0) {
        int bid = (int)blocks.size();
        blocks.push_back({});
        Block& b = blocks.back();
        b.cycle = {v};
        b.tree = tid;
        b.alpha = tr.alpha;
        b.omega = tr.omega;
        b.key_pos = face_pos_.get(k.f);
        b.elementary = true;
        trees[tid].root = bid;
        vertex_tree_.set(v, tid);
        vertex_block_.set(v, bid);
      } else {
        parse_tree_walk(tid, start);
      }
    }
  }
}

void TwoLevelAnalysis::parse_tree_walk(int tid, Dart start) {
  const PlaneGraph& sk = ctx->skel;
  EmbView view{&sk, mirror};
  BlockTree& tr = trees[tid];
  std::vector<Dart>& W = tr.walk;

  Dart d = start;
  do {
    W.push_back(d);
    Dart r = view.nxt(PlaneGraph::twin(d));
    int guard = 0, deg = sk.degree(sk.head(d));
    while (!inner_mark_.has(sk.head(r))) {
      r = view.nxt(r);
      require(++guard <= deg, Err::Internal, "boundary walk stuck");
    }
    d = r;
  } while (d != start);

  struct Ent {
    VertexId v;
    Dart in;
    int wi;
  };
  std::vector<Ent> st;
  VertexId root_v = sk.tail(start);
  st.push_back({root_v, -1, -1});
  stack_index_[root_v] = 0;
  vertex_tree_.set(root_v, tid);
  int last_block = -1;

  for (int wi = 0; wi < (int)W.size(); ++wi) {
    Dart wd = W[wi];
    VertexId h = sk.head(wd);
    int p = stack_index_[h];
    if (p < 0) {
      stack_index_[h] = (int)st.size();
      st.push_back({h, wd, wi});
      vertex_tree_.set(h, tid);
      continue;
    }
    require(p + 1 < (int)st.size(), Err::Internal, "walk closes an empty block");
    int bid = (int)blocks.size();
    blocks.push_back({});
    Block& b = blocks.back();
    b.tree = tid;
    b.cycle.push_back(st[p].v);
    b.cycle_darts.push_back(PlaneGraph::twin(wd));
    for (int j = (int)st.size() - 1; j > p; --j) {
      b.cycle.push_back(st[j].v);
      b.cycle_darts.push_back(PlaneGraph::twin(st[j].in));
    }
    b.w_enter = st[p + 1].wi;
    b.w_close = wi;
    b.is_bridge = b.cycle.size() == 2 &&
                  sk.edge_of(b.cycle_darts[0]) == sk.edge_of(b.cycle_darts[1]);
    for (int j = (int)st.size() - 1; j > p; --j) {
      VertexId v = st[j].v;
      stack_index_[v] = -1;
      require(!vertex_block_.has(v), Err::Internal, "vertex assigned to two blocks");
      vertex_block_.set(v, bid);
    }
    st.resize(p + 1);
    last_block = bid;
  }
  require((int)st.size() == 1, Err::Internal, "walk left an open block");
  stack_index_[root_v] = -1;
  require(last_block >= 0, Err::Internal, "walk closed no block");
  tr.root = last_block;
  vertex_block_.set(root_v, last_block);
}

void TwoLevelAnalysis::finish_blocks() {
  const PlaneGraph& sk = ctx->skel;
  EmbView view{&sk, mirror};

  for (int b = 0; b < (int)blocks.size(); ++b) {
    Block& B = blocks[b];
    if (B.elementary) {
      B.parent = -1;
      continue;
    }
    int pb = vertex_block_.get(B.leader());
    B.parent = pb == b ? -1 : pb;

    // Landmarks come from the region faces beside the last and first cycle
    // edge; the region lies on the view's left of the reversed cycle darts.
    int fa = view.face_left(ctx->sfs, PlaneGraph::twin(B.cycle_darts.back()));
    int fo = view.face_left(ctx->sfs, PlaneGraph::twin(B.cycle_darts.front()));
    require(region_.has(fa) && region_.has(fo), Err::Internal,
            "block landmark face outside the region");
    B.alpha = least_outer_on_face(fa);
    B.key_pos = face_pos_.get(fa);
    B.omega = least_outer_on_face(fo);
    B.covered = B.alpha == B.omega;

    for (Dart d : B.cycle_darts) edge_block_.set(sk.edge_of(d), b);
    inner_edge_count += B.is_bridge ? 1 : (int)B.cycle_darts.size();
  }

  // blocks sharing the root cutvertex can close after their siblings, so
  // walk order does not put parents first; follow the parent chain instead
  std::vector<int> depth(blocks.size(), -1);
  auto depth_of = [&](auto&& self, int b) -> int {
    if (depth[b] >= 0) return depth[b];
    int p = blocks[b].parent;
    return depth[b] = p < 0 ? 0 : self(self, p) + 1;
  };
  for (int b = 0; b < (int)blocks.size(); ++b)
    if (!blocks[b].elementary) blocks[b].depth = depth_of(depth_of, b);
}

// ---------------------------------------------------------------------------
// clusters

std::vector<VertexId> TwoLevelAnalysis::nested_sweep(int r) const {
  const Block& R = blocks[r];
  if (R.elementary) return {R.leader()};
  // Reversed boundary-walk tails of the subtree, first occurrences only;
  // this interleaves each block's vertices with its descendants the way the
  // plane drawing nests them.
  VertexId skip = R.parent >= 0 ? R.leader() : -1;
  const std::vector<Dart>& W = trees[R.tree].walk;
  std::vector<VertexId> out;
  scratch2_.clear();
  for (int i = R.w_close; i >= R.w_enter; --i) {
    VertexId v = ctx->skel.tail(W[i]);
    if (v == skip || scratch2_.has(v)) continue;
    scratch2_.set(v, 1);
    out.push_back(v);
  }
  return out;
}

void TwoLevelAnalysis::detect_clusters() {
  const PlaneGraph& sk = ctx->skel;

  auto cluster_id = [&](VertexId leader, int cover) -> int {
    for (int c : clusters_at_[leader])
      if (clusters[c].cover == cover) return c;
    int c = (int)clusters.size();
    Cluster cl;
    cl.leader = leader;
    cl.cover = cover;
    clusters.push_back(std::move(cl));
    clusters_at_[leader].push_back(c);
    return c;
  };

  // Covered roots of whole block trees sit inside an uncrossed multi-edge
  // whose inner endpoint belongs to another tree; that endpoint is the
  // cluster leader. It shows up on the tree's first face.
  for (BlockTree& tr : trees) {
    Block& R = blocks[tr.root];
    if (!R.covered) continue;
    VertexId lead = -1;
    for (Dart d : ctx->sfs.faces[tr.f_T]) {
      VertexId w = sk.tail(d);
      if (!inner_mark_.has(w)) continue;
      if (vertex_tree_.get(w) == R.tree) continue;
      int wb = vertex_block_.get(w);
      if (wb < 0 || blocks[wb].covered) continue;
      lead = w;
      break;
    }
    if (lead < 0) {
      note("covered block tree without an identifiable cluster leader; treated as uncovered");
      R.covered = false;
      continue;
    }
    int cid = cluster_id(lead, R.alpha);
    clusters[cid].subtree_roots.push_back(tr.root);
    R.cluster = cid;
  }

  for (int b = 0; b < (int)blocks.size(); ++b) {
    if (!blocks[b].covered || blocks[b].cluster >= 0) continue;
    std::vector<int> chain{b};
    int p = b;
    while (blocks[p].cluster < 0 && blocks[p].parent >= 0 &&
           blocks[blocks[p].parent].covered) {
      p = blocks[p].parent;
      chain.push_back(p);
    }
    int cid;
    if (blocks[p].cluster >= 0) {
      cid = blocks[p].cluster;
    } else {
      require(blocks[p].parent >= 0, Err::Internal, "covered root escaped the pre-pass");
      VertexId lead = blocks[p].leader();
      cid = cluster_id(lead, blocks[p].alpha);
      clusters[cid].subtree_roots.push_back(p);
    }
    if (blocks[b].alpha != clusters[cid].cover)
      note("nested covered blocks with different covers");
    for (int x : chain) blocks[x].cluster = cid;
  }

  for (Cluster& c : clusters) {
    std::sort(c.subtree_roots.begin(), c.subtree_roots.end(), [&](int x, int y) {
      if (blocks[x].tree != blocks[y].tree) return blocks[x].tree < blocks[y].tree;
      return blocks[x].w_enter > blocks[y].w_enter;  // ccw = reversed walk order
    });
    for (int r : c.subtree_roots) {
      std::vector<VertexId> seq = nested_sweep(r);
      c.order.insert(c.order.end(), seq.begin(), seq.end());
    }
  }
}

// ---------------------------------------------------------------------------
// super-blocks and the layout

void TwoLevelAnalysis::expand_super_blocks() {
  std::vector<int> ids;
  for (int b = 0; b < (int)blocks.size(); ++b)
    if (!blocks[b].covered) ids.push_back(b);
  // parents must expand before children; depth is the safe key because the
  // walk can close a tree's root block after its siblings
  std::sort(ids.begin(), ids.end(), [&](int x, int y) {
    if (blocks[x].depth != blocks[y].depth) return blocks[x].depth < blocks[y].depth;
    if (blocks[x].tree != blocks[y].tree) return blocks[x].tree < blocks[y].tree;
    return blocks[x].w_enter < blocks[y].w_enter;
  });

  for (int b : ids) {
    int s = (int)supers.size();
    blocks[b].super_block = s;
    SuperBlock S;
    S.root = b;
    S.tree = blocks[b].tree;
    S.dominator = blocks[b].alpha;
    S.blocks = {b};
    int pb = blocks[b].parent;
    if (pb < 0) {
      S.parent = -1;
      S.depth = 0;
    } else {
      require(!blocks[pb].covered, Err::Internal, "uncovered block hangs off a covered one");
      int ps = blocks[pb].super_block;
      require(ps >= 0, Err::Internal, "super-block parent not yet expanded");
      S.parent = ps;
      S.depth = supers[ps].depth + 1;
    }
    supers.push_back(std::move(S));
  }

  for (int b = 0; b < (int)blocks.size(); ++b) {
    Block& B = blocks[b];
    if (!B.covered) continue;
    require(B.cluster >= 0, Err::Internal, "covered block without a cluster");
    int att = vertex_block_.get(clusters[B.cluster].leader);
    require(att >= 0 && !blocks[att].covered, Err::Internal,
            "cluster leader not on an uncovered block");
    B.super_block = blocks[att].super_block;
    supers[B.super_block].blocks.push_back(b);
  }

  for (SuperBlock& S : supers) {
    const Block& R = blocks[S.root];
    size_t from = R.parent < 0 ? 0 : 1;  // tree roots own their leader
    for (size_t i = from; i < R.cycle.size(); ++i) {
      VertexId v = R.cycle[i];
      S.order.push_back(v);
      auto it = clusters_at_.find(v);
      if (it == clusters_at_.end()) continue;
      std::vector<int> cs = it->second;
      std::sort(cs.begin(), cs.end(),
                [&](int a, int b2) { return clusters[a].cover > clusters[b2].cover; });
      for (int cId : cs)
        S.order.insert(S.order.end(), clusters[cId].order.begin(),
                       clusters[cId].order.end());
    }
  }

  super_order.resize(supers.size());
  for (int i = 0; i < (int)supers.size(); ++i) super_order[i] = i;
  std::sort(super_order.begin(), super_order.end(), [&](int x, int y) {
    const Block& bx = blocks[supers[x].root];
    const Block& by = blocks[supers[y].root];
    if (bx.alpha != by.alpha) return bx.alpha < by.alpha;
    if (bx.key_pos != by.key_pos) return bx.key_pos < by.key_pos;
    if (bx.tree != by.tree) return bx.tree < by.tree;
    return bx.w_enter < by.w_enter;
  });
  tree_flip.assign(trees.size(), phase_seed_ < 0 ? 0 : phase_seed_);
}

void TwoLevelAnalysis::make_layout() {
  chunks.assign(outer.size(), {});
  for (int s : super_order) {
    std::vector<VertexId>& ch = chunks[supers[s].dominator];
    ch.insert(ch.end(), supers[s].order.begin(), supers[s].order.end());
  }
  layout.reserve(outer.size() + inner.size());
  for (int i = 0; i < (int)outer.size(); ++i) {
    layout.push_back(outer[i]);
    for (VertexId v : chunks[i]) layout.push_back(v);
  }
  require(layout.size() == outer.size() + inner.size(),
          Err::Internal, "layout lost or repeated vertices");
  for (int p = 0; p < (int)layout.size(); ++p) {
    require(!pos_.has(layout[p]), Err::Internal, "layout repeats a vertex");
    pos_.set(layout[p], p);
  }
}

// ---------------------------------------------------------------------------
// coloring and page roles

// A backward binding whose outer endpoint precedes the dominator of the
// inner vertex's super-block. This happens when the binding fan of a
// block-tree wraps around the closing corner of the outer cycle; such an
// edge spans outer vertices up to the dominator and cannot stay on the
// outer-cycle page.
bool TwoLevelAnalysis::far_backward(VertexId outer_v, VertexId inner_v) const {
  if (pos_.get(outer_v) >= pos_.get(inner_v)) return false;
  int b = vertex_block_.get(inner_v);
  if (b < 0) return false;
  int s = blocks[b].super_block;
  if (s < 0) return false;
  return outer_pos_.get(outer_v) < supers[s].dominator;
}

// A far-backward binding sits on the forward page of its super-block, and its
// span covers whole chunks: strings of other super-blocks can lie strictly
// under it while their own forward bindings or first and last block edges
// reach out past its endpoints. Those fans must not share the physical page
// with the binding, which pins the relative pi/pibar phase of the two
// super-blocks. Within one tree the depth alternation decides; across trees
// the phase is free per tree, so 2-color the constraint graph by flipping
// whole trees. Bindings whose constraints stay violated are returned and get
// parked on the purple pages, where an exact twist 2-coloring runs later.
std::vector<EdgeId> TwoLevelAnalysis::separate_far_backward_phases() {
  const PlaneGraph& sk = ctx->skel;

  struct Fb {
    int pv, pw;  // layout positions of the outer and inner endpoint
    int s;       // target super-block
    EdgeId e;
  };
  std::vector<Fb> fbs;
  auto consider = [&](EdgeId e) {
    const EdgeRec& r = sk.edges[e];
    bool uo = outer_pos_.has(r.u), vo = outer_pos_.has(r.v);
    if (uo == vo) return;
    VertexId ov = uo ? r.u : r.v;
    VertexId iv = uo ? r.v : r.u;
    if (!vertex_block_.has(iv) || !far_backward(ov, iv)) return;
    int s = blocks[vertex_block_.get(iv)].super_block;
    if (s >= 0) fbs.push_back({pos_.get(ov), pos_.get(iv), s, e});
  };
  for (EdgeId e : owned_) {
    const EdgeAssign& a = assigns[edge_assign_.get(e)];
    if (a.role == PageRole::pibar) consider(e);
  }
  for (VertexId w : crossings) {
    auto [e1, e2] = ctx->pair_of_dummy[w];
    consider(e1);
    consider(e2);
  }
  if (fbs.empty()) return {};

  // layout positions of the uncrossed outer attachments of each super's
  // root-block string (crossed bindings take other roles and pages)
  std::vector<std::vector<int>> att(supers.size());
  for (int s = 0; s < (int)supers.size(); ++s) {
    const Block& R = blocks[supers[s].root];
    size_t from = R.parent < 0 ? 0 : 1;
    for (size_t i = from; i < R.cycle.size(); ++i) {
      Dart d0 = sk.vertex_dart[R.cycle[i]];
      Dart d = d0;
      do {
        VertexId u = sk.head(d);
        if (outer_pos_.has(u)) att[s].push_back(pos_.get(u));
        d = sk.cw_next[d];
      } while (d != d0);
    }
  }

  struct Con {
    int sa, sb;
    bool diff;  // the two supers need opposite pi/pibar phases (else equal)
    EdgeId e;   // the binding to evict if the constraint stays violated
  };
  std::vector<Con> cons;
  std::vector<std::vector<std::pair<int, int>>> adj(trees.size());
  auto constrain = [&](int sa, int sb, bool want_diff, EdgeId e) {
    cons.push_back({sa, sb, want_diff, e});
    int ta = supers[sa].tree, tb = supers[sb].tree;
    if (ta == tb) return;  // depth alternation decides; checked at the end
    int parity = (supers[sa].depth ^ supers[sb].depth ^ (want_diff ? 1 : 0)) & 1;
    adj[ta].push_back({tb, parity});
    adj[tb].push_back({ta, parity});
  };

  for (const Fb& fb : fbs) {
    for (int s = 0; s < (int)supers.size(); ++s) {
      if (s == fb.s || supers[s].order.empty()) continue;
      int lo = pos_.get(supers[s].order.front());
      int hi = pos_.get(supers[s].order.back());
      if (lo > fb.pv && hi < fb.pw) {
        // string under the binding; forward bindings into it from beyond the
        // inner endpoint would twist on the shared pibar page
        for (int pu : att[s])
          if (pu > fb.pw) {
            constrain(s, fb.s, true, fb.e);
            break;
          }
      } else if (hi < fb.pv) {
        // string left of the binding; a forward binding from under it wraps
        // over the binding's outer endpoint and twists on pibar
        for (int pu : att[s])
          if (pu > hi && pu > fb.pv && pu < fb.pw) {
            constrain(s, fb.s, true, fb.e);
            break;
          }
      }
      // first and last block edges run between the leader and the string on
      // the super's pi page; they twist the binding when exactly one end is
      // under it (sharing the binding's inner endpoint is fine)
      const Block& R = blocks[supers[s].root];
      if (R.parent >= 0 && !R.elementary) {
        int lp = pos_.get(R.leader());
        bool lead_in = lp > fb.pv && lp < fb.pw;
        bool str_in = lo > fb.pv && hi < fb.pw;
        if (lp != fb.pw && lead_in != str_in) constrain(s, fb.s, false, fb.e);
      }
    }
  }
  for (size_t i = 0; i < fbs.size(); ++i)
    for (size_t j = i + 1; j < fbs.size(); ++j) {
      const Fb &a = fbs[i], &b = fbs[j];
      if (a.s == b.s) continue;
      bool cross = (a.pv < b.pv && b.pv < a.pw && a.pw < b.pw) ||
                   (b.pv < a.pv && a.pv < b.pw && b.pw < a.pw);
      if (cross) constrain(a.s, b.s, true, a.e);
    }

  std::vector<int> state(trees.size(), -1);
  for (int t0 = 0; t0 < (int)trees.size(); ++t0) {
    if (state[t0] >= 0 || adj[t0].empty()) continue;
    state[t0] = tree_flip[t0];
    std::vector<int> bfs{t0};
    while (!bfs.empty()) {
      int t = bfs.back();
      bfs.pop_back();
      for (auto [t2, par] : adj[t]) {
        int want = state[t] ^ par;
        if (state[t2] < 0) {
          state[t2] = want;
          tree_flip[t2] = want;
          bfs.push_back(t2);
        }
      }
    }
  }

  std::vector<EdgeId> evict;
  for (const Con& c : cons) {
    bool differ = pi_phase(c.sa) != pi_phase(c.sb);
    if (differ == c.diff) continue;
    if (std::find(evict.begin(), evict.end(), c.e) == evict.end())
      evict.push_back(c.e);
  }
  return evict;
}

void TwoLevelAnalysis::color_and_assign(bool displace) {
  const PlaneGraph& sk = ctx->skel;
  deferred_.clear();

  // Edge flags: 1 first edge of an uncovered block, 2 last edge of a block,
  // 4 last edge of an uncovered block. A 2-vertex block has a single
  // (multi-)edge which counts as its last edge, never as a first edge; both
  // copies bound its right side and carry the last-edge flags.
  auto orf = [&](EdgeId e, int bit) { edge_flags_.set(e, edge_flags_.get(e, 0) | bit); };
  for (const Block& B : blocks) {
    if (B.elementary) continue;
    EdgeId first = sk.edge_of(B.cycle_darts.front());
    EdgeId last = sk.edge_of(B.cycle_darts.back());
    int lastbits = 2 | (B.covered ? 0 : 4);
    if (B.cycle.size() == 2) {
      orf(first, lastbits);
      orf(last, lastbits);
    } else {
      if (!B.covered) orf(first, 1);
      orf(last, lastbits);
    }
  }

  for (EdgeId e : owned_) {
    EdgeAssign& a = assigns[edge_assign_.get(e)];
    const EdgeRec& r = sk.edges[e];
    bool uo = outer_pos_.has(r.u), vo = outer_pos_.has(r.v);
    a.coloring_case = 1;
    if (uo && vo) {
      a.color = EdgeColor::black;
      a.role = PageRole::eta;
      mark_role(PageRole::eta, -1);
    } else if (uo || vo) {
      VertexId ov = uo ? r.u : r.v;
      VertexId iv = uo ? r.v : r.u;
      int iu = outer_pos_.get(ov);
      bool pre = false;
      auto it = clusters_at_.find(iv);
      if (it != clusters_at_.end())
        for (int cId : it->second)
          if (clusters[cId].cover > iu) pre = true;
      a.color = pre ? EdgeColor::red : EdgeColor::black;
      if (pre) {
        a.role = PageRole::rho;
        mark_role(PageRole::rho, -1);
      } else if (pos_.get(ov) < pos_.get(iv)) {
        if (far_backward(ov, iv)) {
          a.role = PageRole::pibar;
          a.super_block = blocks[vertex_block_.get(iv)].super_block;
          mark_role(PageRole::pibar, a.super_block);
        } else {
          a.role = PageRole::eta;
          mark_role(PageRole::eta, -1);
        }
      } else {
        a.role = PageRole::pibar;
        a.super_block = blocks[vertex_block_.get(iv)].super_block;
        mark_role(PageRole::pibar, a.super_block);
      }
    } else {
      int b = edge_block_.get(e);
      require(b >= 0, Err::Internal, "inner region edge outside every block cycle");
      a.color = EdgeColor::black;
      a.role = PageRole::pi;
      a.super_block = blocks[b].super_block;
      mark_role(PageRole::pi, a.super_block);
    }
  }

  std::vector<EdgeId> evicted = separate_far_backward_phases();

  for (VertexId w : crossings) color_crossing(w);

  for (EdgeId e : evicted) {
    EdgeAssign& a = assigns[edge_assign_.get(e)];
    if (a.role != PageRole::pibar) continue;
    a.role = PageRole::chi;
    mark_role(PageRole::chi, a.super_block);
    note("far-backward binding parked on the purple pages");
  }

  place_deferred_bindings();

  // The reds of one instance share a page. Reds from different quads stay
  // clear of each other in most layouts, but two can still interleave; the
  // later one then moves to the purple pool.
  {
    std::vector<int> kept;
    for (int i = 0; i < (int)assigns.size(); ++i) {
      EdgeAssign& a = assigns[i];
      if (a.role != PageRole::rho) continue;
      const EdgeRec& r = sk.edges[a.e];
      int lo = std::min(pos_.get(r.u), pos_.get(r.v));
      int hi = std::max(pos_.get(r.u), pos_.get(r.v));
      bool clash = false;
      for (int j : kept) {
        const EdgeRec& q = sk.edges[assigns[j].e];
        if (q.u == r.u || q.u == r.v || q.v == r.u || q.v == r.v) continue;
        int ol = std::min(pos_.get(q.u), pos_.get(q.v));
        int oh = std::max(pos_.get(q.u), pos_.get(q.v));
        if ((lo < ol && ol < hi && hi < oh) || (ol < lo && lo < oh && oh < hi)) {
          clash = true;
          break;
        }
      }
      if (!clash) {
        kept.push_back(i);
        continue;
      }
      a.role = PageRole::chi;
      mark_role(PageRole::chi, a.super_block);
      note("interleaving red chord parked on the purple pages");
    }
  }

  // When the parent instance parked its backward bindings on one page of
  // this instance's pi pair (the seed marks which one), those bindings fan
  // out from just left of our outer cycle and end on our outer vertices.
  // Any edge of ours on that page whose span strictly covers an outer
  // vertex could twist such a binding, so it moves to the purple pool.
  if (phase_seed_ >= 0) {
    for (EdgeAssign& a : assigns) {
      int key;
      if (a.role == PageRole::pi)
        key = a.super_block >= 0 ? pi_phase(a.super_block) : 0;
      else if (a.role == PageRole::pibar)
        key = a.super_block >= 0 ? pi_phase(a.super_block) ^ 1 : 1;
      else
        continue;
      if (key != phase_seed_) continue;
      const EdgeRec& r = sk.edges[a.e];
      int lo = std::min(pos_.get(r.u), pos_.get(r.v));
      int hi = std::max(pos_.get(r.u), pos_.get(r.v));
      bool covers = false;
      for (VertexId v : outer) {
        int pv = pos_.get(v);
        if (pv > lo && pv < hi && v != r.u && v != r.v) {
          covers = true;
          break;
        }
      }
      if (!covers) continue;
      a.role = PageRole::chi;
      mark_role(PageRole::chi, a.super_block);
      note("edge over an outer vertex parked off the shared page");
    }
  }

  if (displace) displace_last_vertex_chords();

  // Crossing instrumentation: can the purple edges of this instance share one
  // page, or do they need the pair?
  std::vector<int> purp;
  for (int i = 0; i < (int)assigns.size(); ++i)
    if (assigns[i].color == EdgeColor::purple) purp.push_back(i);
  if (!purp.empty()) role_used[4] = true;
  if (purp.size() > 64) {
    note("too many purple edges to bipartition exactly; assuming both pages");
    role_used[5] = true;
  } else if (purp.size() > 1) {
    auto span = [&](int i) {
      const EdgeRec& r = sk.edges[assigns[i].e];
      int a2 = pos_.get(r.u), b2 = pos_.get(r.v);
      return std::make_pair(std::min(a2, b2), std::max(a2, b2));
    };
    auto twist = [&](int i, int j) {
      auto [a2, b2] = span(i);
      auto [c2, d2] = span(j);
      if (a2 == c2 || a2 == d2 || b2 == c2 || b2 == d2) return false;
      return (a2 < c2 && c2 < b2 && b2 < d2) || (c2 < a2 && a2 < d2 && d2 < b2);
    };
    std::vector<int> side(purp.size(), -1);
    bool two = false, odd = false;
    for (size_t s0 = 0; s0 < purp.size(); ++s0) {
      if (side[s0] >= 0) continue;
      side[s0] = 0;
      std::vector<size_t> bfs{s0};
      while (!bfs.empty()) {
        size_t i = bfs.back();
        bfs.pop_back();
        for (size_t j = 0; j < purp.size(); ++j) {
          if (i == j || !twist((int)purp[i], (int)purp[j])) continue;
          if (side[j] < 0) {
            side[j] = 1 - side[i];
            if (side[j] == 1) two = true;
            bfs.push_back(j);
          } else if (side[j] == side[i]) {
            odd = true;
          }
        }
      }
    }
    if (two) role_used[5] = true;
    if (odd) note("purple twist graph is not bipartite in this instance");
  }
}

void TwoLevelAnalysis::color_crossing(VertexId w) {
  const PlaneGraph& sk = ctx->skel;
  auto [e1, e2] = ctx->pair_of_dummy[w];
  int f = ctx->quad_of_dummy[w];

  auto add = [&](EdgeId e) -> int {
    if (edge_assign_.has(e)) return edge_assign_.get(e);
    int idx = (int)assigns.size();
    EdgeAssign a;
    a.e = e;
    assigns.push_back(a);
    edge_assign_.set(e, idx);
    return idx;
  };
  int i1 = add(e1), i2 = add(e2);

  auto kind = [&](EdgeId e) {
    const EdgeRec& r = sk.edges[e];
    return (outer_pos_.has(r.u) ? 1 : 0) + (outer_pos_.has(r.v) ? 1 : 0);
  };
  auto min_outer = [&](EdgeId e) {
    const EdgeRec& r = sk.edges[e];
    int a2 = outer_pos_.get(r.u), b2 = outer_pos_.get(r.v);
    if (a2 < 0) a2 = INT_MAX;
    if (b2 < 0) b2 = INT_MAX;
    return std::min(a2, b2);
  };
  auto other_key = [&](EdgeId e) {
    // tie-break: the endpoint that is not the shared least outer corner
    const EdgeRec& r = sk.edges[e];
    int a2 = outer_pos_.get(r.u), b2 = outer_pos_.get(r.v);
    int mo = min_outer(e);
    int oth = (a2 == mo) ? (b2 >= 0 ? b2 : pos_.get(r.v)) : (a2 >= 0 ? a2 : pos_.get(r.u));
    return oth;
  };
  auto super_of_inner = [&](VertexId v) {
    int b = vertex_block_.get(v);
    require(b >= 0, Err::Internal, "inner endpoint without a block");
    return blocks[b].super_block;
  };
  auto binding_parts = [&](EdgeId e, VertexId& ov, VertexId& iv) {
    const EdgeRec& r = sk.edges[e];
    if (outer_pos_.has(r.u)) {
      ov = r.u;
      iv = r.v;
    } else {
      ov = r.v;
      iv = r.u;
    }
  };
  auto green_binding_eta = [&](int idx, int cse) {
    EdgeAssign& a = assigns[idx];
    VertexId ov, iv;
    binding_parts(a.e, ov, iv);
    a.color = EdgeColor::green;
    a.coloring_case = cse;
    if (pos_.get(ov) < pos_.get(iv) && !far_backward(ov, iv)) {
      a.role = PageRole::eta;
      mark_role(PageRole::eta, -1);
    } else {
      a.role = PageRole::pibar;
      a.super_block = super_of_inner(iv);
      mark_role(PageRole::pibar, a.super_block);
    }
  };
  auto green_binding_pi = [&](int idx, int cse) {
    // the green partner already took eta, so the backward case dodges it
    EdgeAssign& a = assigns[idx];
    VertexId ov, iv;
    binding_parts(a.e, ov, iv);
    a.color = EdgeColor::green;
    a.coloring_case = cse;
    a.super_block = super_of_inner(iv);
    a.role = pos_.get(ov) < pos_.get(iv) ? PageRole::pi : PageRole::pibar;
    mark_role(a.role, a.super_block);
  };
  auto red = [&](int idx, int cse) {
    EdgeAssign& a = assigns[idx];
    a.color = EdgeColor::red;
    a.role = PageRole::rho;
    a.coloring_case = cse;
    mark_role(PageRole::rho, -1);
  };
  auto green_eta = [&](int idx, int cse) {
    EdgeAssign& a = assigns[idx];
    a.color = EdgeColor::green;
    a.role = PageRole::eta;
    a.coloring_case = cse;
    mark_role(PageRole::eta, -1);
  };
  auto quad_flag = [&](int bit) {
    for (Dart d : ctx->sfs.faces[f])
      if (edge_flags_.get(sk.edge_of(d), 0) & bit) return true;
    return false;
  };

  int k1 = kind(e1), k2 = kind(e2);
  int total = k1 + k2;

  if (total == 4) {
    // two crossed outer chords
    int g = i1, h = i2;
    if (min_outer(e2) < min_outer(e1) ||
        (min_outer(e2) == min_outer(e1) && other_key(e2) < other_key(e1))) {
      g = i2;
      h = i1;
    }
    green_eta(g, 2);
    red(h, 2);
  } else if (total == 3) {
    int ic = k1 == 2 ? i1 : i2;  // the chord
    int ib = k1 == 2 ? i2 : i1;  // the binding
    green_eta(ic, 3);
    green_binding_pi(ib, 3);
  } else if (total == 2) {
    if (k1 == 2 || k2 == 2) {
      // outer chord over an inner chord, two different trees
      int ic = k1 == 2 ? i1 : i2;
      int ii = k1 == 2 ? i2 : i1;
      green_eta(ic, 41);
      EdgeAssign& a = assigns[ii];
      const EdgeRec& r = sk.edges[a.e];
      VertexId far = pos_.get(r.u) > pos_.get(r.v) ? r.u : r.v;
      a.color = EdgeColor::green;
      a.role = PageRole::pi;
      a.coloring_case = 41;
      a.super_block = super_of_inner(far);
      mark_role(PageRole::pi, a.super_block);
    } else if (quad_flag(2)) {
      // Two crossed bindings beside the last edge of a block. The quad is
      // that block's dominating face, so one diagonal is a backward binding
      // from the dominator and goes to eta, or to the forward page of its
      // block when it reaches back past the dominator. The other diagonal
      // is a forward binding that wraps through the crossing; it leaves the
      // fan order of the plain forward bindings, so it is placed by the
      // deferred pass once every other edge has its role.
      VertexId ov1, iv1, ov2, iv2;
      binding_parts(assigns[i1].e, ov1, iv1);
      binding_parts(assigns[i2].e, ov2, iv2);
      bool back1 = pos_.get(ov1) < pos_.get(iv1);
      bool back2 = pos_.get(ov2) < pos_.get(iv2);
      if (back1 == back2) {
        // Both diagonals run the same way. The default page holds only one
        // of them: they cross, so on a shared page they twist. The one at
        // the lesser outer corner keeps the default; where the other goes
        // depends on everything else in the instance, so it waits for the
        // deferred placement pass.
        int g = i1, h = i2;
        if (min_outer(e2) < min_outer(e1) ||
            (min_outer(e2) == min_outer(e1) && other_key(e2) < other_key(e1))) {
          g = i2;
          h = i1;
        }
        green_binding_eta(g, 42);
        EdgeAssign& ah = assigns[h];
        VertexId hov, hiv;
        binding_parts(ah.e, hov, hiv);
        ah.color = EdgeColor::green;
        ah.coloring_case = 42;
        if (pos_.get(hov) < pos_.get(hiv) && !far_backward(hov, hiv)) {
          ah.role = PageRole::eta;
          mark_role(PageRole::eta, -1);
          note("crossed backward bindings in a last-edge quad share eta");
        } else {
          ah.super_block = super_of_inner(hiv);
          deferred_.push_back(h);
        }
      } else {
        EdgeAssign& ab = assigns[back1 ? i1 : i2];
        EdgeAssign& af = assigns[back1 ? i2 : i1];
        VertexId bov = back1 ? ov1 : ov2, biv = back1 ? iv1 : iv2;
        VertexId fiv = back1 ? iv2 : iv1;
        ab.color = af.color = EdgeColor::green;
        ab.coloring_case = af.coloring_case = 42;
        bool wrapped = far_backward(bov, biv);
        if (wrapped) {
          ab.role = PageRole::pibar;
          ab.super_block = super_of_inner(biv);
        } else {
          ab.role = PageRole::eta;
        }
        af.super_block = super_of_inner(fiv);
        deferred_.push_back(back1 ? i2 : i1);
        mark_role(ab.role, ab.super_block);
      }
    } else {
      int g = i1, h = i2;
      if (min_outer(e2) < min_outer(e1) ||
          (min_outer(e2) == min_outer(e1) && other_key(e2) < other_key(e1))) {
        g = i2;
        h = i1;
      }
      green_binding_eta(g, 43);
      red(h, 43);
    }
  } else if (total == 1) {
    int ib = k1 == 1 ? i1 : i2;  // the binding
    int ih = k1 == 1 ? i2 : i1;  // the inner chord
    green_binding_eta(ib, 5);
    EdgeAssign& a = assigns[ih];
    const EdgeRec& r = sk.edges[a.e];
    int bx = vertex_block_.get(r.u), by = vertex_block_.get(r.v);
    require(bx >= 0 && by >= 0, Err::Internal, "inner chord endpoint without a block");
    if (bx == by) {
      red(ih, 51);
    } else if (quad_flag(1)) {
      red(ih, 52);
    } else if ((blocks[by].covered && blocks[by].leader() == r.u) ||
               (blocks[bx].covered && blocks[bx].leader() == r.v)) {
      red(ih, 53);
    } else if (!blocks[bx].covered && !blocks[by].covered && quad_flag(4)) {
      a.color = EdgeColor::purple;
      a.role = PageRole::chi;
      a.coloring_case = 54;
      mark_role(PageRole::chi, -1);
      classify_purple(a);
    } else {
      red(ih, 55);
      note("inner chord crossing fits no red or purple rule; forced red");
    }
  } else {
    red(i1, 50);
    red(i2, 50);
    note("owned crossing with no outer endpoint");
  }
}

// Crossed forward bindings pulled off the shared pages wait here until every
// other edge has a role. Each one takes the first twist-free page among the
// block page and the forward page of its super-block, preferring the block
// page when the binding leaves the string past its right end. When both
// twist something, it joins the purple pool and the exact 2-coloring at the
// end of the composition places it.
void TwoLevelAnalysis::place_deferred_bindings() {
  const PlaneGraph& sk = ctx->skel;
  for (int idx : deferred_) {
    EdgeAssign& a = assigns[idx];
    const EdgeRec& r = sk.edges[a.e];
    int s = a.super_block;
    int lo = std::min(pos_.get(r.u), pos_.get(r.v));
    int hi = std::max(pos_.get(r.u), pos_.get(r.v));
    VertexId iv = outer_pos_.has(r.u) ? r.v : r.u;
    bool er = s >= 0 && !supers[s].order.empty() && supers[s].order.back() == iv;
    PageRole cand[2] = {er ? PageRole::pi : PageRole::pibar,
                        er ? PageRole::pibar : PageRole::pi};
    a.role = PageRole::chi;
    for (PageRole c : cand) {
      int key = pi_phase(s) ^ (c == PageRole::pibar ? 1 : 0);
      bool clash = false;
      for (const EdgeAssign& o : assigns) {
        if (&o == &a) continue;
        int ok;
        if (o.role == PageRole::pi)
          ok = o.super_block >= 0 ? pi_phase(o.super_block) : 0;
        else if (o.role == PageRole::pibar)
          ok = o.super_block >= 0 ? pi_phase(o.super_block) ^ 1 : 1;
        else
          continue;
        if (ok != key) continue;
        const EdgeRec& q = sk.edges[o.e];
        if (q.u == r.u || q.u == r.v || q.v == r.u || q.v == r.v) continue;
        int ol = std::min(pos_.get(q.u), pos_.get(q.v));
        int oh = std::max(pos_.get(q.u), pos_.get(q.v));
        if ((lo < ol && ol < hi && hi < oh) || (ol < lo && lo < oh && oh < hi)) {
          clash = true;
          break;
        }
      }
      if (!clash) {
        a.role = c;
        break;
      }
    }
    mark_role(a.role, s);
    if (a.role == PageRole::chi)
      note("crossed forward binding parked on the purple pages");
  }
}

void TwoLevelAnalysis::classify_purple(EdgeAssign& a) {
  const PlaneGraph& sk = ctx->skel;
  const EdgeRec& r = sk.edges[a.e];
  VertexId x = r.u, y = r.v;
  int bx = vertex_block_.get(x), by = vertex_block_.get(y);

  auto is_handle = [&](VertexId lead, VertexId tip, int b) {
    const Block& B = blocks[b];
    return !B.elementary && B.q() >= 2 && B.leader() == lead &&
           B.cycle[B.q() - 1] == tip;
  };
  if (is_handle(x, y, by)) {
    a.purple = PurpleKind::handle;
    a.purple_block = by;
  } else if (is_handle(y, x, bx)) {
    a.purple = PurpleKind::handle;
    a.purple_block = bx;
  } else if (blocks[bx].leader() == blocks[by].leader()) {
    a.purple = PurpleKind::bridge;
    a.purple_block = pos_.get(x) > pos_.get(y) ? bx : by;
  } else {
    a.purple = PurpleKind::connector;
    a.purple_block = pos_.get(x) > pos_.get(y) ? bx : by;
  }

  if (a.purple == PurpleKind::handle) {
    // A handle nests with the block interior, so it moves into the block's
    // own page and the child must steer its last-vertex chords away from it.
    Block& B = blocks[a.purple_block];
    a.role = PageRole::pi;
    a.super_block = B.super_block;
    a.displaced = true;
    B.displace_child = true;
  } else {
    a.super_block = blocks[a.purple_block].super_block;
  }

  // per super-block there is room for at most one purple edge
  int s = a.super_block;
  if (s >= 0) {
    int seen = 0;
    for (const EdgeAssign& o : assigns)
      if (o.color == EdgeColor::purple && o.super_block == s) ++seen;
    if (seen > 1) note("two purple edges charged to one super-block");
  }
}

void TwoLevelAnalysis::displace_last_vertex_chords() {
  const PlaneGraph& sk = ctx->skel;
  VertexId vt = outer.back();
  VertexId v0 = outer.front();

  struct Want {
    int tree;
    int phase;  // pibar phase of the target before any flips
  };
  std::vector<Want> wants;
  int flooded = 0;

  for (EdgeId e : owned_) {
    EdgeAssign& a = assigns[edge_assign_.get(e)];
    if (a.role != PageRole::eta) continue;
    const EdgeRec& r = sk.edges[e];
    if (r.u != vt && r.v != vt) continue;
    if (!outer_pos_.has(r.u) || !outer_pos_.has(r.v)) continue;
    VertexId oth = r.other(vt);
    if (oth == v0) continue;  // shares the handle's endpoint, no twist
    if (cycle_edge_.has(e)) continue;

    int i = outer_pos_.get(oth);
    int target = -1;
    if (flooded < 64) {
      ++flooded;
      Partition p = partition_by_chord(e);
      std::unordered_set<VertexId> h2(p.h2.begin(), p.h2.end());
      for (int s : super_order) {
        if (supers[s].dominator != i) continue;
        if (h2.count(supers[s].order.front())) continue;
        target = s;
        break;
      }
    } else {
      note("too many displaced chords at the last vertex; using the free phase");
    }
    a.displaced = true;
    a.role = PageRole::pibar;
    a.super_block = target;
    if (target >= 0) wants.push_back({supers[target].tree, (supers[target].depth + 1) & 1});
  }

  // Crossed green chords at the last vertex follow their crossing partner
  // into the opposite phase of the same super-block.
  for (VertexId w : crossings) {
    auto [e1, e2] = ctx->pair_of_dummy[w];
    for (EdgeId e : {e1, e2}) {
      EdgeAssign& a = assigns[edge_assign_.get(e)];
      if (a.role != PageRole::eta || a.color != EdgeColor::green) continue;
      const EdgeRec& r = sk.edges[e];
      if (r.u != vt && r.v != vt) continue;
      if (!outer_pos_.has(r.u) || !outer_pos_.has(r.v)) continue;
      if (r.other(vt) == v0) continue;
      const EdgeAssign& pa = assigns[edge_assign_.get(r.partner)];
      a.displaced = true;
      if (pa.role == PageRole::pi && pa.super_block >= 0) {
        a.role = PageRole::pibar;
        a.super_block = pa.super_block;
      } else if (pa.role == PageRole::pibar && pa.super_block >= 0) {
        a.role = PageRole::pi;
        a.super_block = pa.super_block;
      } else {
        a.role = PageRole::pibar;
        a.super_block = -1;
        note("displaced crossed chord without a phased partner; free phase");
      }
    }
  }

  // All plain displaced chords are nested around the same last vertex, so
  // steer every target onto one physical page by flipping whole trees.
  if (!wants.empty()) {
    int want_page = wants.front().phase;  // first target's tree keeps its seed
    int first_tree = wants.front().tree;
    for (const Want& w2 : wants) {
      if (w2.tree == first_tree) {
        if (w2.phase != want_page)
          note("conflicting displacement phases inside one block tree");
        continue;
      }
      int seed0 = phase_seed_ < 0 ? 0 : phase_seed_;
      int flip = w2.phase ^ want_page ^ seed0;
      if (tree_flip[w2.tree] != flip && tree_flip[w2.tree] != seed0)
        note("conflicting displacement phases across block trees");
      tree_flip[w2.tree] = flip;
    }
  }
}

// ---------------------------------------------------------------------------
// partitions and separation

Partition TwoLevelAnalysis::partition_by_super(int s) const {
  require(s >= 0 && s < (int)supers.size(), Err::BadParameter, "no such super-block");
  const Block& B = blocks[supers[s].root];
  require(!B.covered, Err::InducerCovered, "partition inducer must be uncovered");
  Partition p;
  p.super = s;
  p.vi = B.alpha;
  p.vk = B.omega;

  scratch_.clear();
  auto add_v = [&](VertexId v) {
    if (scratch_.has(v)) return;
    scratch_.set(v, 1);
    p.h2.push_back(v);
  };
  auto add_block = [&](int bid) {
    const Block& X = blocks[bid];
    size_t from = X.parent < 0 ? 0 : 1;
    for (size_t i = from; i < X.cycle.size(); ++i) add_v(X.cycle[i]);
  };

  for (int b = 0; b < (int)blocks.size(); ++b) {
    const Block& X = blocks[b];
    bool in = false;
    if (b == supers[s].root) {
      in = true;
    } else if (X.alpha > p.vi && X.alpha < p.vk) {
      in = true;
    } else if (X.alpha == p.vi && X.key_pos > B.key_pos) {
      in = true;
    } else if (X.alpha == p.vk && X.covered) {
      for (int q2 = b; q2 != -1; q2 = blocks[q2].parent) {
        if (q2 == supers[s].root || blocks[q2].leader() == B.leader()) {
          in = true;
          break;
        }
      }
    }
    if (in) add_block(b);
  }
  for (int j = p.vi + 1; j < p.vk; ++j) add_v(outer[j]);

  for (int o : super_order) {
    if (o == s) break;
    if (supers[o].dominator != p.vi) continue;
    for (VertexId v : supers[o].order) p.l_set.push_back(v);
  }
  return p;
}

Partition TwoLevelAnalysis::partition_by_chord(EdgeId e) const {
  const PlaneGraph& sk = ctx->skel;
  const EdgeRec& r = sk.edges[e];
  require(r.arc0 >= 0 && !r.crossed(), Err::BadParameter,
          "chord partition needs a live uncrossed edge");
  int pu = outer_pos_.get(r.u), pv = outer_pos_.get(r.v);
  require(pu >= 0 && pv >= 0, Err::BadParameter, "not an edge between outer vertices");
  Partition p;
  p.chord = e;
  p.vi = std::min(pu, pv);
  p.vk = std::max(pu, pv);

  Dart d0 = 2 * r.arc0;
  int f1 = mirror ? ctx->sfs.face_of[PlaneGraph::twin(d0)] : ctx->sfs.face_of[d0];
  int f2 = mirror ? ctx->sfs.face_of[d0] : ctx->sfs.face_of[PlaneGraph::twin(d0)];
  // the enclosed side touches the first interior face past v_i
  int target =
      ctx->sfs.face_of[mirror ? cycle[p.vi] : PlaneGraph::twin(cycle[p.vi])];

  auto flood = [&](int f0, std::vector<int>& out) {
    scratch_.clear();
    if (!region_.has(f0)) return false;
    out.clear();
    out.push_back(f0);
    scratch_.set(f0, 1);
    bool hit = f0 == target;
    for (size_t q2 = 0; q2 < out.size(); ++q2) {
      for (Dart d : ctx->sfs.faces[out[q2]]) {
        EdgeId ed = sk.edge_of(d);
        if (ed == e || cycle_edge_.has(ed)) continue;
        int nf = ctx->sfs.face_of[PlaneGraph::twin(d)];
        if (!region_.has(nf) || scratch_.has(nf)) continue;
        scratch_.set(nf, 1);
        out.push_back(nf);
        if (nf == target) hit = true;
      }
    }
    return hit;
  };

  std::vector<int> side;
  if (!flood(f1, side)) {
    bool ok = flood(f2, side);
    require(ok, Err::Internal, "no side of the chord reaches the cycle arc");
  }

  scratch2_.clear();
  for (int f : side) {
    for (Dart d : ctx->sfs.faces[f]) {
      VertexId v = sk.tail(d);
      int op = outer_pos_.get(v);
      if (op == p.vi || op == p.vk) continue;
      if (scratch2_.has(v)) continue;
      scratch2_.set(v, 1);
      p.h2.push_back(v);
    }
  }

  for (int o : super_order) {
    if (supers[o].dominator != p.vi) continue;
    if (scratch2_.has(supers[o].order.front())) continue;
    for (VertexId v : supers[o].order) p.l_set.push_back(v);
  }
  return p;
}

bool TwoLevelAnalysis::well_separated(EdgeId e1, EdgeId e2, const Partition& p) const {
  const PlaneGraph& sk = ctx->skel;
  scratch_.clear();
  for (VertexId v : p.h2) scratch_.set(v, 1);
  scratch2_.clear();
  for (VertexId v : p.l_set) scratch2_.set(v, 1);
  VertexId bi = outer[p.vi], bk = outer[p.vk];

  auto in_h2 = [&](VertexId v) { return scratch_.has(v) || v == bi || v == bk; };
  auto in_h1 = [&](VertexId v) {
    if (v == bi || v == bk) return true;
    return !scratch_.has(v) && !scratch2_.has(v);
  };
  const EdgeRec& r1 = sk.edges[e1];
  const EdgeRec& r2 = sk.edges[e2];
  return in_h1(r1.u) && in_h1(r1.v) && in_h2(r2.u) && in_h2(r2.v);
}

std::vector<int> TwoLevelAnalysis::backbone(int tree, int vi) const {
  std::vector<int> ids;
  for (int b = 0; b < (int)blocks.size(); ++b)
    if (blocks[b].tree == tree && !blocks[b].covered && blocks[b].alpha == vi)
      ids.push_back(b);
  if (ids.empty())
    fail(Err::NoBlocksDominated, "no uncovered blocks dominated by that vertex");
  std::sort(ids.begin(), ids.end(),
            [&](int x, int y) { return blocks[x].depth < blocks[y].depth; });
  for (size_t i = 1; i < ids.size(); ++i)
    require(blocks[ids[i]].parent == ids[i - 1], Err::Internal,
            "blocks dominated by one vertex do not chain");
  return ids;
}

}  // namespace tenpage
