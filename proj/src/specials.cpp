#include "tenpage/specials.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>

namespace tenpage {

namespace {

long long pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (long long)u << 32 | (unsigned)v;
}

// Adjacency over real vertices; skeleton_only drops crossed edges.
std::vector<std::set<VertexId>> adjacency(const PlaneGraph& g,
                                          bool skeleton_only) {
  std::vector<std::set<VertexId>> adj(g.n_real);
  for (const EdgeRec& r : g.edges) {
    if (!g.arc_alive(r.arc0)) continue;
    if (skeleton_only && r.crossed()) continue;
    adj[r.u].insert(r.v);
    adj[r.v].insert(r.u);
  }
  return adj;
}

bool valid_cycle(const PlaneGraph& g, const std::vector<VertexId>& cycle) {
  if ((int)cycle.size() != g.n_real || g.n_real < 3) return false;
  std::vector<char> seen(g.n_real, 0);
  for (VertexId v : cycle) {
    if (v < 0 || v >= g.n_real || seen[v]) return false;
    seen[v] = 1;
  }
  auto adj = adjacency(g, true);
  for (size_t i = 0; i < cycle.size(); ++i) {
    VertexId u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (!adj[u].count(v)) return false;
  }
  return true;
}

}  // namespace

BookEmbedding hamiltonian_embed(const PlaneGraph& g,
                                const HamiltonianCertificate& cert) {
  require(valid_cycle(g, cert.cycle), Err::InvalidCertificate,
          "not a Hamiltonian cycle of the planar skeleton");

  // mark one uncrossed edge per consecutive cycle pair (copies included:
  // they all run alongside the cycle and are harmless on page 0)
  std::vector<int> cpos(g.n_real, -1);
  int n = g.n_real;
  for (int i = 0; i < n; ++i) cpos[cert.cycle[i]] = i;
  auto on_cycle = [&](const EdgeRec& r) {
    int d = std::abs(cpos[r.u] - cpos[r.v]);
    return !r.crossed() && (d == 1 || d == n - 1);
  };

  // flood the faces from the outer one without stepping over the cycle;
  // every other edge sits wholly on one side of that closed curve
  FaceSet fs = compute_faces(g);
  std::vector<char> outside(fs.faces.size(), 0);
  std::queue<int> bfs;
  outside[fs.outer] = 1;
  bfs.push(fs.outer);
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (Dart d : fs.faces[f]) {
      if (on_cycle(g.edges[g.edge_of(d)])) continue;
      int nf = fs.face_of[PlaneGraph::twin(d)];
      if (nf >= 0 && !outside[nf]) {
        outside[nf] = 1;
        bfs.push(nf);
      }
    }
  }

  BookEmbedding emb;
  emb.spine = cert.cycle;
  int m_orig = 0;
  while (m_orig < (int)g.edges.size() &&
         g.edges[m_orig].origin == EdgeOrigin::original)
    ++m_orig;
  emb.page.assign(m_orig, -1);
  bool used[4] = {false, false, false, false};
  for (EdgeId e = 0; e < m_orig; ++e) {
    const EdgeRec& r = g.edges[e];
    require(g.arc_alive(r.arc0), Err::Internal,
            "dead original edge in hamiltonian embed");
    if (on_cycle(r)) {
      emb.page[e] = 0;
      used[0] = true;
      continue;
    }
    bool red = r.crossed() && r.partner < e;
    bool out = outside[fs.face_of[2 * r.arc0]];
    int pg = (red ? 2 : 0) + (out ? 1 : 0);
    emb.page[e] = pg;
    used[pg] = true;
  }
  emb.pages_used = used[0] + used[1] + used[2] + used[3];
  return emb;
}

namespace {

// Extended wheel recognition: two non-adjacent poles adjacent to everything,
// the rest a rim cycle whose vertices alternate between the poles in the
// skeleton. Returns the closed-form cycle (p, v2, v1, q, v3, v4, ..., v_2k).
std::optional<std::vector<VertexId>> xw_attempt(
    const std::vector<std::set<VertexId>>& skel, VertexId p, VertexId q) {
  int n = (int)skel.size();
  // walk the rim: skeleton neighbors minus the poles must form a 2k-cycle
  // every rim vertex sees exactly two rim neighbors and one pole
  auto rim_next = [&](VertexId at, VertexId from) -> VertexId {
    if ((int)skel[at].size() != 3) return -1;
    for (VertexId w : skel[at])
      if (w != p && w != q && w != from) return w;
    return -1;
  };
  VertexId v1 = -1;
  for (int v = 0; v < n; ++v)
    if (v != p && v != q && skel[v].count(q)) {
      v1 = v;
      break;
    }
  if (v1 < 0 || (int)skel[v1].size() != 3) return std::nullopt;
  std::vector<VertexId> rim{v1};
  VertexId prev = -1, at = v1;
  while ((int)rim.size() < n - 2) {
    VertexId nx = rim_next(at, prev);
    if (nx < 0 || nx == v1) return std::nullopt;
    rim.push_back(nx);
    prev = at;
    at = nx;
  }
  if (rim_next(at, prev) != v1) return std::nullopt;
  for (int i = 0; i < n - 2; ++i) {
    VertexId pole = i % 2 == 0 ? q : p;
    if (!skel[rim[i]].count(pole)) return std::nullopt;
  }

  // rim = v1, v2, ..., v_2k (either rim direction works by symmetry);
  // the cycle hops p - v2 - v1 - q and then follows the rim from v3
  std::vector<VertexId> cycle{p, rim[1], rim[0], q};
  for (int i = 2; i <= n - 3; ++i) cycle.push_back(rim[i]);
  return cycle;
}

std::optional<std::vector<VertexId>> xw_cycle(
    const std::vector<std::set<VertexId>>& adj,
    const std::vector<std::set<VertexId>>& skel) {
  int n = (int)adj.size();
  if (n < 8 || n % 2 != 0) return std::nullopt;
  // pole candidates see everything but each other; on 8 vertices the rim
  // vertices have the same degree, so try every non-adjacent pair
  std::vector<VertexId> cands;
  for (int v = 0; v < n; ++v)
    if ((int)adj[v].size() == n - 2) cands.push_back(v);
  for (size_t i = 0; i < cands.size(); ++i)
    for (size_t j = i + 1; j < cands.size(); ++j) {
      if (adj[cands[i]].count(cands[j])) continue;
      if (auto c = xw_attempt(skel, cands[i], cands[j])) return c;
    }
  return std::nullopt;
}

}  // namespace

std::optional<HamiltonianCertificate> find_skeleton_hamiltonian(
    const PlaneGraph& g) {
  int n = g.n_real;
  if (n < 3) return std::nullopt;
  auto skel = adjacency(g, true);

  if (auto xw = xw_cycle(adjacency(g, false), skel)) {
    HamiltonianCertificate cert{*xw, HamiltonianCertificate::Source::xw_closed_form};
    if (valid_cycle(g, cert.cycle)) return cert;
  }

  if (n > 30) return std::nullopt;
  std::vector<uint64_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (VertexId w : skel[v]) nbr[v] |= 1ull << w;

  std::vector<VertexId> path{0};
  uint64_t seen = 1;
  long long budget = 4'000'000;
  auto dfs = [&](auto&& self, VertexId at) -> bool {
    if (--budget < 0) return false;
    if ((int)path.size() == n) return (nbr[at] >> 0) & 1;
    for (VertexId w = 0; w < n; ++w) {
      if (!((nbr[at] >> w) & 1) || ((seen >> w) & 1)) continue;
      path.push_back(w);
      seen |= 1ull << w;
      if (self(self, w)) return true;
      seen &= ~(1ull << w);
      path.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return HamiltonianCertificate{path, HamiltonianCertificate::Source::search};
}

int lower_bound(int n, int m) {
  require(n >= 4, Err::BadParameter, "lower bound needs n >= 4");
  if (m <= n) return 0;
  return (m - n + n - 4) / (n - 3);
}

RawDrawing gen_xw(int k) {
  require(k >= 3, Err::BadParameter, "extended wheel needs k >= 3");
  // rim v_i = i - 1 for i in 1..2k, poles p = 2k inside, q = 2k + 1 outside
  int r = 2 * k;
  VertexId p = r, q = r + 1;
  auto V = [&](int i) { return (i - 1 + r) % r; };
  RawDrawing d;
  d.n = r + 2;
  auto rim = [&](int i) { return V(i); };            // edge (v_i, v_i+1)
  auto pe = [&](int i) { return r + V(i); };         // edge (p, v_i)
  auto qe = [&](int i) { return 2 * r + V(i); };     // edge (q, v_i)
  auto ch = [&](int i) { return 3 * r + V(i); };     // chord (v_i, v_i+2)
  for (int i = 1; i <= r; ++i) d.edges.push_back({V(i), V(i + 1)});
  for (int i = 1; i <= r; ++i) d.edges.push_back({p, V(i)});
  for (int i = 1; i <= r; ++i) d.edges.push_back({q, V(i)});
  for (int i = 1; i <= r; ++i) d.edges.push_back({V(i), V(i + 2)});

  // chords at even i run inside the rim across (p, v_i+1), chords at odd i
  // outside across (q, v_i+1)
  for (int i = 1; i <= r; ++i) {
    if (i % 2 == 0)
      d.crossings.push_back({pe(i + 1), ch(i), false});
    else
      d.crossings.push_back({qe(i + 1), ch(i), true});
  }

  d.rotations.resize(d.n);
  for (int i = 1; i <= r; ++i) {
    if (i % 2 == 0)
      d.rotations[V(i)] = {rim(i), ch(i), pe(i), ch(i - 2), rim(i - 1), qe(i)};
    else
      d.rotations[V(i)] = {rim(i), pe(i), rim(i - 1), ch(i - 2), qe(i), ch(i)};
  }
  for (int i = 1; i <= r; ++i) d.rotations[p].push_back(pe(i));
  for (int i = r; i >= 1; --i) d.rotations[q].push_back(qe(i));
  d.outer_edge = qe(1);  // dart q -> v_1, outer face a corner of a q-kite
  d.outer_end = 0;
  return d;
}

RawDrawing gen_crossed_cube() { return gen_xw(3); }

SimpleGraph gen_kn(int n) {
  require(n >= 1, Err::BadParameter, "complete graph needs n >= 1");
  SimpleGraph s;
  s.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) s.edges.push_back({u, v});
  return s;
}

namespace {

// Triangulation under construction. Faces are stored as their dart orbit
// (a, b, c) = darts a->b, b->c, c->a; rotations follow the corner rule: the
// outgoing edge of a face corner is the cw-successor of the incoming one.
struct TriBuilder {
  RawDrawing d;
  std::vector<std::array<int, 3>> faces;  // interior only
  std::unordered_map<long long, EdgeId> edge_id;

  EdgeId add(VertexId u, VertexId v) {
    d.edges.push_back({u, v});
    edge_id[pair_key(u, v)] = (int)d.edges.size() - 1;
    return (int)d.edges.size() - 1;
  }
  EdgeId id(VertexId u, VertexId v) const {
    return edge_id.at(pair_key(u, v));
  }
  bool has(VertexId u, VertexId v) const {
    return edge_id.count(pair_key(u, v)) > 0;
  }
  void insert_after(VertexId at, EdgeId anchor, EdgeId e) {
    auto& rot = d.rotations[at];
    auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it + 1, e);
  }

  void start(int n) {
    d.n = n;
    d.rotations.resize(n);
    EdgeId e01 = add(0, 1), e12 = add(1, 2), e20 = add(2, 0);
    d.rotations[0] = {e01, e20};
    d.rotations[1] = {e01, e12};
    d.rotations[2] = {e12, e20};
    d.outer_edge = e01;  // dart 1 -> 0, outer face (1, 0, 2)
    d.outer_end = 1;
    faces.push_back({0, 1, 2});
  }

  void split(int f, VertexId v) {
    auto [a, b, c] = faces[f];
    EdgeId av = add(a, v), bv = add(b, v), cv = add(c, v);
    insert_after(a, id(c, a), av);
    insert_after(b, id(a, b), bv);
    insert_after(c, id(b, c), cv);
    d.rotations[v] = {av, cv, bv};
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }

  void grow(int n, std::mt19937& rng) {
    start(n);
    for (VertexId v = 3; v < n; ++v) {
      std::uniform_int_distribution<int> pick(0, (int)faces.size() - 1);
      split(pick(rng), v);
    }
  }
};

}  // namespace

RawDrawing gen_planar_triangulation(int n, uint32_t seed) {
  require(n >= 3, Err::BadParameter, "triangulation needs n >= 3");
  std::mt19937 rng(seed);
  TriBuilder tb;
  tb.grow(n, rng);
  return tb.d;
}

RawDrawing gen_random_one_planar(int n, uint32_t seed) {
  require(n >= 4, Err::BadParameter, "1-planar generator needs n >= 4");
  std::mt19937 rng(seed);
  TriBuilder tb;
  tb.grow(n, rng);

  // dart (u, v) -> (face index, opposite corner) over interior faces
  std::unordered_map<long long, std::pair<int, VertexId>> opp;
  auto dart_key = [](VertexId u, VertexId v) {
    return (long long)u << 32 | (unsigned)v;
  };
  for (int f = 0; f < (int)tb.faces.size(); ++f) {
    auto [a, b, c] = tb.faces[f];
    opp[dart_key(a, b)] = {f, c};
    opp[dart_key(b, c)] = {f, a};
    opp[dart_key(c, a)] = {f, b};
  }

  std::vector<EdgeId> cands(tb.d.edges.size());
  for (EdgeId e = 0; e < (int)cands.size(); ++e) cands[e] = e;
  std::shuffle(cands.begin(), cands.end(), rng);
  std::vector<char> face_used(tb.faces.size(), 0);
  for (EdgeId e : cands) {
    auto [u, v] = tb.d.edges[e];
    auto it1 = opp.find(dart_key(u, v));
    auto it2 = opp.find(dart_key(v, u));
    if (it1 == opp.end() || it2 == opp.end()) continue;  // outer edge
    auto [f1, c] = it1->second;
    auto [f2, w] = it2->second;
    if (face_used[f1] || face_used[f2] || c == w || tb.has(c, w)) continue;
    face_used[f1] = face_used[f2] = 1;
    // chord (c, w) through edge (u, v): at c it leaves between (v, c) and
    // (c, u), at w between (u, w) and (w, v)
    EdgeId cw = tb.add(c, w);
    tb.insert_after(c, tb.id(v, c), cw);
    tb.insert_after(w, tb.id(u, w), cw);
    // with (u, v) in stored order and the chord stored as (c, w), the dummy
    // rotation is the default [u, c, v, w]
    tb.d.crossings.push_back({e, cw, false});
  }
  return tb.d;
}

}  // namespace tenpage
