#include "tenpage/embed.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "tenpage/twolevel.hpp"

namespace tenpage {

SimpleGraph original_graph(const PlaneGraph& g) {
  SimpleGraph s;
  s.n = g.n_real;
  for (const EdgeRec& r : g.edges) {
    if (r.origin != EdgeOrigin::original) break;
    s.edges.push_back({r.u, r.v});
  }
  return s;
}

namespace {

// Spine under construction: a doubly linked list over the real vertices.
struct Spine {
  std::vector<VertexId> nxt, prv;
  VertexId head = -1;

  explicit Spine(int n) : nxt(n, -1), prv(n, -1) {}

  void append_run(const std::vector<VertexId>& run) {
    VertexId at = head;
    if (at >= 0)
      while (nxt[at] >= 0) at = nxt[at];
    for (VertexId v : run) {
      if (at < 0) {
        head = v;
      } else {
        nxt[at] = v;
        prv[v] = at;
      }
      at = v;
    }
  }

  void insert_after(VertexId anchor, const std::vector<VertexId>& run) {
    VertexId at = anchor;
    for (VertexId v : run) {
      VertexId after = nxt[at];
      nxt[at] = v;
      prv[v] = at;
      nxt[v] = after;
      if (after >= 0) prv[after] = v;
      at = v;
    }
  }

  void insert_before(VertexId anchor, const std::vector<VertexId>& run) {
    VertexId p = prv[anchor];
    if (p >= 0) {
      insert_after(p, run);
      return;
    }
    // anchor is the head
    VertexId old = head;
    head = run.front();
    prv[head] = -1;
    VertexId at = head;
    for (size_t i = 1; i < run.size(); ++i) {
      nxt[at] = run[i];
      prv[run[i]] = at;
      at = run[i];
    }
    nxt[at] = old;
    prv[old] = at;
  }

  std::vector<VertexId> dump() const {
    std::vector<VertexId> out;
    for (VertexId v = head; v >= 0; v = nxt[v]) out.push_back(v);
    return out;
  }
};

struct Job {
  std::vector<Dart> cycle;
  bool mirror = false;
  int level = 0;
  bool displace = false;
  int eta_page = 0;
  int phase_seed = 0;
};

struct PurpleEdge {
  EdgeId e = -1;
  int level = 0;
};

std::vector<Dart> root_cycle(const PipelineContext& ctx) {
  std::vector<Dart> cyc = ctx.sfs.faces[ctx.sfs.outer];
  int s = 0;
  for (int i = 1; i < (int)cyc.size(); ++i)
    if (ctx.skel.tail(cyc[i]) < ctx.skel.tail(cyc[s])) s = i;
  std::rotate(cyc.begin(), cyc.begin() + s, cyc.end());
  return cyc;
}

}  // namespace

EmbedResult ten_page_embed(const PlaneGraph& g) {
  EmbedResult res;
  SimpleGraph orig = original_graph(g);
  int m_orig = (int)orig.edges.size();
  for (int e = m_orig; e < (int)g.edges.size(); ++e)
    require(g.edges[e].origin == EdgeOrigin::augmented, Err::Internal,
            "original edges are not an id prefix");

  std::vector<int> page(g.edges.size(), -1);

  // degenerate inputs never reach the level machinery
  if (g.n_real < 3 || m_orig < 3) {
    res.emb.spine.resize(g.n_real);
    for (int v = 0; v < g.n_real; ++v) res.emb.spine[v] = v;
    res.emb.page.assign(m_orig, 0);
    res.emb.pages_used = m_orig > 0 ? 1 : 0;
    return res;
  }

  PipelineContext ctx(g);
  TwoLevelAnalysis an;
  Spine spine(g.n_real);
  std::vector<PurpleEdge> purple;
  std::vector<int> set_by_level(g.edges.size(), -1);

  std::deque<Job> jobs;
  jobs.push_back({root_cycle(ctx), false, 0, false, 0});
  bool first = true;

  while (!jobs.empty()) {
    Job job = std::move(jobs.front());
    jobs.pop_front();
    an.build(ctx, job.cycle, job.mirror, job.level, job.displace,
             job.phase_seed);

    res.stats.push_back({job.level, an.roles_used(), an.bgr_roles_used(),
                         an.purple_roles_used()});
    for (const std::string& d : an.diagnostics)
      res.diagnostics.push_back("level " + std::to_string(job.level) + ": " + d);

    if (first) {
      spine.append_run(an.layout);
      first = false;
    } else {
      if (!an.chunks[0].empty()) spine.insert_before(an.outer[1], an.chunks[0]);
      for (int j = 1; j < (int)an.outer.size(); ++j)
        if (!an.chunks[j].empty()) spine.insert_after(an.outer[j], an.chunks[j]);
    }

    int base_pi = job.level % 2 == 0 ? 1 : 3;
    for (const EdgeAssign& a : an.assigns) {
      int pg = -1;
      switch (a.role) {
        case PageRole::eta:
          pg = job.eta_page;
          break;
        case PageRole::pi:
          pg = base_pi + (a.super_block >= 0 ? an.pi_phase(a.super_block) : 0);
          break;
        case PageRole::pibar:
          pg = base_pi + (a.super_block >= 0 ? an.pi_phase(a.super_block) ^ 1 : 1);
          break;
        case PageRole::rho:
          pg = 5 + job.level % 2;
          break;
        case PageRole::chi:
          purple.push_back({a.e, job.level});
          continue;
        case PageRole::none:
          res.diagnostics.push_back("edge " + std::to_string(a.e) +
                                    " left without a role");
          continue;
      }
      if (page[a.e] >= 0) {
        res.diagnostics.push_back("edge " + std::to_string(a.e) +
                                  " assigned by two instances (levels " +
                                  std::to_string(set_by_level[a.e]) + " and " +
                                  std::to_string(job.level) + ")");
        continue;
      }
      page[a.e] = pg;
      set_by_level[a.e] = job.level;
    }

    // This instance's backward bindings and outer chords live on eta_page,
    // which belongs to the pi page pair of the next level. Seeding the
    // child's root phase parks its forward pages on the other page of the
    // pair, so they cannot twist bindings ending on the child's outer cycle.
    int child_base = (job.level + 1) % 2 == 0 ? 1 : 3;
    int child_seed =
        job.eta_page == child_base || job.eta_page == child_base + 1
            ? job.eta_page - child_base
            : 0;
    for (const ChildInstance& ch : an.children) {
      int s = an.blocks[ch.block].super_block;
      int child_eta = s >= 0 ? base_pi + an.pi_phase(s) : base_pi;
      if (s < 0)
        res.diagnostics.push_back("block without a super-block spawned a child");
      jobs.push_back({ch.cycle, !job.mirror, job.level + 1,
                      ch.displace_last_chords, child_eta, child_seed});
    }
  }

  res.emb.spine = spine.dump();
  require((int)res.emb.spine.size() == g.n_real, Err::Internal,
          "spine misses vertices after composition");
  std::vector<int> pos(g.n_real, -1);
  for (int i = 0; i < g.n_real; ++i) pos[res.emb.spine[i]] = i;

  // Purple edges get pages 7 to 9 at the very end, by a proper coloring of
  // their twist graph. Page 7 is preferred, then the page matching the
  // level parity; anything past page 9 is overflow.
  int p = (int)purple.size();
  std::vector<std::vector<int>> tadj(p);
  for (int i = 0; i < p; ++i) {
    const EdgeRec& a = g.edges[purple[i].e];
    for (int j = i + 1; j < p; ++j) {
      const EdgeRec& b = g.edges[purple[j].e];
      if (twist(pos, {a.u, a.v}, {b.u, b.v})) {
        tadj[i].push_back(j);
        tadj[j].push_back(i);
      }
    }
  }
  std::vector<int> order(p);
  for (int i = 0; i < p; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return tadj[a].size() > tadj[b].size();
  });
  for (int i : order) {
    std::vector<int> prefer{7, 8 + purple[i].level % 2, 9 - purple[i].level % 2};
    for (int c = 10; c < 10 + p; ++c) prefer.push_back(c);
    for (int c : prefer) {
      bool taken = false;
      for (int y : tadj[i])
        if (page[purple[y].e] == c) taken = true;
      if (taken) continue;
      page[purple[i].e] = c;
      if (c >= 10) {
        res.overflow = true;
        res.diagnostics.push_back("purple edge " + std::to_string(purple[i].e) +
                                  " spilled onto overflow page " +
                                  std::to_string(c));
      }
      break;
    }
  }

  // every original live edge must have landed somewhere
  for (EdgeId e = 0; e < m_orig; ++e) {
    if (!g.arc_alive(g.edges[e].arc0)) continue;
    if (page[e] >= 0) continue;
    res.overflow = true;
    res.diagnostics.push_back("original edge " + std::to_string(e) +
                              " was never paged; parked on overflow");
    page[e] = 10;
  }

  res.emb.page.assign(page.begin(), page.begin() + m_orig);
  std::vector<char> used(64, 0);
  for (EdgeId e = 0; e < m_orig; ++e)
    if (page[e] >= 0 && page[e] < 64) used[page[e]] = 1;
  res.emb.pages_used = (int)std::count(used.begin(), used.end(), 1);
  return res;
}

}  // namespace tenpage
