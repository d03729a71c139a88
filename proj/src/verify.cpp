#include "tenpage/verify.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>

namespace tenpage {

bool twist(const std::vector<int>& position, std::pair<VertexId, VertexId> e1,
           std::pair<VertexId, VertexId> e2) {
  int a = position[e1.first], b = position[e1.second];
  int c = position[e2.first], d = position[e2.second];
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

namespace {

std::vector<int> positions_of(const SimpleGraph& g, const std::vector<VertexId>& spine) {
  require((int)spine.size() == g.n, Err::SpineMismatch,
          "spine length differs from the vertex count");
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < (int)spine.size(); ++i) {
    VertexId v = spine[i];
    require(v >= 0 && v < g.n && pos[v] < 0, Err::SpineMismatch,
            "spine is not a permutation of the vertices");
    pos[v] = i;
  }
  return pos;
}

// Stack-validity sweep over one page: scanning the spine left to right, an
// edge may only close when it is the innermost open one.
void sweep_page(const SimpleGraph& g, const std::vector<int>& pos, int pg,
                const std::vector<EdgeId>& es, VerifyReport& rep) {
  struct Iv {
    int l, r;
    EdgeId e;
  };
  std::vector<Iv> iv;
  iv.reserve(es.size());
  for (EdgeId e : es) {
    int a = pos[g.edges[e].first], b = pos[g.edges[e].second];
    iv.push_back({std::min(a, b), std::max(a, b), e});
  }
  std::sort(iv.begin(), iv.end(), [](const Iv& x, const Iv& y) {
    if (x.l != y.l) return x.l < y.l;
    return x.r > y.r;
  });
  std::vector<std::vector<Iv>> opens(g.n);
  std::vector<int> closes(g.n, 0);
  for (const Iv& v : iv) {
    opens[v.l].push_back(v);
    ++closes[v.r];
  }
  std::vector<Iv> stack;
  for (int p = 0; p < g.n; ++p) {
    int want = closes[p];
    while (want > 0 && !stack.empty() && stack.back().r == p) {
      stack.pop_back();
      --want;
    }
    if (want > 0) {
      // some edge ending here is buried under an edge that reaches past p
      EdgeId buried = -1;
      for (auto it = stack.rbegin(); it != stack.rend(); ++it)
        if (it->r == p) {
          buried = it->e;
          break;
        }
      rep.conflicts.push_back({pg, buried, stack.back().e});
      // drop everything ending here so the sweep can continue
      std::vector<Iv> keep;
      for (const Iv& v : stack)
        if (v.r != p) keep.push_back(v);
      stack = std::move(keep);
    }
    for (const Iv& v : opens[p]) stack.push_back(v);
  }
}

}  // namespace

VerifyReport verify(const SimpleGraph& g, const BookEmbedding& emb) {
  VerifyReport rep;
  std::vector<int> pos = positions_of(g, emb.spine);
  require(emb.page.size() == g.edges.size(), Err::SpineMismatch,
          "page list length differs from the edge count");

  std::map<int, std::vector<EdgeId>> by_page;
  for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e) {
    if (emb.page[e] < 0)
      rep.unassigned.push_back(e);
    else
      by_page[emb.page[e]].push_back(e);
  }
  rep.pages_used = (int)by_page.size();

  if (g.edges.size() <= 1000) {
    // full pairwise check with complete conflict listing
    for (const auto& [pg, es] : by_page)
      for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
          if (twist(pos, g.edges[es[i]], g.edges[es[j]]))
            rep.conflicts.push_back({pg, es[i], es[j]});
  } else {
    for (const auto& [pg, es] : by_page) sweep_page(g, pos, pg, es, rep);
  }
  rep.valid = rep.conflicts.empty() && rep.unassigned.empty();
  return rep;
}

namespace {

// Exact chromatic test on the twist graph: can the edges be put in at most
// `limit` pages? Fills `color` on success.
bool color_twists(const std::vector<std::vector<int>>& adj, int limit,
                  std::vector<int>& color) {
  int m = (int)adj.size();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return adj[a].size() > adj[b].size(); });
  color.assign(m, -1);
  int used = 0;

  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == m) return true;
    int e = order[i];
    int cap = std::min(limit, used + 1);
    for (int c = 0; c < cap; ++c) {
      bool ok = true;
      for (int o : adj[e])
        if (color[o] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[e] = c;
      int prev_used = used;
      used = std::max(used, c + 1);
      if (go(i + 1)) return true;
      used = prev_used;
      color[e] = -1;
    }
    return false;
  };
  return go(0);
}

std::vector<std::vector<int>> twist_adjacency(const SimpleGraph& g,
                                              const std::vector<int>& pos) {
  int m = (int)g.edges.size();
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (twist(pos, g.edges[i], g.edges[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  return adj;
}

}  // namespace

int pages_for_fixed_order(const SimpleGraph& g, const std::vector<VertexId>& order) {
  require(g.n <= 12, Err::TooLarge, "fixed-order page search is limited to 12 vertices");
  std::vector<int> pos = positions_of(g, order);
  auto adj = twist_adjacency(g, pos);
  if (g.edges.empty()) return 0;
  std::vector<int> color;
  for (int k = 1;; ++k)
    if (color_twists(adj, k, color)) return k;
}

OracleResult exact_book_thickness(const SimpleGraph& g) {
  require(g.n <= 8, Err::TooLarge, "oracle is limited to 8 vertices");
  OracleResult res;
  if (g.n == 0 || g.edges.empty()) {
    res.book_thickness = 0;
    res.witness.spine.resize(g.n);
    std::iota(res.witness.spine.begin(), res.witness.spine.end(), 0);
    res.witness.page.assign(g.edges.size(), -1);
    return res;
  }

  // Canonical circular orders: vertex 0 first, direction fixed by requiring
  // the successor of 0 to be smaller than its predecessor.
  std::vector<VertexId> rest(g.n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  int best = INT_MAX;
  std::vector<VertexId> spine(g.n);
  spine[0] = 0;
  do {
    if (g.n > 2 && rest.front() > rest.back()) continue;
    ++res.orders_tried;
    std::copy(rest.begin(), rest.end(), spine.begin() + 1);
    std::vector<int> pos = positions_of(g, spine);
    auto adj = twist_adjacency(g, pos);
    std::vector<int> color;
    int limit = best == INT_MAX ? (int)g.edges.size() : best - 1;
    for (int k = 1; k <= limit; ++k) {
      if (!color_twists(adj, k, color)) continue;
      best = k;
      res.witness.spine = spine;
      res.witness.page.assign(g.edges.size(), -1);
      for (int e = 0; e < (int)g.edges.size(); ++e) res.witness.page[e] = color[e];
      res.witness.pages_used = k;
      break;
    }
    if (best == 1) break;
  } while (std::next_permutation(rest.begin(), rest.end()));
  res.book_thickness = best == INT_MAX ? 0 : best;
  return res;
}

}  // namespace tenpage
