#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "tenpage/normalize.hpp"
#include "twolevel_helpers.hpp"

using namespace tenpage;

namespace {

// Octahedron plus a second copy of the edge a-d with a vertex w = 6 inside
// the resulting lens, joined to a and d. The bridge (d,w) ends up covered by
// a and must form a cluster at d.
RawDrawing octahedron_with_lens() {
  RawDrawing d = fixtures::octahedron();
  d.n = 7;
  d.edges.push_back({0, 3});  // 12: copy of ad
  d.edges.push_back({0, 6});  // 13: aw
  d.edges.push_back({3, 6});  // 14: dw
  d.rotations[0] = {0, 3, 2, 13, 12, 1};
  d.rotations[3] = {7, 12, 14, 2, 10, 9};
  d.rotations.push_back({14, 13});
  return d;
}

}  // namespace

TEST_CASE("planar K4: one elementary block") {
  RootRun r(build_drawing(fixtures::k4_planar()));
  const TwoLevelAnalysis& an = r.an;
  CHECK(an.outer == std::vector<VertexId>{0, 1, 2});
  CHECK(an.inner == std::vector<VertexId>{3});
  REQUIRE(an.trees.size() == 1);
  CHECK(an.trees[0].lambda == 3);
  CHECK(an.trees[0].alpha == 0);
  CHECK(an.trees[0].omega == 2);
  REQUIRE(an.blocks.size() == 1);
  const Block& b = an.blocks[0];
  CHECK(b.elementary);
  CHECK_FALSE(b.covered);
  CHECK(b.cycle == std::vector<VertexId>{3});
  CHECK(b.alpha == 0);
  CHECK(b.omega == 2);
  REQUIRE(an.supers.size() == 1);
  CHECK(an.supers[0].dominator == 0);
  CHECK(an.supers[0].order == std::vector<VertexId>{3});
  CHECK(an.clusters.empty());
  CHECK(an.children.empty());
  CHECK(an.diagnostics.empty());
}

TEST_CASE("octahedron: one uncovered block on the inner triangle") {
  RootRun r(build_drawing(fixtures::octahedron()));
  const TwoLevelAnalysis& an = r.an;
  REQUIRE(an.blocks.size() == 1);
  const Block& b = an.blocks[0];
  CHECK_FALSE(b.elementary);
  CHECK_FALSE(b.covered);
  CHECK_FALSE(b.is_bridge);
  CHECK(b.cycle == std::vector<VertexId>{3, 4, 5});
  CHECK(b.alpha == 0);
  CHECK(b.omega == 2);
  CHECK(b.parent == -1);
  CHECK(an.inner_edge_count == 3);
  REQUIRE(an.supers.size() == 1);
  CHECK(an.supers[0].order == std::vector<VertexId>{3, 4, 5});
  REQUIRE(an.children.size() == 1);
  CHECK(an.children[0].block == 0);
  // the child's cycle darts walk d -> e -> f counterclockwise
  CHECK(r.ctx.skel.tail(an.children[0].cycle[0]) == 3);
  CHECK(r.ctx.skel.head(an.children[0].cycle[0]) == 4);
  CHECK(r.ctx.skel.head(an.children[0].cycle[1]) == 5);
  CHECK(an.diagnostics.empty());
}

TEST_CASE("octahedron: backbone and partitions") {
  RootRun r(build_drawing(fixtures::octahedron()));
  const TwoLevelAnalysis& an = r.an;
  CHECK(an.backbone(0, 0) == std::vector<int>{0});
  CHECK_THROWS_AS((void)an.backbone(0, 1), Error);

  Partition p = an.partition_by_super(0);
  CHECK(p.vi == 0);
  CHECK(p.vk == 2);
  std::set<VertexId> h2(p.h2.begin(), p.h2.end());
  CHECK(h2 == std::set<VertexId>{1, 3, 4, 5});
  CHECK(p.l_set.empty());
  // ac joins the boundary vertices, de lies inside
  CHECK(an.well_separated(1, 9, p));
  // ab touches b, which is in H2
  CHECK_FALSE(an.well_separated(0, 9, p));
}

TEST_CASE("lens over a bridge forms a covered cluster") {
  RootRun r(build_drawing(octahedron_with_lens()));
  const TwoLevelAnalysis& an = r.an;
  REQUIRE(an.blocks.size() == 2);
  int covered = -1, open = -1;
  for (int b = 0; b < 2; ++b) (an.blocks[b].covered ? covered : open) = b;
  REQUIRE(covered >= 0);
  REQUIRE(open >= 0);
  const Block& cb = an.blocks[covered];
  CHECK(cb.is_bridge);
  CHECK(cb.alpha == 0);
  CHECK(cb.omega == 0);
  CHECK(cb.leader() == 3);
  CHECK(cb.parent == open);
  CHECK(an.blocks[open].cycle == std::vector<VertexId>{3, 4, 5});

  REQUIRE(an.clusters.size() == 1);
  CHECK(an.clusters[0].leader == 3);
  CHECK(an.clusters[0].cover == 0);
  CHECK(an.clusters[0].subtree_roots == std::vector<int>{covered});
  CHECK(an.clusters[0].order == std::vector<VertexId>{6});

  REQUIRE(an.supers.size() == 1);
  CHECK(an.supers[0].root == open);
  CHECK(an.supers[0].blocks == std::vector<int>{open, covered});
  CHECK(an.supers[0].order == std::vector<VertexId>{3, 6, 4, 5});
  CHECK(an.layout == std::vector<VertexId>{0, 3, 6, 4, 5, 1, 2});
  // bridges spawn no child instances
  REQUIRE(an.children.size() == 1);
  CHECK(an.children[0].block == open);
}

TEST_CASE("icosahedron root level") {
  Normalized nz = normalize(build_drawing(fixtures::icosahedron()));
  RootRun r(nz.g);
  const TwoLevelAnalysis& an = r.an;
  CHECK(an.outer.size() == 3);
  // level 1 holds the rest of the c ring plus the b vertices that share a
  // face with c0 or c1
  std::set<VertexId> in(an.inner.begin(), an.inner.end());
  CHECK(in == std::set<VertexId>{1, 2, 3, 8, 9, 10});
  for (const Block& b : an.blocks) {
    CHECK_FALSE(b.covered);
    CHECK(b.alpha <= b.omega);
  }
  std::set<VertexId> seen(an.layout.begin(), an.layout.end());
  CHECK(seen.size() == an.layout.size());
  CHECK(an.layout.size() == 9);
}

TEST_CASE("partition containment holds on every fixture super-block") {
  for (auto spec : {fixtures::k4_planar(), fixtures::k4_crossed(),
                    fixtures::square_with_ear(), fixtures::octahedron(),
                    fixtures::icosahedron()}) {
    Normalized nz = normalize(build_drawing(spec));
    RootRun r(nz.g);
    const TwoLevelAnalysis& an = r.an;
    for (int s = 0; s < (int)an.supers.size(); ++s) {
      Partition p = an.partition_by_super(s);
      CHECK(p.vi <= p.vk);
      int lo = an.position(an.outer[p.vi]);
      int hi = an.position(an.outer[p.vk]);
      // H2 sits strictly between the boundary vertices, and L strictly
      // before every H2 vertex (the segment reads v_i, L, H2, v_k).
      int min_h2 = hi;
      for (VertexId v : p.h2) {
        CHECK(an.position(v) > lo);
        CHECK(an.position(v) < hi);
        min_h2 = std::min(min_h2, an.position(v));
      }
      for (VertexId v : p.l_set) {
        CHECK(an.position(v) > lo);
        CHECK(an.position(v) < min_h2);
      }
      // the segment (v_i, v_k) is exactly L plus H2
      CHECK((int)(p.h2.size() + p.l_set.size()) == hi - lo - 1);
    }
  }
}
