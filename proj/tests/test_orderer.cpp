#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "tenpage/normalize.hpp"
#include "twolevel_helpers.hpp"

using namespace tenpage;

TEST_CASE("planar K4 orders a, x, b, c") {
  RootRun r(build_drawing(fixtures::k4_planar()));
  const TwoLevelAnalysis& an = r.an;
  CHECK(an.layout == std::vector<VertexId>{0, 3, 1, 2});
  // outer triangle on eta
  for (EdgeId e : {0, 1, 3}) CHECK(r.assign(e)->role == PageRole::eta);
  // ax runs backward (a before x): eta; bx and cx run forward: opposite phase
  CHECK(r.assign(2)->role == PageRole::eta);
  CHECK(r.assign(4)->role == PageRole::pibar);
  CHECK(r.assign(5)->role == PageRole::pibar);
  CHECK(an.roles_used() == 2);
  CHECK(an.bgr_roles_used() == 2);
  CHECK(an.purple_roles_used() == 0);
}

TEST_CASE("octahedron orders a, d, e, f, b, c") {
  RootRun r(build_drawing(fixtures::octahedron()));
  const TwoLevelAnalysis& an = r.an;
  CHECK(an.layout == std::vector<VertexId>{0, 3, 4, 5, 1, 2});

  // exactly six binding edges: ad, af, be, bf, cd, ce
  int bindings = 0;
  for (const EdgeAssign& a : an.assigns) {
    const EdgeRec& rec = r.ctx.skel.edges[a.e];
    bool uo = an.outer_index(rec.u) >= 0, vo = an.outer_index(rec.v) >= 0;
    if (uo != vo) ++bindings;
  }
  CHECK(bindings == 6);

  // backward bindings (to a) share eta with the outer cycle
  for (EdgeId e : {0, 1, 4}) CHECK(r.assign(e)->role == PageRole::eta);
  CHECK(r.assign(2)->role == PageRole::eta);   // ad
  CHECK(r.assign(3)->role == PageRole::eta);   // af
  // forward bindings take the opposite phase of the block's page
  for (EdgeId e : {5, 6, 7, 8}) CHECK(r.assign(e)->role == PageRole::pibar);
  // the inner triangle lies on the block's own page
  for (EdgeId e : {9, 10, 11}) {
    CHECK(r.assign(e)->role == PageRole::pi);
    CHECK(r.assign(e)->super_block == 0);
  }
  CHECK(an.roles_used() == 3);
  CHECK(an.bgr_roles_used() == 3);
  CHECK(an.diagnostics.empty());
}

TEST_CASE("crossed square: the crossing splits green and red") {
  Normalized nz = normalize(build_drawing(fixtures::k4_crossed()));
  RootRun r(nz.g);
  const TwoLevelAnalysis& an = r.an;
  // every live edge of the drawing is paged by this single instance or is a
  // crossed pair handled as one of the coloring cases
  REQUIRE(an.crossings.size() == 1);
  const EdgeAssign* a4 = r.assign(4);
  const EdgeAssign* a5 = r.assign(5);
  REQUIRE(a4 != nullptr);
  REQUIRE(a5 != nullptr);
  std::set<EdgeColor> colors{a4->color, a5->color};
  CHECK(colors.count(EdgeColor::green) == 1);
  CHECK((colors.count(EdgeColor::red) == 1 || colors.size() == 1));
  CHECK(an.roles_used() <= 6);
  for (const EdgeAssign& a : an.assigns) CHECK(a.role != PageRole::none);
}

TEST_CASE("every fixture instance assigns a role to every owned edge") {
  for (auto spec : {fixtures::k4_planar(), fixtures::k4_crossed(),
                    fixtures::square_with_ear(), fixtures::octahedron(),
                    fixtures::icosahedron()}) {
    Normalized nz = normalize(build_drawing(spec));
    RootRun r(nz.g);
    const TwoLevelAnalysis& an = r.an;
    CHECK(an.roles_used() <= 6);
    CHECK(an.bgr_roles_used() <= 4);
    CHECK(an.purple_roles_used() <= 2);
    for (const EdgeAssign& a : an.assigns) {
      CHECK(a.role != PageRole::none);
      if (a.role == PageRole::pi || a.role == PageRole::pibar)
        if (a.super_block >= 0) CHECK(a.super_block < (int)an.supers.size());
    }
    // layout is a permutation of both levels
    std::set<VertexId> seen(an.layout.begin(), an.layout.end());
    CHECK(seen.size() == an.layout.size());
    CHECK(an.layout.size() == an.outer.size() + an.inner.size());
  }
}
