#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "tenpage/embed.hpp"
#include "tenpage/normalize.hpp"

using namespace tenpage;

namespace {

EmbedResult run(const RawDrawing& spec) {
  Normalized nz = normalize(build_drawing(spec));
  return ten_page_embed(nz.g);
}

void check_valid(const RawDrawing& spec, const EmbedResult& r, int max_pages) {
  PlaneGraph g = build_drawing(spec);
  SimpleGraph sg = original_graph(g);
  VerifyReport rep = verify(sg, r.emb);
  for (auto [pg, e1, e2] : rep.conflicts) {
    CAPTURE(pg);
    CAPTURE(e1);
    CAPTURE(e2);
    CHECK(false);
  }
  CHECK(rep.valid);
  CHECK_FALSE(r.overflow);
  CHECK(rep.pages_used <= max_pages);
}

}  // namespace

TEST_CASE("planar K4 lands on two pages") {
  EmbedResult r = run(fixtures::k4_planar());
  CHECK(r.emb.spine == std::vector<VertexId>{0, 3, 1, 2});
  CHECK(r.emb.page == std::vector<int>{0, 0, 0, 0, 2, 2});
  check_valid(fixtures::k4_planar(), r, 2);
}

TEST_CASE("octahedron lands on three pages") {
  EmbedResult r = run(fixtures::octahedron());
  CHECK(r.emb.spine == std::vector<VertexId>{0, 3, 4, 5, 1, 2});
  // outer cycle and bindings to a on 0, inner triangle on 1, forward on 2
  CHECK(r.emb.page == std::vector<int>{0, 0, 0, 0, 0, 2, 2, 2, 2, 1, 1, 1});
  check_valid(fixtures::octahedron(), r, 3);
  // root plus the one child instance
  CHECK(r.stats.size() == 2);
  CHECK(r.stats[0].level == 0);
  CHECK(r.stats[1].level == 1);
}

TEST_CASE("crossed K4 verifies within ten pages") {
  EmbedResult r = run(fixtures::k4_crossed());
  check_valid(fixtures::k4_crossed(), r, 10);
}

TEST_CASE("planar fixtures stay within five pages") {
  for (auto spec : {fixtures::k4_planar(), fixtures::square_with_ear(),
                    fixtures::octahedron(), fixtures::icosahedron()}) {
    EmbedResult r = run(spec);
    check_valid(spec, r, 5);
    for (const InstanceStats& s : r.stats) {
      CHECK(s.roles <= 6);
      CHECK(s.bgr <= 4);
      CHECK(s.purple <= 2);
    }
  }
}

TEST_CASE("degenerate inputs get the identity spine") {
  RawDrawing d;
  d.n = 2;
  d.edges.push_back({0, 1});
  d.rotations = {{0}, {0}};
  d.outer_edge = 0;
  d.outer_end = 0;
  EmbedResult r = ten_page_embed(build_drawing(d));
  CHECK(r.emb.spine == std::vector<VertexId>{0, 1});
  CHECK(r.emb.page == std::vector<int>{0});
  CHECK(r.emb.pages_used == 1);
}
