#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "tenpage/verify.hpp"

using namespace tenpage;

namespace {

SimpleGraph complete(int n) {
  SimpleGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j});
  return g;
}

SimpleGraph cycle(int n) {
  SimpleGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n});
  return g;
}

std::vector<VertexId> identity(int n) {
  std::vector<VertexId> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

}  // namespace

TEST_CASE("twist is strict interleaving") {
  std::vector<int> pos = {0, 1, 2, 3};
  CHECK(twist(pos, {0, 2}, {1, 3}));
  CHECK(twist(pos, {1, 3}, {0, 2}));
  // nesting and disjoint spans do not twist
  CHECK_FALSE(twist(pos, {0, 3}, {1, 2}));
  CHECK_FALSE(twist(pos, {0, 1}, {2, 3}));
  // a shared endpoint never twists
  CHECK_FALSE(twist(pos, {0, 2}, {2, 3}));
  CHECK_FALSE(twist(pos, {0, 2}, {0, 3}));
  // positions, not labels, decide
  std::vector<int> swapped = {0, 2, 1, 3};
  CHECK_FALSE(twist(swapped, {0, 2}, {1, 3}));
}

TEST_CASE("verify accepts a two-page K4 and reports a planted conflict") {
  SimpleGraph k4 = complete(4);
  // edges: 0 ab, 1 ac, 2 ad, 3 bc, 4 bd, 5 cd
  BookEmbedding emb;
  emb.spine = {0, 1, 2, 3};
  emb.page = {0, 1, 0, 0, 0, 0};  // only ac and bd twist; separate them
  VerifyReport rep = verify(k4, emb);
  CHECK(rep.valid);
  CHECK(rep.pages_used == 2);
  CHECK(rep.conflicts.empty());

  emb.page[1] = 0;  // put ac back with bd
  rep = verify(k4, emb);
  CHECK_FALSE(rep.valid);
  REQUIRE(rep.conflicts.size() == 1);
  auto [pg, e1, e2] = rep.conflicts[0];
  CHECK(pg == 0);
  CHECK(std::min(e1, e2) == 1);
  CHECK(std::max(e1, e2) == 4);
}

TEST_CASE("verify flags unassigned edges") {
  SimpleGraph c3 = cycle(3);
  BookEmbedding emb;
  emb.spine = {0, 1, 2};
  emb.page = {0, -1, 0};
  VerifyReport rep = verify(c3, emb);
  CHECK_FALSE(rep.valid);
  CHECK(rep.unassigned == std::vector<EdgeId>{1});
  CHECK(rep.conflicts.empty());
}

TEST_CASE("verify rejects a broken spine") {
  SimpleGraph c3 = cycle(3);
  BookEmbedding emb;
  emb.spine = {0, 1, 1};
  emb.page = {0, 0, 0};
  CHECK_THROWS_AS((void)verify(c3, emb), Error);
  emb.spine = {0, 1};
  CHECK_THROWS_AS((void)verify(c3, emb), Error);
}

TEST_CASE("large instances take the sweep path") {
  // a long cycle plus all chords from vertex 0: outerplanar, one page
  SimpleGraph g;
  g.n = 600;
  for (int i = 0; i < g.n; ++i) g.edges.push_back({i, (i + 1) % g.n});
  for (int i = 2; i < g.n - 1; ++i) g.edges.push_back({0, i});
  REQUIRE(g.edges.size() > 1000);
  BookEmbedding emb;
  emb.spine = identity(g.n);
  emb.page.assign(g.edges.size(), 0);
  VerifyReport rep = verify(g, emb);
  CHECK(rep.valid);
  CHECK(rep.pages_used == 1);

  // plant one twist: chord (1, 300) against chord (0, 150)
  g.edges.push_back({1, 300});
  emb.page.push_back(0);
  rep = verify(g, emb);
  CHECK_FALSE(rep.valid);
  CHECK_FALSE(rep.conflicts.empty());
}

TEST_CASE("page search for a fixed spine order") {
  CHECK(pages_for_fixed_order(cycle(4), identity(4)) == 1);
  CHECK(pages_for_fixed_order(complete(4), identity(4)) == 2);
  CHECK(pages_for_fixed_order(complete(6), identity(6)) == 3);
  // the same K4 needs 2 pages on every order, so permuting cannot help
  CHECK(pages_for_fixed_order(complete(4), {2, 0, 3, 1}) == 2);
  SimpleGraph big;
  big.n = 13;
  CHECK_THROWS_AS((void)pages_for_fixed_order(big, identity(13)), Error);
}

TEST_CASE("exact book thickness on small calibration graphs") {
  CHECK(exact_book_thickness(cycle(6)).book_thickness == 1);
  CHECK(exact_book_thickness(complete(5)).book_thickness == 3);
  CHECK(exact_book_thickness(complete(6)).book_thickness == 3);
  CHECK(exact_book_thickness(complete(7)).book_thickness == 4);

  OracleResult r = exact_book_thickness(complete(6));
  CHECK(r.witness.pages_used == 3);
  VerifyReport rep = verify(complete(6), r.witness);
  CHECK(rep.valid);
  CHECK(rep.pages_used == 3);

  SimpleGraph big = complete(9);
  CHECK_THROWS_AS((void)exact_book_thickness(big), Error);

  SimpleGraph empty;
  empty.n = 3;
  CHECK(exact_book_thickness(empty).book_thickness == 0);
}
