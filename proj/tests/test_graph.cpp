#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "polar/graph.hpp"

using namespace polar;

namespace {

Graph petersen() {
  std::vector<std::uint32_t> labels(10);
  std::iota(labels.begin(), labels.end(), 0);
  Graph g(labels);
  const std::pair<int, int> edges[] = {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6},
                                       {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
                                       {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

Graph k33() {
  std::vector<std::uint32_t> labels(6);
  std::iota(labels.begin(), labels.end(), 0);
  Graph g(labels);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("basic graph operations") {
  Graph g({7, 9, 13});
  CHECK(g.size() == 3);
  CHECK(g.index_of(9) == 1);
  CHECK(!g.index_of(8).has_value());
  CHECK_THROWS_AS(Graph({1, 1}), std::invalid_argument);

  g.add_edge(0, 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.degree(0) == 1);
  CHECK(g.edge_count() == 1);
  CHECK(g.symmetric());
  g.toggle_edge(0, 1);
  CHECK(!g.adjacent(0, 1));
  CHECK(g.edge_count() == 0);
}

TEST_CASE("strongly regular parameter extraction") {
  {
    SrgResult r = srg_params(petersen());
    CHECK(r.verdict == SrgVerdict::srg);
    CHECK(r.params == SrgParams{10, 3, 0, 1});
    CHECK(r.params.feasible());
    CHECK(r.params.str() == "(10,3,0,1)");
  }
  {
    SrgResult r = srg_params(k33());
    CHECK(r.verdict == SrgVerdict::srg);
    CHECK(r.params == SrgParams{6, 3, 0, 3});
  }
  {
    std::vector<std::uint32_t> labels(6);
    std::iota(labels.begin(), labels.end(), 0);
    SrgResult r = srg_params(Graph(labels));
    CHECK(r.verdict == SrgVerdict::degenerate);
    CHECK(r.params.v == 6);
    CHECK(r.params.k == 0);
    CHECK(!r.params.lambda.has_value());
    CHECK(r.params.str() == "(6,0,-,0)");
  }
  {
    // path on 3 vertices: regular fails
    Graph g({0, 1, 2});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(srg_params(g).verdict == SrgVerdict::not_regular);
  }
  {
    // 6-cycle: regular but mu is not constant
    std::vector<std::uint32_t> labels(6);
    std::iota(labels.begin(), labels.end(), 0);
    Graph g(labels);
    for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
    CHECK(srg_params(g).verdict == SrgVerdict::not_srg);
  }
}

TEST_CASE("closed-form family parameters") {
  CHECK(expected_params(Family::no_even, 3, 2, 1) == SrgParams{28, 15, 6, 10});
  CHECK(expected_params(Family::no_even, 2, 2, -1) == SrgParams{10, 3, 0, 1});
  CHECK(expected_params(Family::no_odd, 2, 4, 1) == SrgParams{136, 75, 42, 40});
  CHECK(expected_params(Family::no_odd, 2, 4, -1) == SrgParams{120, 51, 18, 24});
  CHECK(expected_params(Family::gamma_o, 3, 2, -1) == SrgParams{27, 10, 1, 5});
  // complete-graph degenerations leave mu/lambda partially closed
  SrgParams odd2 = expected_params(Family::no_odd, 2, 2, 1);
  CHECK(odd2.v == odd2.k + 1);
  CHECK(!odd2.mu.has_value());
}

TEST_CASE("graph6 encoding") {
  {
    Graph g({0, 1});
    g.add_edge(0, 1);
    CHECK(graph6_encode(g) == "A_");
  }
  {
    Graph g({0, 1});
    CHECK(graph6_encode(g) == "A?");
  }
  {
    Graph g({0, 1, 2});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(graph6_encode(g) == "Bg");
  }
  CHECK(graph6_decode("A_").edge_count() == 1);
  CHECK(graph6_decode("Bg").degree(1) == 2);
  CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
  CHECK_THROWS_AS(graph6_decode("A"), std::invalid_argument);

  // round trips, including the long header used above 62 vertices
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 10u, 62u, 63u, 100u}) {
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    Graph g(labels);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() & 1) g.add_edge(i, j);
    Graph back = graph6_decode(graph6_encode(g));
    REQUIRE(back.size() == n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(back.adjacent(i, j) == g.adjacent(i, j));
  }
  CHECK(graph6_encode(graph6_decode("A?")) == "A?");
}

TEST_CASE("isomorphism map checking") {
  Graph p = petersen();
  std::vector<std::size_t> id(10);
  std::iota(id.begin(), id.end(), 0);
  CHECK(check_iso_map(p, p, id));
  std::swap(id[0], id[1]);  // 0<->1 is not an automorphism of this labeling
  CHECK(!check_iso_map(p, p, id));
  // the outer 5-cycle rotation extends to an automorphism
  std::vector<std::size_t> rot = {1, 2, 3, 4, 0, 6, 7, 8, 9, 5};
  CHECK(check_iso_map(p, p, rot));

  std::vector<std::uint32_t> labels(6);
  std::iota(labels.begin(), labels.end(), 0);
  Graph cyc(labels);
  for (int i = 0; i < 6; ++i) cyc.add_edge(i, (i + 1) % 6);
  CHECK(!check_iso_map(k33(), cyc, std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  CHECK_THROWS_AS(check_iso_map(p, k33(), std::vector<std::size_t>{0, 1, 2, 3, 4, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_iso_map(k33(), cyc, std::vector<std::size_t>{0, 0, 2, 3, 4, 5}),
                  std::invalid_argument);
}

TEST_CASE("feasibility identity") {
  CHECK(SrgParams{10, 3, 0, 1}.feasible());
  CHECK(!SrgParams{10, 3, 0, 2}.feasible());
  CHECK(SrgParams{28, 15, 6, 10}.feasible());
  CHECK(SrgParams{6, 0, std::nullopt, 0}.feasible());  // vacuous without lambda
}
