#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "polar/constructions.hpp"
#include "polar/errors.hpp"
#include "polar/symplectic.hpp"
#include "polar/twograph.hpp"

using namespace polar;

namespace {

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  Graph g(labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() & 1) g.add_edge(i, j);
  return g;
}

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

}  // namespace

TEST_CASE("associated two-graphs") {
  {
    Graph g({0, 1, 2, 3});
    CHECK(associated_two_graph(g).triple_count() == 0);
  }
  {
    Graph g({0, 1, 2});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    TwoGraph t = associated_two_graph(g);
    CHECK(t.triple_count() == 1);
    CHECK(t.member(0, 1, 2));
    CHECK(t.member(2, 0, 1));  // order-insensitive
    CHECK_THROWS_AS(t.member(0, 0, 1), std::invalid_argument);
    CHECK(t.export_triples() == "0 1 2\n");
  }
  {
    TwoGraph t = associated_two_graph(petersen());
    CHECK(t.regular_degree() == 4);
    CHECK(t.check_even_quadruples());
  }
}

TEST_CASE("materialization cap") {
  std::vector<std::uint32_t> labels(TwoGraph::max_vertices + 1);
  std::iota(labels.begin(), labels.end(), 0);
  CHECK_THROWS_AS(TwoGraph{labels}, resource_error);
}

TEST_CASE("two-graphs on nonsingular points") {
  Field f(1);
  Space s2 = Space::standard(f, 2);
  Space s3 = Space::standard(f, 3);
  {
    TwoGraph plus = symplectic_two_graph(hyperbolic_form(s2));
    CHECK(plus.triple_count() == 0);
    CHECK(plus.regular_degree() == 0);
    TwoGraph minus = symplectic_two_graph(elliptic_form(s2));
    CHECK(minus.triple_count() == 60);
    CHECK(minus.regular_degree() == 4);
  }
  CHECK(symplectic_two_graph(hyperbolic_form(s3)).regular_degree() == 10);
  CHECK(symplectic_two_graph(elliptic_form(s3)).regular_degree() == 18);

  // they are the two-graphs of the corresponding graphs
  for (const Space* s : {&s2, &s3})
    for (QuadraticForm theta : {hyperbolic_form(*s), elliptic_form(*s)}) {
      TwoGraph t = symplectic_two_graph(theta);
      CHECK(t == associated_two_graph(build_no_even(theta)));
      CHECK(t.check_even_quadruples());
    }
}

TEST_CASE("two-graph on the full space") {
  for (int m : {1, 2}) {
    TwoGraph t = full_symplectic_two_graph(m);
    CHECK(t == associated_two_graph(build_sigma(m)));
    CHECK(t.regular_degree().has_value());
    CHECK(t.check_even_quadruples());
    // every descendant has the same two-graph
    for (std::size_t w : {std::size_t(0), t.size() - 1})
      CHECK(associated_two_graph(descendant(t, w)) == t);
  }
}

TEST_CASE("descendant round trip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    TwoGraph t = associated_two_graph(random_graph(12, rng));
    for (std::size_t w = 0; w < t.size(); ++w) {
      Graph d = descendant(t, w);
      CHECK(d.degree(w) == 0);
      CHECK(associated_two_graph(d) == t);
    }
  }
  CHECK_THROWS_AS(descendant(full_symplectic_two_graph(1), 99), std::invalid_argument);
}

TEST_CASE("descendants of the nonsingular two-graphs are singular-point graphs") {
  Field f(1);
  for (int m : {2, 3}) {
    Space s = Space::standard(f, m);
    for (QuadraticForm theta : {hyperbolic_form(s), elliptic_form(s)}) {
      pvec c = theta.param().value();
      TwoGraph x = symplectic_two_graph(theta);
      std::size_t w = 0;  // descend at the first vertex
      pvec d = x.label(w);
      Graph desc = descendant(x, w);
      Graph gamma = build_gamma_o(QuadraticForm::theta(s, pvec(c ^ d)));
      REQUIRE(gamma.size() + 1 == desc.size());
      // a |-> a + d matches the two graphs, with w landing on the deleted
      // isolated zero vertex
      for (std::size_t i = 0; i < desc.size(); ++i) {
        if (i == w) continue;
        auto gi = gamma.index_of(desc.label(i) ^ d);
        REQUIRE(gi.has_value());
        for (std::size_t j = i + 1; j < desc.size(); ++j) {
          if (j == w) continue;
          auto gj = gamma.index_of(desc.label(j) ^ d);
          REQUIRE(gj.has_value());
          CHECK(desc.adjacent(i, j) == gamma.adjacent(*gi, *gj));
        }
      }
    }
  }
}

TEST_CASE("seidel switching") {
  std::mt19937_64 rng(23);
  Graph g = random_graph(20, rng);
  CHECK(seidel_switch(g, {}) == g);
  std::vector<std::size_t> all(20);
  std::iota(all.begin(), all.end(), 0);
  CHECK(seidel_switch(g, all) == g);
  std::vector<std::size_t> y = {1, 4, 7, 13};
  CHECK(seidel_switch(seidel_switch(g, y), y) == g);
  CHECK_THROWS_AS(seidel_switch(g, {99}), std::invalid_argument);

  // switching a complete bipartite graph on one part empties it
  Graph k33({0, 1, 2, 3, 4, 5});
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  CHECK(seidel_switch(k33, {0, 1, 2}).edge_count() == 0);
}

TEST_CASE("switching certificates") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 5 + rng() % 60;
    Graph g = random_graph(n, rng);
    std::vector<std::size_t> y;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() & 1) y.push_back(i);
    Graph h = seidel_switch(g, y);
    CHECK(associated_two_graph(h) == associated_two_graph(g));
    auto cert = switching_equivalence(g, h);
    REQUIRE(cert.has_value());
    CHECK(seidel_switch(g, *cert) == h);
    // the certificate is the chosen set or its complement
    std::vector<bool> want(n, false), got(n, false);
    for (std::size_t i : y) want[i] = true;
    for (std::size_t i : *cert) got[i] = true;
    bool same = want == got;
    bool complement = true;
    for (std::size_t i = 0; i < n; ++i) complement = complement && want[i] != got[i];
    CHECK((same || complement));
  }
  // graphs with different two-graphs have no certificate
  Graph a({0, 1, 2, 3});
  Graph b = a;
  b.add_edge(0, 1);
  b.add_edge(2, 3);
  b.add_edge(0, 2);
  CHECK(!switching_equivalence(a, b).has_value());
}

TEST_CASE("switching between the even and odd families") {
  Field f4(2);
  Space s = Space::standard(f4, 1);
  {
    // hyperbolic: complete bipartite versus edgeless
    SwitchingSets sets = compute_switching_sets(hyperbolic_form(s));
    CHECK(sets.a.size() == 3);
    CHECK(sets.b.size() == 3);
  }
  {
    // elliptic: the ten-vertex pair; each set induces a 2-regular 5-cycle
    QuadraticForm theta = elliptic_form(s);
    SwitchingSets sets = compute_switching_sets(theta);
    CHECK(sets.a.size() == 5);
    Graph g_even = build_no_even(trace_lift(theta));
    CHECK(srg_params(g_even).params == SrgParams{10, 3, 0, 1});
    Graph g_odd = build_no_odd(theta);
    auto cert = switching_equivalence(g_even, g_odd);
    REQUIRE(cert.has_value());
    CHECK(cert->size() == 5);
    for (std::size_t i : *cert) {
      std::size_t deg = 0;
      for (std::size_t j : *cert)
        if (i != j && g_even.adjacent(i, j)) ++deg;
      CHECK(deg == 2);
    }
  }
  {
    // the next rank: sets of size 60 inducing 27-regular subgraphs
    Space s2 = Space::standard(f4, 2);
    SwitchingSets sets = compute_switching_sets(hyperbolic_form(s2));
    CHECK(sets.a.size() == 60);
    Graph g_even = build_no_even(trace_lift(hyperbolic_form(s2)));
    std::size_t deg = 0;
    for (std::size_t j : sets.a)
      if (sets.a.front() != j && g_even.adjacent(sets.a.front(), j)) ++deg;
    CHECK(deg == 27);
  }
}

TEST_CASE("form stabilizer preserves the triples") {
  Field f(1);
  Space s = Space::standard(f, 2);
  QuadraticForm ell = elliptic_form(s);
  TwoGraph x = symplectic_two_graph(ell);
  auto group = generate_group(all_transvections(s), 10000);
  auto actions = form_actions(group);
  for (std::size_t idx : stabilizer_of_form(ell.param().value(), actions)) {
    const SympMatrix& mtx = group[idx];
    std::vector<std::size_t> phi(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      pvec image = mtx.apply(x.label(i));
      auto it = std::find(x.labels().begin(), x.labels().end(), image);
      REQUIRE(it != x.labels().end());
      phi[i] = std::size_t(it - x.labels().begin());
    }
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        for (std::size_t k = j + 1; k < x.size(); ++k)
          CHECK(x.member(i, j, k) == x.member(phi[i], phi[j], phi[k]));
  }
}
