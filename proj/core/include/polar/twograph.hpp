#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polar/forms.hpp"
#include "polar/graph.hpp"

namespace polar {

/// Triple system on a labeled vertex set satisfying the even-quadruple
/// axiom. Membership bits are indexed by the combinatorial rank of the
/// ordered triple i<j<k. Materialization is capped (see max_vertices).
class TwoGraph {
public:
  static constexpr std::size_t max_vertices = 300;

  explicit TwoGraph(std::vector<std::uint32_t> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::uint32_t>& labels() const { return labels_; }
  std::uint32_t label(std::size_t i) const { return labels_[i]; }

  bool member(std::size_t i, std::size_t j, std::size_t k) const;
  void add(std::size_t i, std::size_t j, std::size_t k);

  std::uint64_t triple_count() const;

  /// Number of triples through every pair, if constant.
  std::optional<std::uint64_t> regular_degree() const;

  /// Even-quadruple axiom; exhaustive for v <= 64, sampled above.
  bool check_even_quadruples(std::uint64_t samples = 100000, std::uint64_t seed = 1) const;

  /// Sorted label triples, one per line, for cross-tool comparison.
  std::string export_triples() const;

  bool operator==(const TwoGraph& o) const {
    return labels_ == o.labels_ && bits_ == o.bits_;
  }

private:
  std::uint64_t rank(std::size_t i, std::size_t j, std::size_t k) const;

  std::vector<std::uint32_t> labels_;
  std::vector<std::uint64_t> bits_;
};

/// Triples inducing an odd number of edges.
TwoGraph associated_two_graph(const Graph& g);

/// Fix w; join u,v iff {u,v,w} is a triple. w ends up isolated.
Graph descendant(const TwoGraph& t, std::size_t w);

/// Complement all edges between Y and its complement.
Graph seidel_switch(const Graph& g, const std::vector<std::size_t>& y);

/// Switching set Y with seidel_switch(g1, Y) == g2, or nullopt. The two
/// graphs must carry identical label sequences. O(v^2/w) row comparison;
/// cross-checked against two-graph equality for v <= 200.
std::optional<std::vector<std::size_t>> switching_equivalence(const Graph& g1, const Graph& g2);

/// X^eps_{2m}: vertices {theta=1}, triples with
/// <a,b>+<a,c>+<b,c> = 0. theta over GF(2).
TwoGraph symplectic_two_graph(const QuadraticForm& theta);

/// T_{2m} on all of F_2^{2m}.
TwoGraph full_symplectic_two_graph(int m);

/// The switching sets between NO^eps(4m,2) and NO^-eps(2m+1,4), as fibers
/// of a GF(4)-form over the two roots of x^2+x+1. Indices refer to the
/// shared ascending-label vertex order; verified against both graphs.
struct SwitchingSets {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};
SwitchingSets compute_switching_sets(const QuadraticForm& theta_gf4);

}  // namespace polar
