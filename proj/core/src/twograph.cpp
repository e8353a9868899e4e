#include "polar/twograph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "polar/constructions.hpp"
#include "polar/errors.hpp"

namespace polar {

TwoGraph::TwoGraph(std::vector<std::uint32_t> labels) : labels_(std::move(labels)) {
  const std::uint64_t v = labels_.size();
  if (v > max_vertices)
    throw resource_error("two-graph too large to materialize; use the switching certificate");
  std::uint64_t triples = v * (v - 1) / 2 * (v >= 3 ? v - 2 : 0) / 3;
  bits_.assign((triples + 63) / 64, 0);
}

std::uint64_t TwoGraph::rank(std::size_t i, std::size_t j, std::size_t k) const {
  if (i > j) std::swap(i, j);
  if (j > k) std::swap(j, k);
  if (i > j) std::swap(i, j);
  if (i == j || j == k) throw std::invalid_argument("triple indices must be distinct");
  if (k >= size()) throw std::invalid_argument("triple index out of range");
  std::uint64_t kk = k, jj = j;
  return kk * (kk - 1) * (kk - 2) / 6 + jj * (jj - 1) / 2 + i;
}

bool TwoGraph::member(std::size_t i, std::size_t j, std::size_t k) const {
  std::uint64_t r = rank(i, j, k);
  return (bits_[r / 64] >> (r % 64)) & 1;
}

void TwoGraph::add(std::size_t i, std::size_t j, std::size_t k) {
  std::uint64_t r = rank(i, j, k);
  bits_[r / 64] |= std::uint64_t(1) << (r % 64);
}

std::uint64_t TwoGraph::triple_count() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : bits_) n += std::uint64_t(__builtin_popcountll(w));
  return n;
}

std::optional<std::uint64_t> TwoGraph::regular_degree() const {
  const std::size_t v = size();
  if (v < 2) throw std::invalid_argument("regularity needs at least two vertices");
  std::vector<std::uint64_t> pair_count(v * v, 0);
  for (std::size_t k = 2; k < v; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (member(i, j, k)) {
          ++pair_count[i * v + j];
          ++pair_count[i * v + k];
          ++pair_count[j * v + k];
        }
  std::uint64_t d = pair_count[0 * v + 1];
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      if (pair_count[i * v + j] != d) return std::nullopt;
  return d;
}

bool TwoGraph::check_even_quadruples(std::uint64_t samples, std::uint64_t seed) const {
  const std::size_t v = size();
  if (v < 4) return true;
  auto quad_ok = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    int n = int(member(a, b, c)) + int(member(a, b, d)) + int(member(a, c, d)) +
            int(member(b, c, d));
    return n % 2 == 0;
  };
  if (v <= 64) {
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b)
        for (std::size_t c = b + 1; c < v; ++c)
          for (std::size_t d = c + 1; d < v; ++d)
            if (!quad_ok(a, b, c, d)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, v - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::size_t q[4];
    for (int t = 0; t < 4;) {
      std::size_t x = pick(rng);
      bool dup = false;
      for (int u = 0; u < t; ++u) dup = dup || q[u] == x;
      if (!dup) q[t++] = x;
    }
    if (!quad_ok(q[0], q[1], q[2], q[3])) return false;
  }
  return true;
}

std::string TwoGraph::export_triples() const {
  std::string out;
  for (std::size_t k = 2; k < size(); ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (member(i, j, k)) {
          out += std::to_string(labels_[i]) + " " + std::to_string(labels_[j]) + " " +
                 std::to_string(labels_[k]) + "\n";
        }
  return out;
}

TwoGraph associated_two_graph(const Graph& g) {
  TwoGraph t(g.labels());
  const std::size_t v = g.size();
  for (std::size_t k = 2; k < v; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        int edges = int(g.adjacent(i, j)) + int(g.adjacent(i, k)) + int(g.adjacent(j, k));
        if (edges % 2 == 1) t.add(i, j, k);
      }
  return t;
}

Graph descendant(const TwoGraph& t, std::size_t w) {
  if (w >= t.size()) throw std::invalid_argument("descendant vertex out of range");
  Graph g(t.labels());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (i == w || j == w) continue;
      if (t.member(i, j, w)) g.add_edge(i, j);
    }
  return g;
}

Graph seidel_switch(const Graph& g, const std::vector<std::size_t>& y) {
  std::vector<bool> in_y(g.size(), false);
  for (std::size_t i : y) {
    if (i >= g.size()) throw std::invalid_argument("switching set contains unknown vertex");
    in_y[i] = true;
  }
  Graph out = g;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!in_y[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!in_y[j]) out.toggle_edge(i, j);
  }
  return out;
}

std::optional<std::vector<std::size_t>> switching_equivalence(const Graph& g1, const Graph& g2) {
  if (g1.labels() != g2.labels())
    throw std::invalid_argument("switching equivalence requires identical labeled vertex sets");
  const std::size_t v = g1.size();
  const std::size_t words = g1.row_words();
  if (v == 0) return std::vector<std::size_t>{};

  // H = symmetric difference of the edge sets
  std::vector<std::uint64_t> h(v * words);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t w = 0; w < words; ++w) h[i * words + w] = g1.row(i)[w] ^ g2.row(i)[w];

  // candidate Y: vertices H-non-adjacent to vertex 0, plus 0 itself
  std::vector<std::uint64_t> y_mask(words, 0), comp_mask(words, 0);
  std::vector<std::size_t> y;
  for (std::size_t u = 0; u < v; ++u) {
    bool adj0 = (h[0 * words + u / 64] >> (u % 64)) & 1;
    if (u == 0 || !adj0) {
      y.push_back(u);
      y_mask[u / 64] |= std::uint64_t(1) << (u % 64);
    } else {
      comp_mask[u / 64] |= std::uint64_t(1) << (u % 64);
    }
  }
  bool ok = true;
  for (std::size_t u = 0; u < v && ok; ++u) {
    bool in_y = (y_mask[u / 64] >> (u % 64)) & 1;
    const std::uint64_t* want = in_y ? comp_mask.data() : y_mask.data();
    for (std::size_t w = 0; w < words && ok; ++w) ok = h[u * words + w] == want[w];
  }

  // cross-check against the two-graph characterization at desk scale
  if (v <= 200) {
    bool same = associated_two_graph(g1) == associated_two_graph(g2);
    if (same != ok) throw std::logic_error("switching certificate disagrees with two-graph equality");
  }
  if (!ok) return std::nullopt;
  if (!(seidel_switch(g1, y) == g2))
    throw std::logic_error("certificate switching set failed to map g1 to g2");
  return y;
}

TwoGraph symplectic_two_graph(const QuadraticForm& theta) {
  const Space& s = theta.space();
  if (s.field().order() != 2) throw std::invalid_argument("symplectic two-graphs live over GF(2)");
  theta.type();  // rejects degenerate forms
  auto table = theta.value_table();
  std::vector<std::uint32_t> labels;
  for (std::uint64_t a = 0; a < table.size(); ++a)
    if (table[a] == 1) labels.push_back(std::uint32_t(a));
  TwoGraph t(labels);
  auto pairing = [&](std::uint32_t x, std::uint32_t y) {
    return felem(table[x ^ y] ^ table[x] ^ table[y]);
  };
  const std::size_t v = labels.size();
  for (std::size_t k = 2; k < v; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if ((pairing(labels[i], labels[j]) ^ pairing(labels[i], labels[k]) ^
             pairing(labels[j], labels[k])) == 0)
          t.add(i, j, k);
  return t;
}

TwoGraph full_symplectic_two_graph(int m) {
  Field f(1);
  Space s = Space::standard(f, m);
  auto table = QuadraticForm::theta0(s).value_table();
  std::vector<std::uint32_t> labels(s.point_count());
  for (std::size_t a = 0; a < labels.size(); ++a) labels[a] = std::uint32_t(a);
  TwoGraph t(labels);
  auto pairing = [&](std::uint32_t x, std::uint32_t y) {
    return felem(table[x ^ y] ^ table[x] ^ table[y]);
  };
  const std::size_t v = labels.size();
  for (std::size_t k = 2; k < v; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if ((pairing(labels[i], labels[j]) ^ pairing(labels[i], labels[k]) ^
             pairing(labels[j], labels[k])) == 0)
          t.add(i, j, k);
  return t;
}

SwitchingSets compute_switching_sets(const QuadraticForm& theta_gf4) {
  const Space& s = theta_gf4.space();
  if (s.field().order() != 4) throw std::invalid_argument("switching sets need a GF(4) form");
  const felem omega = 2;  // root of x^2+x+1 in the polynomial basis
  int sign = theta_gf4.type();
  const int mm = s.dim() / 2;

  Graph g_even = build_no_even(trace_lift(theta_gf4));
  Graph g_odd = build_no_odd(theta_gf4);
  if (g_even.labels() != g_odd.labels())
    throw std::logic_error("the graph pair does not share its vertex labels");

  auto table = theta_gf4.value_table();
  SwitchingSets sets;
  for (std::size_t i = 0; i < g_even.size(); ++i) {
    felem val = table[g_even.label(i)];
    if (val == omega) sets.a.push_back(i);
    else if (val == felem(omega ^ 1)) sets.b.push_back(i);
    else throw std::logic_error("vertex value outside the trace-one fiber");
  }

  auto p2 = [](int e) { return std::int64_t(1) << e; };
  std::int64_t want_size = p2(4 * mm - 2) - sign * p2(2 * mm - 2);
  std::int64_t want_deg = p2(4 * mm - 3) - sign * p2(2 * mm - 2) - 1;
  if (std::int64_t(sets.a.size()) != want_size || std::int64_t(sets.b.size()) != want_size)
    throw std::logic_error("switching set sizes do not match the formula");

  // d = k - mu in both parameter sets
  SrgParams even = expected_params(Family::no_even, 2 * mm, 2, sign);
  SrgParams odd = expected_params(Family::no_odd, mm, 4, -sign);
  if (even.k - even.mu.value() != want_deg || odd.k - odd.mu.value() != want_deg)
    throw std::logic_error("switching degree disagrees with k - mu");

  for (const Graph* g : {&g_even, &g_odd})
    for (const auto* set : {&sets.a, &sets.b}) {
      std::vector<bool> in(g->size(), false);
      for (std::size_t i : *set) in[i] = true;
      for (std::size_t i : *set) {
        std::int64_t d = 0;
        for (std::size_t j : *set)
          if (i != j && g->adjacent(i, j)) ++d;
        if (d != want_deg) throw std::logic_error("switching set is not regular of the stated degree");
      }
    }

  if (!(seidel_switch(g_even, sets.a) == g_odd))
    throw std::logic_error("switching by A does not map the even graph to the odd graph");
  return sets;
}

}  // namespace polar
