#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polar {

/// Finite graph with packed-bit adjacency rows. Vertex labels are packed
/// coordinate vectors (or opaque ids); label order fixes the vertex
/// indexing used by all exports.
class Graph {
public:
  explicit Graph(std::vector<std::uint32_t> labels);

  std::size_t size() const { return labels_.size(); }
  std::uint32_t label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::uint32_t label) const;

  void add_edge(std::size_t i, std::size_t j);
  void toggle_edge(std::size_t i, std::size_t j);
  bool adjacent(std::size_t i, std::size_t j) const;

  std::size_t degree(std::size_t i) const;
  std::size_t common_neighbors(std::size_t i, std::size_t j) const;
  std::size_t edge_count() const;

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::size_t row_words() const { return words_; }

  /// adj[i] bit j == adj[j] bit i for all pairs, empty diagonal.
  bool symmetric() const;

  bool operator==(const Graph& o) const {
    return labels_ == o.labels_ && bits_ == o.bits_;
  }

private:
  std::vector<std::uint32_t> labels_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

enum class SrgVerdict { srg, not_regular, not_srg, degenerate };

struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> mu;

  /// k(k-lambda-1) == (v-k-1) mu, when all parameters are defined.
  bool feasible() const;
  std::string str() const;
  bool operator==(const SrgParams&) const = default;
};

struct SrgResult {
  SrgVerdict verdict = SrgVerdict::srg;
  SrgParams params;
};

/// Exhaustive regularity and common-neighbor check via bit-row popcounts.
SrgResult srg_params(const Graph& g);

enum class Family { no_even, no_odd, gamma_o };

/// Closed-form parameters of the three families; lambda/mu are left unset
/// where the formulas degenerate (small m).
SrgParams expected_params(Family f, int m, int q, int sign);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

/// Edge-and-nonedge preservation of an explicit vertex bijection
/// phi: index in g1 -> index in g2.
bool check_iso_map(const Graph& g1, const Graph& g2, std::span<const std::size_t> phi);

}  // namespace polar
