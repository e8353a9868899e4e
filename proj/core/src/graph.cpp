#include "polar/graph.hpp"

#include <bit>
#include <stdexcept>

namespace polar {

Graph::Graph(std::vector<std::uint32_t> labels) : labels_(std::move(labels)) {
  words_ = (labels_.size() + 63) / 64;
  bits_.assign(labels_.size() * words_, 0);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!index_.emplace(labels_[i], i).second)
      throw std::invalid_argument("duplicate vertex label");
}

std::optional<std::size_t> Graph::index_of(std::uint32_t label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("no loops");
  bits_[i * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
  bits_[j * words_ + i / 64] |= std::uint64_t(1) << (i % 64);
}

void Graph::toggle_edge(std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("no loops");
  bits_[i * words_ + j / 64] ^= std::uint64_t(1) << (j % 64);
  bits_[j * words_ + i / 64] ^= std::uint64_t(1) << (i % 64);
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
  return (bits_[i * words_ + j / 64] >> (j % 64)) & 1;
}

std::size_t Graph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[i * words_ + w]);
  return d;
}

std::size_t Graph::common_neighbors(std::size_t i, std::size_t j) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w)
    c += std::popcount(bits_[i * words_ + w] & bits_[j * words_ + w]);
  return c;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < size(); ++i) total += degree(i);
  return total / 2;
}

bool Graph::symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (adjacent(i, i)) return false;
    for (std::size_t j = i + 1; j < size(); ++j)
      if (adjacent(i, j) != adjacent(j, i)) return false;
  }
  return true;
}

bool SrgParams::feasible() const {
  if (!lambda || !mu) return true;
  return k * (k - *lambda - 1) == (v - k - 1) * *mu;
}

std::string SrgParams::str() const {
  auto opt = [](const std::optional<std::int64_t>& x) {
    return x ? std::to_string(*x) : std::string("-");
  };
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," + opt(lambda) + "," + opt(mu) + ")";
}

SrgResult srg_params(const Graph& g) {
  if (g.size() < 2) throw std::invalid_argument("srg check needs at least two vertices");
  const std::size_t v = g.size();
  std::size_t k = g.degree(0);
  for (std::size_t i = 1; i < v; ++i)
    if (g.degree(i) != k) return {SrgVerdict::not_regular, {std::int64_t(v), 0, {}, {}}};

  std::optional<std::int64_t> lambda, mu;
  bool lambda_bad = false, mu_bad = false;
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) {
      std::int64_t c = std::int64_t(g.common_neighbors(i, j));
      if (g.adjacent(i, j)) {
        if (!lambda) lambda = c;
        else if (*lambda != c) lambda_bad = true;
      } else {
        if (!mu) mu = c;
        else if (*mu != c) mu_bad = true;
      }
    }
  if (lambda_bad || mu_bad) return {SrgVerdict::not_srg, {std::int64_t(v), std::int64_t(k), {}, {}}};
  SrgParams p{std::int64_t(v), std::int64_t(k), lambda, mu};
  if (!lambda || !mu) return {SrgVerdict::degenerate, p};
  if (!p.feasible()) throw std::logic_error("exhaustive parameters violate the feasibility identity");
  return {SrgVerdict::srg, p};
}

namespace {

// Exact rational with int64 parts, enough for the closed parameter formulas.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac operator*(const Frac& o) const { return {num * o.num, den * o.den}; }
  Frac operator+(const Frac& o) const { return {num * o.den + o.num * den, den * o.den}; }
  std::optional<std::int64_t> integer() const {
    if (num % den != 0) return std::nullopt;
    return num / den;
  }
};

Frac qpow(int q, int e) {
  Frac r{1, 1};
  for (int i = 0; i < e; ++i) r.num *= q;
  for (int i = 0; i < -e; ++i) r.den *= q;
  return r;
}

std::int64_t ipow(std::int64_t q, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

SrgParams expected_params(Family f, int m, int q, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const std::int64_t s = sign;
  switch (f) {
    case Family::no_even: {
      if (q != 2 || m < 2) throw std::invalid_argument("NO-even needs q=2 and m >= 2");
      SrgParams p;
      p.v = ipow(2, 2 * m - 1) - s * ipow(2, m - 1);
      p.k = ipow(2, 2 * m - 2) - 1;
      p.lambda = ipow(2, 2 * m - 3) - 2;
      p.mu = ipow(2, 2 * m - 3) + s * ipow(2, m - 2);
      return p;
    }
    case Family::no_odd: {
      if (m < 1 || q < 2 || (q & (q - 1)))
        throw std::invalid_argument("NO-odd needs m >= 1 and q a power of two");
      SrgParams p;
      std::int64_t qm = ipow(q, m), qm1 = ipow(q, m - 1);
      p.v = qm * (qm + s) / 2;
      p.k = (qm1 + s) * (qm - s);
      if (p.v > p.k + 1) p.mu = 2 * qm1 * (qm1 + s);
      std::int64_t lam = 2 * (qm1 * qm1 - 1) + s * qm1 * (q - 1);
      if (p.k > 0 && lam >= 0) p.lambda = lam;
      return p;
    }
    case Family::gamma_o: {
      if (m < 2 || q < 2) throw std::invalid_argument("GammaO needs m >= 2");
      Frac inv_q1{1, q - 1};
      SrgParams p;
      auto vv = ((qpow(q, m) + Frac{-s, 1}) * (qpow(q, m - 1) + Frac{s, 1}) * inv_q1).integer();
      auto kk = ((qpow(q, 1) * (qpow(q, m - 1) + Frac{-s, 1}) * (qpow(q, m - 2) + Frac{s, 1})) * inv_q1)
                    .integer();
      if (!vv || !kk) throw std::invalid_argument("non-integral GammaO parameters");
      p.v = *vv;
      p.k = *kk;
      auto mu = ((qpow(q, m - 1) + Frac{-s, 1}) * (qpow(q, m - 2) + Frac{s, 1}) * inv_q1).integer();
      auto lam = ((qpow(q, 2) * (qpow(q, m - 2) + Frac{-s, 1}) * (qpow(q, m - 3) + Frac{s, 1})) * inv_q1 +
                  Frac{q - 1, 1})
                     .integer();
      if (mu && *mu >= 0 && p.v > p.k + 1) p.mu = mu;
      if (lam && *lam >= 0 && p.k > 0) p.lambda = lam;
      return p;
    }
  }
  throw std::invalid_argument("unknown family");
}

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph too large for the supported graph6 headers");
  }
  unsigned buf = 0;
  int nbits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      buf = (buf << 1) | unsigned(g.adjacent(i, j));
      if (++nbits == 6) {
        out.push_back(char(buf + 63));
        buf = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(char((buf << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view s) {
  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
    unsigned c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 byte");
    return c - 63;
  };
  std::size_t n;
  unsigned c0 = next();
  if (c0 == 63 && !s.empty() && pos < s.size()) {
    n = (std::size_t(next()) << 12) | (std::size_t(next()) << 6) | next();
  } else {
    n = c0;
  }
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::uint32_t(i);
  Graph g(std::move(labels));
  unsigned buf = 0;
  int nbits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (nbits == 0) {
        buf = next();
        nbits = 6;
      }
      if ((buf >> (nbits - 1)) & 1u) g.add_edge(i, j);
      --nbits;
    }
  return g;
}

bool check_iso_map(const Graph& g1, const Graph& g2, std::span<const std::size_t> phi) {
  if (g1.size() != g2.size() || phi.size() != g1.size())
    throw std::invalid_argument("map is not a bijection between the vertex sets");
  std::vector<bool> hit(g2.size(), false);
  for (std::size_t i : phi) {
    if (i >= g2.size() || hit[i]) throw std::invalid_argument("map is not a bijection between the vertex sets");
    hit[i] = true;
  }
  for (std::size_t i = 0; i < g1.size(); ++i)
    for (std::size_t j = i + 1; j < g1.size(); ++j)
      if (g1.adjacent(i, j) != g2.adjacent(phi[i], phi[j])) return false;
  return true;
}

}  // namespace polar
