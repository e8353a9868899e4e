#include "polar/constructions.hpp"

#include <stdexcept>

namespace polar {

namespace {

// srg_params must reproduce the closed-form parameters (where defined).
void check_against_expected(const Graph& g, Family fam, int m, int q, int sign,
                            const char* what) {
  SrgParams want = expected_params(fam, m, q, sign);
  SrgResult got = srg_params(g);
  bool ok = got.params.v == want.v && got.params.k == want.k;
  if (want.lambda) ok = ok && got.params.lambda == want.lambda;
  if (want.mu) ok = ok && got.params.mu == want.mu;
  if (want.lambda && want.mu) ok = ok && got.verdict == SrgVerdict::srg;
  if (!ok)
    throw std::logic_error(std::string(what) + ": computed parameters " + got.params.str() +
                           " do not match the formula " + want.str());
}

}  // namespace

QuadraticForm hyperbolic_form(const Space& s) { return QuadraticForm::theta0(s); }

QuadraticForm elliptic_form(const Space& s) {
  QuadraticForm t0 = QuadraticForm::theta0(s);
  for (std::uint64_t a = 1; a < s.point_count(); ++a)
    if (s.field().trace(t0.eval(pvec(a))) == 1) return QuadraticForm::theta(s, pvec(a));
  throw std::logic_error("no elliptic parameter found");
}

Graph build_no_even(const QuadraticForm& theta) {
  const Space& s = theta.space();
  if (s.field().order() != 2) throw std::invalid_argument("NO-even graphs live over GF(2)");
  int sign = theta.type();  // throws on degenerate forms
  auto table = theta.value_table();
  std::vector<std::uint32_t> labels;
  for (std::uint64_t a = 0; a < table.size(); ++a)
    if (table[a] == 1) labels.push_back(std::uint32_t(a));
  Graph g(labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      felem pairing = table[labels[i] ^ labels[j]] ^ table[labels[i]] ^ table[labels[j]];
      if (pairing == 0) g.add_edge(i, j);
    }
  check_against_expected(g, Family::no_even, s.dim() / 2, 2, sign, "NO-even");
  return g;
}

Graph build_no_odd(const QuadraticForm& theta) {
  const Space& s = theta.space();
  const Field& f = s.field();
  int sign = -theta.type();  // the graph sign is opposite to the form type
  auto table = theta.value_table();
  std::vector<std::uint32_t> labels;
  for (std::uint64_t a = 0; a < table.size(); ++a)
    if (f.trace(table[a]) == 1) labels.push_back(std::uint32_t(a));
  Graph g(labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      felem sum = table[labels[i] ^ labels[j]];
      felem pairing = felem(sum ^ table[labels[i]] ^ table[labels[j]]);
      if (sum == f.mul(pairing, pairing)) g.add_edge(i, j);
    }
  check_against_expected(g, Family::no_odd, s.dim() / 2, int(f.order()), sign, "NO-odd");
  return g;
}

Graph build_no_odd_w(int sign, int m, int q) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  Field f(q == 2 ? 1 : q == 4 ? 2 : q == 8 ? 3 : q == 16 ? 4 : 0);
  Space s = Space::standard(f, m);
  auto table = QuadraticForm::theta0(s).value_table();
  int want_trace = sign > 0 ? 0 : 1;
  std::vector<std::uint32_t> labels;
  for (std::uint64_t a = 0; a < table.size(); ++a)
    if (f.trace(table[a]) == want_trace) labels.push_back(std::uint32_t(a));
  Graph g(labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      // theta_a(a+b) = theta_0(a+b) + <a,b>^2
      felem pairing = felem(table[labels[i] ^ labels[j]] ^ table[labels[i]] ^ table[labels[j]]);
      if ((table[labels[i] ^ labels[j]] ^ f.mul(pairing, pairing)) == 0) g.add_edge(i, j);
    }
  check_against_expected(g, Family::no_odd, m, q, sign, "NO-odd (W variant)");
  return g;
}

Graph build_gamma_o(const QuadraticForm& theta) {
  const Space& s = theta.space();
  if (s.field().order() != 2) throw std::invalid_argument("orthogonal graphs live over GF(2)");
  int sign = theta.type();
  auto table = theta.value_table();
  std::vector<std::uint32_t> labels;
  for (std::uint64_t a = 1; a < table.size(); ++a)
    if (table[a] == 0) labels.push_back(std::uint32_t(a));
  Graph g(labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      felem pairing = table[labels[i] ^ labels[j]] ^ table[labels[i]] ^ table[labels[j]];
      if (pairing == 0) g.add_edge(i, j);
    }
  check_against_expected(g, Family::gamma_o, s.dim() / 2, 2, sign, "GammaO");
  return g;
}

Graph build_sigma(int m) {
  if (m < 1) throw std::invalid_argument("sigma needs m >= 1");
  Field f(1);
  Space s = Space::standard(f, m);
  auto table = QuadraticForm::theta0(s).value_table();
  std::vector<std::uint32_t> labels(s.point_count());
  for (std::size_t a = 0; a < labels.size(); ++a) labels[a] = std::uint32_t(a);
  Graph g(labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if ((table[labels[i] ^ labels[j]] ^ table[labels[i]] ^ table[labels[j]]) == 0) g.add_edge(i, j);
  return g;
}

}  // namespace polar
