#include "polar/symplectic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace polar {

SympMatrix::SympMatrix(Space space, Mat entries) : SympMatrix(std::move(space), std::move(entries), false) {}

SympMatrix::SympMatrix(Space space, Mat entries, bool checked)
    : space_(std::move(space)), entries_(std::move(entries)) {
  if (entries_.rows != space_.dim() || entries_.cols != space_.dim() ||
      !(entries_.field == space_.field()))
    throw std::invalid_argument("symplectic matrix shape/field mismatch");
  if (!checked) {
    Mat prod = mat_mul(mat_mul(entries_, space_.gram()), mat_transpose(entries_));
    if (!(prod == space_.gram()))
      throw std::invalid_argument("matrix does not preserve the gram pairing");
  }
}

SympMatrix SympMatrix::identity(const Space& s) {
  return SympMatrix(s, mat_identity(s.field(), s.dim()), true);
}

pvec SympMatrix::apply(pvec u) const {
  const Field& f = space_.field();
  const int n = space_.dim();
  std::vector<felem> out(n, 0);
  for (int i = 0; i < n; ++i) {
    felem ui = space_.coord(u, i);
    if (!ui) continue;
    for (int j = 0; j < n; ++j) {
      felem e = entries_.at(i, j);
      if (e) out[j] ^= f.mul(ui, e);
    }
  }
  return space_.from_coords(out);
}

SympMatrix SympMatrix::compose(const SympMatrix& o) const {
  if (!(space_ == o.space_)) throw std::invalid_argument("composition across different spaces");
  return SympMatrix(space_, mat_mul(entries_, o.entries_), true);
}

SympMatrix SympMatrix::inverse() const {
  auto inv = mat_inverse(entries_);
  if (!inv) throw std::logic_error("symplectic matrix not invertible");
  return SympMatrix(space_, std::move(*inv), true);
}

std::string SympMatrix::key() const {
  std::string s;
  s.reserve(entries_.a.size());
  for (felem e : entries_.a) s.push_back(char(e));
  return s;
}

SympMatrix transvection(const Space& s, pvec a) {
  const Field& f = s.field();
  const int n = s.dim();
  Mat m = mat_identity(f, n);
  for (int i = 0; i < n; ++i) {
    // <e_i, a>
    felem c = 0;
    for (int j = 0; j < n; ++j) {
      felem g = s.gram().at(i, j);
      if (g) c ^= f.mul(g, s.coord(a, j));
    }
    if (!c) continue;
    for (int j = 0; j < n; ++j) m.at(i, j) ^= f.mul(c, s.coord(a, j));
  }
  return SympMatrix(s, std::move(m));
}

std::vector<SympMatrix> all_transvections(const Space& s) {
  std::vector<SympMatrix> out;
  for (std::uint64_t a = 1; a < s.point_count(); ++a) out.push_back(transvection(s, pvec(a)));
  return out;
}

std::vector<SympMatrix> generate_group(std::span<const SympMatrix> gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("empty generator set");
  const Space& s = gens.front().space();
  std::vector<SympMatrix> elements;
  std::unordered_set<std::string> seen;
  SympMatrix id = SympMatrix::identity(s);
  elements.push_back(id);
  seen.insert(id.key());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      SympMatrix next = elements[head].compose(g);
      std::string k = next.key();
      if (seen.insert(std::move(k)).second) {
        if (elements.size() + 1 > cap)
          throw resource_error("group enumeration exceeded cap");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

bigint group_order(GroupFamily family, int m, int q) {
  if (m < 1 || q < 2 || (q & (q - 1)) != 0)
    throw std::invalid_argument("group order needs m >= 1 and q a power of two");
  bigint qe = q;
  auto qpow = [&](int e) {
    bigint r = 1;
    for (int i = 0; i < e; ++i) r *= qe;
    return r;
  };
  if (family == GroupFamily::sp) {
    bigint r = qpow(m * m);
    for (int i = 1; i <= m; ++i) r *= qpow(2 * i) - 1;
    return r;
  }
  bigint r = 2 * qpow(m * (m - 1));
  r *= family == GroupFamily::o_plus ? qpow(m) - 1 : qpow(m) + 1;
  for (int i = 1; i <= m - 1; ++i) r *= qpow(2 * i) - 1;
  return r;
}

FormAction form_action(const SympMatrix& a) {
  const Space& s = a.space();
  if (!s.is_standard()) throw std::invalid_argument("form action requires the standard space");
  SympMatrix inv = a.inverse();
  QuadraticForm t0 = QuadraticForm::theta0(s);
  std::vector<felem> table(s.point_count());
  for (std::uint64_t u = 0; u < table.size(); ++u) table[u] = t0.eval(inv.apply(pvec(u)));
  pvec shift = identify_form_parameter(s, table);
  return FormAction{a, shift};
}

std::vector<FormAction> form_actions(std::span<const SympMatrix> elements) {
  std::vector<FormAction> out;
  out.reserve(elements.size());
  for (const auto& a : elements) out.push_back(form_action(a));
  return out;
}

pvec act_on_form(pvec a, const SympMatrix& mat) { return form_action(mat).apply(a); }

std::optional<felem> find_transvection_equiv(const Space& s, pvec a, pvec b) {
  if (a == b) throw std::invalid_argument("transvection equivalence requires distinct parameters");
  const Field& f = s.field();
  QuadraticForm t0 = QuadraticForm::theta0(s);
  felem lambda = t0.eval(a) ^ t0.eval(b);
  auto t = f.solve_artin_schreier(lambda);
  if (!t) return std::nullopt;
  std::optional<felem> best;
  auto table_b = QuadraticForm::theta(s, b).value_table();
  QuadraticForm theta_a = QuadraticForm::theta(s, a);
  for (felem root : {*t, felem(*t ^ 1)}) {
    felem denom = s.symp(a, b) ^ root;
    if (!denom) continue;
    felem gamma = f.inv(f.sqrt(denom));
    // verify theta_a^{T_c} == theta_b by value table; T_c is an involution
    pvec c = 0;
    {
      std::vector<felem> cc(s.dim());
      for (int i = 0; i < s.dim(); ++i) cc[i] = f.mul(gamma, s.coord(a ^ b, i));
      c = s.from_coords(cc);
    }
    SympMatrix tc = transvection(s, c);
    bool ok = true;
    for (std::uint64_t u = 0; u < s.point_count() && ok; ++u)
      ok = theta_a.eval(tc.apply(pvec(u))) == table_b[u];
    if (ok && (!best || gamma < *best)) best = gamma;
  }
  if (!best) throw std::logic_error("trace criterion satisfied but no verified transvection");
  return best;
}

std::vector<std::vector<pvec>> orbits_on_forms(std::span<const SympMatrix> gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator set");
  const Space& s = gens.front().space();
  std::vector<pvec> domain(s.point_count());
  for (std::uint64_t u = 0; u < domain.size(); ++u) domain[u] = pvec(u);
  return orbit_partition(domain, form_actions(gens));
}

std::vector<std::size_t> stabilizer_of_form(pvec a, std::span<const FormAction> actions) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < actions.size(); ++i)
    if (actions[i].apply(a) == a) out.push_back(i);
  return out;
}

std::vector<std::vector<pvec>> vector_orbits(const Space& s, std::span<const SympMatrix> elements) {
  std::vector<pvec> domain;
  for (std::uint64_t u = 1; u < s.point_count(); ++u) domain.push_back(pvec(u));
  std::vector<SympMatrix> gens(elements.begin(), elements.end());
  return orbit_partition(domain, gens);
}

std::vector<std::vector<pvec>> form_orbits_under(const Space& s, std::span<const FormAction> actions) {
  std::vector<pvec> domain(s.point_count());
  for (std::uint64_t u = 0; u < domain.size(); ++u) domain[u] = pvec(u);
  std::vector<FormAction> gens(actions.begin(), actions.end());
  return orbit_partition(domain, gens);
}

bool check_2transitivity(std::span<const FormAction> elements, std::span<const pvec> domain) {
  if (domain.size() < 2) throw std::invalid_argument("2-transitivity needs at least two points");
  pvec base = domain[0];
  std::vector<FormAction> stab;
  for (const auto& g : elements)
    if (g.apply(base) == base) stab.push_back(g);
  std::vector<pvec> rest(domain.begin() + 1, domain.end());
  std::sort(rest.begin(), rest.end());
  std::vector<pvec> orbit{rest.front()};
  std::unordered_set<pvec> seen{rest.front()};
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& g : stab) {
      pvec img = g.apply(orbit[head]);
      if (seen.insert(img).second) orbit.push_back(img);
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit == rest;
}

std::vector<FormAction> complement_h2(std::span<const SympMatrix> sp_elements) {
  std::vector<FormAction> h2 = form_actions(sp_elements);
  // closure: (A,b_A)(B,b_B) = (AB, b_A * B + b_B) must be an element with
  // the stored shift
  std::unordered_map<std::string, pvec> shifts;
  for (const auto& g : h2) shifts[g.linear.key()] = g.shift;
  for (const auto& g1 : h2)
    for (const auto& g2 : h2) {
      SympMatrix prod = g1.linear.compose(g2.linear);
      pvec shift = g2.linear.apply(g1.shift) ^ g2.shift;
      auto it = shifts.find(prod.key());
      if (it == shifts.end() || it->second != shift)
        throw std::logic_error("H2 is not closed under composition");
    }
  // the only translation is the identity
  std::string id_key = SympMatrix::identity(sp_elements.front().space()).key();
  for (const auto& g : h2)
    if (g.linear.key() == id_key && g.shift != 0)
      throw std::logic_error("H2 meets the translation group nontrivially");
  return h2;
}

}  // namespace polar
