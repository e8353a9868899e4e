#include "polar/forms.hpp"

#include <stdexcept>

namespace polar {

Space::Space(Field field, int dim, Mat gram)
    : field_(field), dim_(dim), gram_(std::move(gram)), standard_(false) {
  if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("space dimension must be even and >= 2");
  if (field_.degree() * dim > 28) throw std::invalid_argument("packed labels exceed word capacity");
  if (gram_.rows != dim || gram_.cols != dim || !(gram_.field == field_))
    throw std::invalid_argument("gram shape/field mismatch");
  for (int i = 0; i < dim; ++i) {
    if (gram_.at(i, i) != 0) throw std::invalid_argument("gram must have zero diagonal");
    for (int j = 0; j < i; ++j)
      if (gram_.at(i, j) != gram_.at(j, i)) throw std::invalid_argument("gram must be symmetric");
  }
  if (mat_rank(gram_) != dim) throw std::invalid_argument("gram is singular");

  int m = dim / 2;
  standard_ = true;
  for (int i = 0; i < dim && standard_; ++i)
    for (int j = 0; j < dim; ++j) {
      felem want = (j == i + m || i == j + m) ? 1 : 0;
      if (gram_.at(i, j) != want) {
        standard_ = false;
        break;
      }
    }
}

Space Space::standard(const Field& field, int m) {
  Mat f(field, 2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    f.at(i, m + i) = 1;
    f.at(m + i, i) = 1;
  }
  return Space(field, 2 * m, std::move(f));
}

pvec Space::from_coords(std::span<const felem> c) const {
  if (int(c.size()) != dim_) throw std::invalid_argument("coordinate count mismatch");
  pvec u = 0;
  for (int i = 0; i < dim_; ++i) {
    if (c[i] >= field_.order()) throw std::invalid_argument("coordinate out of field");
    u |= pvec(c[i]) << (field_.degree() * i);
  }
  return u;
}

std::vector<felem> Space::coords(pvec u) const {
  std::vector<felem> c(dim_);
  for (int i = 0; i < dim_; ++i) c[i] = coord(u, i);
  return c;
}

felem Space::symp(pvec u, pvec v) const {
  if ((std::uint64_t(u) >= point_count()) || (std::uint64_t(v) >= point_count()))
    throw std::invalid_argument("vector outside the space");
  felem r = 0;
  for (int i = 0; i < dim_; ++i) {
    felem ui = coord(u, i);
    if (!ui) continue;
    felem row = 0;
    for (int j = 0; j < dim_; ++j) {
      felem g = gram_.at(i, j);
      if (g) row ^= field_.mul(g, coord(v, j));
    }
    r ^= field_.mul(ui, row);
  }
  return r;
}

std::string Space::render(pvec u) const {
  std::string s = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += field_.render(coord(u, i));
  }
  s += ")";
  return s;
}

QuadraticForm::QuadraticForm(Space s, Mat coeff, std::optional<pvec> param)
    : space_(std::move(s)), coeff_(std::move(coeff)), param_(param) {}

QuadraticForm QuadraticForm::theta0(const Space& s) {
  if (!s.is_standard()) throw std::invalid_argument("theta_0 requires the standard space");
  Mat e(s.field(), s.dim(), s.dim());
  int m = s.dim() / 2;
  for (int i = 0; i < m; ++i) e.at(i, m + i) = 1;
  return QuadraticForm(s, std::move(e), pvec(0));
}

QuadraticForm QuadraticForm::theta(const Space& s, pvec a) {
  QuadraticForm t0 = theta0(s);
  if (a == 0) return t0;
  const Field& f = s.field();
  // <a,u>^2 = sum_j c_j^2 u_j^2 with c = a*gram; adds to the diagonal.
  Mat coeff = t0.coeff_;
  for (int j = 0; j < s.dim(); ++j) {
    felem cj = 0;
    for (int i = 0; i < s.dim(); ++i) {
      felem g = s.gram().at(i, j);
      if (g) cj ^= f.mul(s.coord(a, i), g);
    }
    coeff.at(j, j) ^= f.mul(cj, cj);
  }
  return QuadraticForm(s, std::move(coeff), a);
}

QuadraticForm QuadraticForm::from_coeff(const Space& s, Mat coeff) {
  if (coeff.rows != s.dim() || coeff.cols != s.dim() || !(coeff.field == s.field()))
    throw std::invalid_argument("coefficient matrix shape/field mismatch");
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < i; ++j)
      if (coeff.at(i, j) != 0) throw std::invalid_argument("coefficient matrix must be upper triangular");
  // Omega membership: the linearization f(e_i,e_j) = M[i][j] (i<j) must
  // equal the gram pairing.
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (coeff.at(i, j) != s.gram().at(i, j))
        throw std::domain_error("form does not linearize to the space's gram");
  std::optional<pvec> param;
  if (s.is_standard()) {
    QuadraticForm probe(s, coeff, std::nullopt);
    param = identify_form_parameter(s, probe.value_table());
  }
  return QuadraticForm(s, std::move(coeff), param);
}

felem QuadraticForm::eval(pvec u) const {
  const Field& f = space_.field();
  felem r = 0;
  for (int i = 0; i < space_.dim(); ++i) {
    felem ui = space_.coord(u, i);
    if (!ui) continue;
    felem row = 0;
    for (int j = i; j < space_.dim(); ++j) {
      felem c = coeff_.at(i, j);
      if (c) row ^= f.mul(c, space_.coord(u, j));
    }
    r ^= f.mul(ui, row);
  }
  return r;
}

std::vector<felem> QuadraticForm::value_table() const {
  std::vector<felem> t(space_.point_count());
  for (std::uint64_t u = 0; u < t.size(); ++u) t[u] = eval(pvec(u));
  return t;
}

std::uint64_t QuadraticForm::zero_count() const {
  std::uint64_t n = 0;
  for (std::uint64_t u = 0; u < space_.point_count(); ++u)
    if (eval(pvec(u)) == 0) ++n;
  return n;
}

int QuadraticForm::type() const {
  const std::uint64_t q = space_.field().order();
  const int m = space_.dim() / 2;
  if (param_ && space_.is_standard()) {
    QuadraticForm t0 = theta0(space_);
    return space_.field().trace(t0.eval(*param_)) == 0 ? +1 : -1;
  }
  std::uint64_t qm1 = 1, q2m1 = 1;
  for (int i = 0; i < m - 1; ++i) qm1 *= q;        // q^(m-1)
  for (int i = 0; i < 2 * m - 1; ++i) q2m1 *= q;   // q^(2m-1)
  std::uint64_t zc = zero_count();
  if (zc == q2m1 + qm1 * (q - 1)) return +1;
  if (zc == q2m1 - qm1 * (q - 1)) return -1;
  throw std::domain_error("zero count matches neither type: degenerate form");
}

pvec identify_form_parameter(const Space& s, std::span<const felem> table) {
  if (!s.is_standard()) throw std::invalid_argument("parameter identification requires the standard space");
  if (table.size() != s.point_count()) throw std::invalid_argument("value table size mismatch");
  const Field& f = s.field();
  const int n = s.dim();
  // c_i = <a,e_i> = sqrt(table(e_i) + theta_0(e_i)); theta_0 vanishes on the basis.
  std::vector<felem> c(n);
  for (int i = 0; i < n; ++i) {
    pvec ei = pvec(1) << (f.degree() * i);
    c[i] = f.sqrt(table[ei]);
  }
  // a * gram = c
  std::vector<felem> a_coords = mat_solve_left(s.gram(), c);
  pvec a = s.from_coords(a_coords);
  QuadraticForm cand = QuadraticForm::theta(s, a);
  for (std::uint64_t u = 0; u < s.point_count(); ++u)
    if (cand.eval(pvec(u)) != table[u])
      throw std::domain_error("table is not a quadratic form linearizing to the standard gram");
  return a;
}

bool forms_tangent(const Space& s, pvec a, pvec b) {
  if (a == b) throw std::invalid_argument("tangency requires distinct parameters");
  return QuadraticForm::theta(s, a).eval(a ^ b) == 0;
}

QuadraticForm trace_lift(const QuadraticForm& theta) {
  const Space& s = theta.space();
  const Field& f = s.field();
  const int h = f.degree();
  const int n = s.dim();
  Field f2(1);
  Mat gram(f2, h * n, h * n);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < h; ++t)
      for (int j = 0; j < n; ++j)
        for (int u = 0; u < h; ++u) {
          felem g = s.gram().at(i, j);
          if (!g) continue;
          felem prod = f.mul(f.mul(felem(1 << t), felem(1 << u)), g);
          gram.at(i * h + t, j * h + u) = felem(f.trace(prod));
        }
  Space lifted(f2, h * n, std::move(gram));
  // Packed labels coincide bit-for-bit, so the lifted coefficients come
  // from evaluating theta on single- and two-bit labels.
  Mat coeff(f2, h * n, h * n);
  for (int p = 0; p < h * n; ++p) coeff.at(p, p) = felem(f.trace(theta.eval(pvec(1) << p)));
  for (int p = 0; p < h * n; ++p)
    for (int r = p + 1; r < h * n; ++r) {
      int v = f.trace(theta.eval((pvec(1) << p) | (pvec(1) << r)));
      coeff.at(p, r) = felem(v ^ coeff.at(p, p) ^ coeff.at(r, r));
    }
  return QuadraticForm::from_coeff(lifted, std::move(coeff));
}

Mat symplectic_basis(const Space& s) {
  const Field& f = s.field();
  const int n = s.dim();
  auto pair = [&](const std::vector<felem>& x, const std::vector<felem>& y) {
    felem r = 0;
    for (int i = 0; i < n; ++i) {
      if (!x[i]) continue;
      felem row = 0;
      for (int j = 0; j < n; ++j)
        if (s.gram().at(i, j)) row ^= f.mul(s.gram().at(i, j), y[j]);
      r ^= f.mul(x[i], row);
    }
    return r;
  };
  std::vector<std::vector<felem>> remaining;
  for (int i = 0; i < n; ++i) {
    std::vector<felem> e(n, 0);
    e[i] = 1;
    remaining.push_back(std::move(e));
  }
  std::vector<std::vector<felem>> us, vs;
  while (!remaining.empty()) {
    auto u = remaining.front();
    int partner = -1;
    for (std::size_t k = 1; k < remaining.size(); ++k)
      if (pair(u, remaining[k]) != 0) {
        partner = int(k);
        break;
      }
    if (partner < 0) throw std::domain_error("gram is singular: no symplectic partner");
    auto v = remaining[partner];
    felem scale = f.inv(pair(u, v));
    for (auto& x : v) x = f.mul(x, scale);
    std::vector<std::vector<felem>> next;
    for (std::size_t k = 1; k < remaining.size(); ++k) {
      if (int(k) == partner) continue;
      auto w = remaining[k];
      felem cu = pair(w, v), cv = pair(u, w);
      for (int i = 0; i < n; ++i) w[i] ^= f.mul(cu, u[i]) ^ f.mul(cv, v[i]);
      bool zero = true;
      for (auto x : w)
        if (x) zero = false;
      if (!zero) next.push_back(std::move(w));
    }
    us.push_back(std::move(u));
    vs.push_back(std::move(v));
    remaining = std::move(next);
  }
  if (int(us.size()) != n / 2) throw std::domain_error("gram is singular");
  Mat b(f, n, n);
  for (int i = 0; i < n / 2; ++i)
    for (int j = 0; j < n; ++j) {
      b.at(i, j) = us[i][j];
      b.at(n / 2 + i, j) = vs[i][j];
    }
  return b;
}

}  // namespace polar
