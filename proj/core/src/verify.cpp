#include "polar/verify.hpp"

#include <random>
#include <stdexcept>

#include "polar/constructions.hpp"
#include "polar/errors.hpp"
#include "polar/symplectic.hpp"
#include "polar/twograph.hpp"

namespace polar {

namespace {

int degree_for_order(int q) {
  for (int h = 1; h <= 8; ++h)
    if ((1 << h) == q) return h;
  throw std::invalid_argument("q must be a power of two up to 256");
}

const char* verdict_str(SrgVerdict v) {
  switch (v) {
    case SrgVerdict::srg: return "srg";
    case SrgVerdict::not_regular: return "not regular";
    case SrgVerdict::not_srg: return "not srg";
    case SrgVerdict::degenerate: return "degenerate";
  }
  return "?";
}

pvec scale_vec(const Space& s, felem lam, pvec v) {
  std::vector<felem> c = s.coords(v);
  for (auto& x : c) x = s.field().mul(lam, x);
  return s.from_coords(c);
}

std::int64_t ipow(std::int64_t q, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

// multiset of orbit lengths
std::vector<std::size_t> lengths(const std::vector<std::vector<pvec>>& orbits) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

Report verify_families() {
  Report r;
  r.command = "verify families";

  auto one = [&](const std::string& name, const Graph& g, Family fam, int m, int q, int sign) {
    SrgParams want = expected_params(fam, m, q, sign);
    SrgResult got = srg_params(g);
    add_check(r, name + " parameters", want.str(), got.params.str());
    const char* want_verdict = (want.lambda && want.mu) ? "srg" : "degenerate";
    add_check(r, name + " verdict", want_verdict, verdict_str(got.verdict));
  };

  Field gf2(1), gf4(2);
  for (int m = 2; m <= 4; ++m) {
    Space s = Space::standard(gf2, m);
    char buf[64];
    std::snprintf(buf, sizeof buf, "NO+(%d,2)", 2 * m);
    one(buf, build_no_even(hyperbolic_form(s)), Family::no_even, m, 2, 1);
    std::snprintf(buf, sizeof buf, "NO-(%d,2)", 2 * m);
    one(buf, build_no_even(elliptic_form(s)), Family::no_even, m, 2, -1);
    std::snprintf(buf, sizeof buf, "GammaO+(%d,2)", 2 * m);
    one(buf, build_gamma_o(hyperbolic_form(s)), Family::gamma_o, m, 2, 1);
    std::snprintf(buf, sizeof buf, "GammaO-(%d,2)", 2 * m);
    one(buf, build_gamma_o(elliptic_form(s)), Family::gamma_o, m, 2, -1);
  }
  // odd-dimensional graphs; the graph sign is opposite to the form type
  for (int m = 1; m <= 2; ++m) {
    Space s = Space::standard(gf4, m);
    char buf[64];
    std::snprintf(buf, sizeof buf, "NO+(%d,4)", 2 * m + 1);
    one(buf, build_no_odd(elliptic_form(s)), Family::no_odd, m, 4, 1);
    std::snprintf(buf, sizeof buf, "NO-(%d,4)", 2 * m + 1);
    one(buf, build_no_odd(hyperbolic_form(s)), Family::no_odd, m, 4, -1);
    std::snprintf(buf, sizeof buf, "NO+(%d,4) [W variant]", 2 * m + 1);
    one(buf, build_no_odd_w(1, m, 4), Family::no_odd, m, 4, 1);
    std::snprintf(buf, sizeof buf, "NO-(%d,4) [W variant]", 2 * m + 1);
    one(buf, build_no_odd_w(-1, m, 4), Family::no_odd, m, 4, -1);
  }
  // over GF(2) the odd-dimensional graphs are complete; the formulas still apply
  for (int m = 2; m <= 3; ++m) {
    Space s = Space::standard(gf2, m);
    char buf[64];
    std::snprintf(buf, sizeof buf, "NO+(%d,2)", 2 * m + 1);
    one(buf, build_no_odd(elliptic_form(s)), Family::no_odd, m, 2, 1);
    std::snprintf(buf, sizeof buf, "NO-(%d,2)", 2 * m + 1);
    one(buf, build_no_odd(hyperbolic_form(s)), Family::no_odd, m, 2, -1);
  }
  return r;
}

Report verify_orbits(int q, int m, const VerifyOptions& opts) {
  Report r;
  r.command = "verify orbits";
  r.parameters = {{"q", q}, {"m", m}};

  Field f(degree_for_order(q));
  Space s = Space::standard(f, m);
  std::vector<SympMatrix> gens = all_transvections(s);

  std::vector<SympMatrix> group;
  try {
    group = generate_group(gens, opts.group_cap);
  } catch (const resource_error&) {
    r.partial = true;
    return r;
  }
  add_check(r, "group order", group_order(GroupFamily::sp, m, q), group.size());

  const std::int64_t qm = ipow(q, m), q2m = qm * qm;
  auto orbits = orbits_on_forms(gens);
  add_check(r, "orbit count on forms", 2, orbits.size());
  add_check(r, "orbit sizes", join_sizes({std::size_t((q2m - qm) / 2), std::size_t((q2m + qm) / 2)}),
            join_sizes(lengths(orbits)));

  // the orbits are exactly the trace fibers of the base form's values
  QuadraticForm t0 = QuadraticForm::theta0(s);
  int mismatch = 0;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (pvec a : orbits[i])
      if (f.trace(t0.eval(a)) != int(i)) ++mismatch;
  add_check(r, "orbits match the trace criterion", 0, mismatch);

  std::vector<FormAction> actions = form_actions(group);
  // the two orbit actions are 2-transitive over GF(2) (they are the classical
  // doubly transitive actions of Sp(2m,2)); over larger fields the group is
  // too small for that
  if (q == 2)
    for (std::size_t i = 0; i < orbits.size() && i < 2; ++i)
      if (orbits[i].size() >= 2)
        add_check(r, std::string("2-transitive on orbit ") + (i == 0 ? "+" : "-"), true,
                  check_2transitivity(actions, orbits[i]));

  // stabilizers are the two orthogonal groups
  pvec elliptic = 0;
  for (std::uint64_t a = 1; a < s.point_count(); ++a)
    if (f.trace(t0.eval(pvec(a))) == 1) {
      elliptic = pvec(a);
      break;
    }
  auto stab_plus = stabilizer_of_form(0, actions);
  auto stab_minus = stabilizer_of_form(elliptic, actions);
  add_check(r, "stabilizer order (+)", group_order(GroupFamily::o_plus, m, q), stab_plus.size());
  add_check(r, "stabilizer order (-)", group_order(GroupFamily::o_minus, m, q), stab_minus.size());

  // stabilizer orbits on forms correspond to vector orbits, which are the
  // level sets of the stabilized form
  {
    std::vector<FormAction> sub;
    for (std::size_t i : stab_plus) sub.push_back(actions[i]);
    std::vector<std::size_t> want{1, std::size_t(q2m / q + (qm / q) * (q - 1) - 1)};
    for (int i = 0; i < q - 1; ++i) want.push_back(std::size_t(q2m / q - qm / q));
    std::sort(want.begin(), want.end());
    add_check(r, "stabilizer orbit lengths on forms", join_sizes(want),
              join_sizes(lengths(form_orbits_under(s, sub))));
  }

  // two complements of the translation group: the linear one with orbit
  // lengths {1, q^2m - 1}, and the twisted one with the form orbits
  {
    std::vector<FormAction> h1;
    for (const auto& g : group) h1.push_back(FormAction{g, 0});
    add_check(r, "linear complement orbit lengths",
              join_sizes({1, std::size_t(q2m - 1)}), join_sizes(lengths(form_orbits_under(s, h1))));
  }
  {
    bool closed = true;
    std::vector<FormAction> h2;
    try {
      h2 = complement_h2(group);
    } catch (const std::logic_error&) {
      closed = false;
    }
    add_check(r, "twisted complement is a complement", true, closed);
    if (closed) {
      add_check(r, "twisted complement order", group.size(), h2.size());
      add_check(r, "twisted complement orbit lengths",
                join_sizes({std::size_t((q2m - qm) / 2), std::size_t((q2m + qm) / 2)}),
                join_sizes(lengths(form_orbits_under(s, h2))));
    }
  }
  return r;
}

Report verify_appendix(int q, int m, const VerifyOptions& opts) {
  Report r;
  r.command = "verify appendix";
  r.parameters = {{"q", q}, {"m", m}};

  Field f(degree_for_order(q));
  Space s = Space::standard(f, m);
  const std::uint64_t n = s.point_count();
  QuadraticForm theta0 = QuadraticForm::theta0(s);
  auto t0 = theta0.value_table();

  const bool exhaustive = n <= 256;

  // pairing, square, and scalar-multiple tables make the identity sweeps
  // pure lookups
  std::vector<felem> pair_tab, sq_tab(f.order()), scale_tab;
  for (unsigned x = 0; x < f.order(); ++x) sq_tab[x] = f.mul(felem(x), felem(x));
  if (exhaustive) {
    pair_tab.resize(n * n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t u = 0; u < n; ++u) pair_tab[a * n + u] = s.symp(pvec(a), pvec(u));
    scale_tab.resize(f.order() * n);
    for (unsigned lam = 0; lam < f.order(); ++lam)
      for (std::uint64_t c = 0; c < n; ++c)
        scale_tab[lam * n + c] = felem(scale_vec(s, felem(lam), pvec(c)));
  }
  auto sq = [&](felem x) { return sq_tab[x]; };
  auto pairing = [&](pvec a, pvec u) {
    return exhaustive ? pair_tab[std::uint64_t(a) * n + u] : s.symp(a, u);
  };
  auto th = [&](pvec a, pvec u) { return felem(t0[u] ^ sq(pairing(a, u))); };
  // u T_c = u + <u,c> c
  auto tv = [&](pvec c, pvec u) {
    felem lam = pairing(u, c);
    return pvec(u ^ (exhaustive ? pvec(scale_tab[std::uint64_t(lam) * n + c])
                                : scale_vec(s, lam, c)));
  };

  std::uint64_t bad1 = 0, bad2 = 0, bad3 = 0, bad4 = 0, bad5 = 0;
  std::uint64_t bad_invol = 0, bad_fix = 0, bad_conj = 0;

  auto check_tuple = [&](pvec a, pvec b, pvec c, pvec u, felem gamma) {
    // action of a transvection on a parameterized form
    felem lhs1 = th(a, tv(c, u));
    felem rhs1 = felem(th(a, u) ^ f.mul(sq(pairing(c, u)), felem(th(a, c) ^ 1)));
    if (lhs1 != rhs1) ++bad1;
    // two parameters differ by a squared pairing term
    if (th(b, u) != felem(th(a, u) ^ sq(pairing(pvec(a ^ b), u)))) ++bad2;
    // closed form of the tangency value
    felem p = pairing(a, b);
    if (th(a, pvec(a ^ b)) != felem(t0[a] ^ t0[b] ^ sq(p) ^ p)) ++bad3;
    // transvection along gamma(a+b) maps one parameterized form to the other
    // up to a squared-pairing multiple
    if (a != b && gamma != 0) {
      pvec c2 = exhaustive ? pvec(scale_tab[std::uint64_t(gamma) * n + (a ^ b)])
                           : scale_vec(s, gamma, pvec(a ^ b));
      felem g2 = sq(gamma), g4 = sq(g2);
      felem extra = felem(1 ^ g2 ^ f.mul(g4, th(a, pvec(a ^ b))));
      felem lhs4 = th(a, tv(c2, u));
      felem rhs4 = felem(th(b, u) ^ f.mul(extra, sq(pairing(pvec(a ^ b), u))));
      if (lhs4 != rhs4) ++bad4;
      felem rhs5 = f.mul(g4, felem(f.inv(g4) ^ sq(p) ^ f.inv(g2) ^ p ^ t0[a] ^ t0[b]));
      if (extra != rhs5) ++bad5;
    }
  };

  if (exhaustive) {
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) {
        for (std::uint64_t u = 0; u < n; ++u) {
          check_tuple(pvec(a), pvec(b), pvec(b), pvec(u), 0);  // c = b covers all triples
          if (a != b)
            for (felem gamma = 1; gamma < f.order(); ++gamma)
              check_tuple(pvec(a), pvec(b), pvec(b), pvec(u), gamma);
        }
      }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    std::uniform_int_distribution<unsigned> pickg(1, f.order() - 1);
    for (std::uint64_t i = 0; i < opts.samples; ++i)
      check_tuple(pvec(pick(rng)), pvec(pick(rng)), pvec(pick(rng)), pvec(pick(rng)),
                  felem(pickg(rng)));
  }
  add_check(r, "transvected form identity", 0, bad1);
  add_check(r, "parameter shift identity", 0, bad2);
  add_check(r, "tangency value identity", 0, bad3);
  add_check(r, "scaled transvection identity", 0, bad4);
  add_check(r, "scaling coefficient identity", 0, bad5);

  // involution and fixed points of transvections
  {
    SympMatrix id = SympMatrix::identity(s);
    std::mt19937_64 rng(opts.seed + 1);
    std::uniform_int_distribution<std::uint64_t> pick(1, n - 1);
    std::uint64_t reps = exhaustive ? n - 1 : opts.samples;
    for (std::uint64_t i = 0; i < reps; ++i) {
      pvec c = exhaustive ? pvec(i + 1) : pvec(pick(rng));
      SympMatrix tc = transvection(s, c);
      if (!(tc.compose(tc) == id)) ++bad_invol;
      std::uint64_t inner = exhaustive ? n : 64;
      for (std::uint64_t j = 0; j < inner; ++j) {
        pvec u = exhaustive ? pvec(j) : pvec(pick(rng));
        if ((tc.apply(u) == u) != (s.symp(u, c) == 0)) ++bad_fix;
      }
    }
  }
  add_check(r, "transvections are involutions", 0, bad_invol);
  add_check(r, "transvection fixed points are the perp", 0, bad_fix);

  // conjugation: A^-1 T_a A = T_{aA}
  {
    std::mt19937_64 rng(opts.seed + 2);
    std::uniform_int_distribution<std::uint64_t> pick(1, n - 1);
    std::uint64_t reps = n <= 64 ? 0 : opts.samples / 10 + 1;
    if (n <= 64) {
      for (std::uint64_t a = 1; a < n; ++a)
        for (std::uint64_t b = 1; b < n; ++b) {
          SympMatrix bb = transvection(s, pvec(b));
          SympMatrix lhs = bb.inverse().compose(transvection(s, pvec(a))).compose(bb);
          if (!(lhs == transvection(s, bb.apply(pvec(a))))) ++bad_conj;
        }
    } else {
      for (std::uint64_t i = 0; i < reps; ++i) {
        pvec a = pvec(pick(rng));
        SympMatrix bb = transvection(s, pvec(pick(rng)))
                            .compose(transvection(s, pvec(pick(rng))))
                            .compose(transvection(s, pvec(pick(rng))));
        SympMatrix lhs = bb.inverse().compose(transvection(s, a)).compose(bb);
        if (!(lhs == transvection(s, bb.apply(a)))) ++bad_conj;
      }
    }
  }
  add_check(r, "conjugate of a transvection", 0, bad_conj);

  // single-transvection equivalence exists exactly within a trace fiber
  {
    std::uint64_t bad = 0;
    auto probe = [&](pvec a, pvec b) {
      bool want = f.trace(t0[a]) == f.trace(t0[b]);
      if (find_transvection_equiv(s, a, b).has_value() != want) ++bad;
    };
    if (n <= 512) {
      for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = a + 1; b < n; ++b) probe(pvec(a), pvec(b));
    } else {
      std::mt19937_64 rng(opts.seed + 3);
      std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
      for (std::uint64_t i = 0; i < opts.samples / 100 + 1; ++i) {
        pvec a = pvec(pick(rng)), b = pvec(pick(rng));
        if (a != b) probe(a, b);
      }
    }
    add_check(r, "transvection equivalence iff equal traces", 0, bad);
  }

  // order formulas tie together through the subgroup index
  {
    bigint sp = group_order(GroupFamily::sp, m, q);
    bigint qm = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    add_check(r, "index of the (+) stabilizer", sp / group_order(GroupFamily::o_plus, m, q),
              qm * (qm + 1) / 2);
    add_check(r, "index of the (-) stabilizer", sp / group_order(GroupFamily::o_minus, m, q),
              qm * (qm - 1) / 2);

    if (sp <= 100000 && std::size_t(sp) <= opts.group_cap) {
      std::vector<SympMatrix> group;
      try {
        group = generate_group(all_transvections(s), opts.group_cap);
      } catch (const resource_error&) {
        r.partial = true;
        return r;
      }
      add_check(r, "enumerated group order", sp, group.size());

      std::vector<FormAction> actions = form_actions(group);
      pvec elliptic = 0;
      for (std::uint64_t a = 1; a < n; ++a)
        if (f.trace(t0[a]) == 1) {
          elliptic = pvec(a);
          break;
        }
      struct Named {
        const char* name;
        pvec param;
        GroupFamily fam;
      };
      for (Named cfg : {Named{"+", pvec(0), GroupFamily::o_plus},
                        Named{"-", elliptic, GroupFamily::o_minus}}) {
        auto idx = stabilizer_of_form(cfg.param, actions);
        add_check(r, std::string("enumerated stabilizer order (") + cfg.name + ")",
                  group_order(cfg.fam, m, q), idx.size());

        // vector orbits of the stabilizer are the level sets of the form
        std::vector<SympMatrix> stab;
        for (std::size_t i : idx) stab.push_back(group[i]);
        auto orbits = vector_orbits(s, stab);
        std::vector<std::vector<pvec>> classes;
        auto tb = QuadraticForm::theta(s, cfg.param).value_table();
        for (unsigned val = 0; val < f.order(); ++val) {
          std::vector<pvec> cls;
          for (std::uint64_t u = 1; u < n; ++u)
            if (tb[u] == val) cls.push_back(pvec(u));
          if (!cls.empty()) classes.push_back(std::move(cls));
        }
        std::sort(classes.begin(), classes.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        add_check(r, std::string("stabilizer vector orbits are level sets (") + cfg.name + ")",
                  true, orbits == classes);
      }
    }
  }
  return r;
}

Report verify_theorem(int m, const VerifyOptions& opts) {
  if (m < 1) throw std::invalid_argument("theorem verification needs m >= 1");
  Report r;
  r.command = "verify theorem";
  r.parameters = {{"m", m}};

  Field gf2(1), gf4(2);

  for (int eps : {1, -1}) {
    const std::string tag = eps > 0 ? "(+)" : "(-)";

    // the even-dimensional graph has the two-graph cut out by its own form
    {
      Space s2 = Space::standard(gf2, 2 * m);
      QuadraticForm theta2 = eps > 0 ? hyperbolic_form(s2) : elliptic_form(s2);
      Graph g = build_no_even(theta2);
      if (g.size() <= opts.twograph_cap)
        add_check(r, "binary two-graph matches " + tag, true,
                  associated_two_graph(g) == symplectic_two_graph(theta2));
    }

    Space s4 = Space::standard(gf4, m);
    QuadraticForm theta = eps > 0 ? hyperbolic_form(s4) : elliptic_form(s4);
    add_check(r, "form type " + tag, eps, theta.type());
    QuadraticForm lifted = trace_lift(theta);
    add_check(r, "lifted form keeps its type " + tag, eps, lifted.type());

    Graph g_even = build_no_even(lifted);
    Graph g_odd = build_no_odd(theta);
    add_check(r, "shared vertex labels " + tag, true, g_even.labels() == g_odd.labels());

    SrgParams want_even = expected_params(Family::no_even, 2 * m, 2, eps);
    SrgParams want_odd = expected_params(Family::no_odd, m, 4, -eps);
    add_check(r, "even graph parameters " + tag, want_even.str(), srg_params(g_even).params.str());
    add_check(r, "odd graph parameters " + tag, want_odd.str(), srg_params(g_odd).params.str());

    if (g_even.size() <= opts.twograph_cap) {
      TwoGraph x = symplectic_two_graph(lifted);
      add_check(r, "even graph two-graph " + tag, true, associated_two_graph(g_even) == x);
      add_check(r, "odd graph two-graph " + tag, true, associated_two_graph(g_odd) == x);
      add_check(r, "two-graph axiom " + tag, true,
                x.check_even_quadruples(opts.samples, opts.seed));
    }

    auto y = switching_equivalence(g_even, g_odd);
    add_check(r, "switching certificate exists " + tag, true, y.has_value());
    if (!y) continue;

    SwitchingSets sets = compute_switching_sets(theta);
    std::int64_t want_size = ipow(2, 4 * m - 2) - eps * ipow(2, 2 * m - 2);
    add_check(r, "switching set sizes " + tag,
              join_sizes({std::size_t(want_size), std::size_t(want_size)}),
              join_sizes({sets.a.size(), sets.b.size()}));
    add_check(r, "certificate set is a form fiber " + tag, true, *y == sets.a || *y == sets.b);
    add_check(r, "either fiber switches the pair " + tag, true,
              seidel_switch(g_even, sets.b) == g_odd);
    add_check(r, "switching degree is k minus mu " + tag,
              want_even.k - want_even.mu.value(), want_odd.k - want_odd.mu.value());
  }
  return r;
}

}  // namespace polar
