/* SPDX-License-Identifier: Apache-2.0 */
#include "solve.hpp"

#include "dense.hpp"
#include "error.hpp"
#include "sample.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropext {

namespace {

void require_univariate(const HPoly& p) {
  if (p.nvars() != 1) throw DomainError("expected a univariate polynomial, got " + std::to_string(p.nvars()) + " variables");
  if (p.is_zero()) throw DomainError("the zero polynomial vanishes everywhere");
}

long min_exponent(const HPoly& p) { return p.terms().begin()->first[0]; }

std::string format_multiset(const Hyperfield& h, const std::map<Elem, int, ElemLess>& m) {
  std::string s = "{";
  for (const auto& [e, k] : m) {
    if (s.size() > 1) s += ", ";
    s += h.format(e);
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s + "}";
}

}  // namespace

std::vector<NewtonCell> newton_cells(const HPoly& p) {
  require_univariate(p);
  if (!p.hyperfield().is_extension()) throw DomainError("Newton cells need a polynomial over an extension");
  std::vector<std::pair<long, GroupElem>> pts;
  for (const auto& [e, c] : p.terms()) pts.emplace_back(e[0], *c.level);
  std::vector<NewtonCell> cells;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      GroupElem h = (pts[i].second - pts[j].second).divided(Integer(pts[j].first - pts[i].first));
      if (std::any_of(cells.begin(), cells.end(), [&](const NewtonCell& c) { return c.level == h; })) continue;
      std::optional<GroupElem> best;
      std::vector<long> J;
      for (const auto& [k, g] : pts) {
        GroupElem v = g + h.scaled(Integer(k));
        if (!best || v < *best) {
          best = v;
          J = {k};
        } else if (v == *best) {
          J.push_back(k);
        }
      }
      if (J.size() >= 2) cells.push_back({h, J});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const NewtonCell& a, const NewtonCell& b) { return a.level < b.level; });
  return cells;
}

BaseRoots base_roots(const Hyperfield& base, const std::vector<std::pair<long, Unit>>& terms_in) {
  if (base.is_extension()) throw DomainError("base_roots expects a base hyperfield");
  BaseRoots out;
  if (terms_in.empty()) throw DomainError("no terms");
  long low = terms_in.front().first;
  for (const auto& t : terms_in) low = std::min(low, t.first);
  std::vector<std::pair<long, Unit>> terms;
  for (const auto& [e, c] : terms_in) terms.emplace_back(e - low, c);
  long deg = 0;
  for (const auto& t : terms) deg = std::max(deg, t.first);

  switch (base.base_kind()) {
    case BaseKind::Finite: {
      for (const Elem& x : base.elements()) {
        if (x.is_zero()) continue;
        std::vector<Elem> vals;
        for (const auto& [e, c] : terms) vals.push_back(base.mul(Elem{c, std::nullopt}, base.pow(x, e)));
        if (base.contains_zero(base.nary_sum(vals))) out.units.push_back(x.unit);
      }
      out.description = "enumerated";
      return out;
    }
    case BaseKind::Rationals: {
      dense::QPoly q(static_cast<std::size_t>(deg) + 1, Rational(0));
      for (const auto& [e, c] : terms) q[static_cast<std::size_t>(e)] += std::get<Rational>(c);
      for (auto& r : dense::rational_roots(q)) out.units.push_back(r);
      out.description = "rational roots";
      return out;
    }
    case BaseKind::Gaussian: {
      dense::GPoly q(static_cast<std::size_t>(deg) + 1, Gaussian{0, 0});
      for (const auto& [e, c] : terms) q[static_cast<std::size_t>(e)] = dense::gadd(q[static_cast<std::size_t>(e)], std::get<Gaussian>(c));
      for (auto& r : dense::gaussian_roots(q)) out.units.push_back(r);
      std::sort(out.units.begin(), out.units.end(), [](const Unit& a, const Unit& b) { return compare_units(a, b) < 0; });
      out.description = "Gaussian rational roots";
      return out;
    }
    case BaseKind::Phase:
    case BaseKind::TropicalPhase:
      out.enumerable = terms.size() < 2;
      out.description = out.enumerable ? "no roots" : "root set infinite (arc)";
      return out;
  }
  return out;
}

namespace {

class MultSolver {
 public:
  MultSolver(const Hyperfield& h, int max_degree) : h_(h), max_degree_(max_degree) {}

  int mult(const HPoly& p, const Elem& a) {
    if (!is_root(p, {a})) return 0;
    if (a.is_zero()) return static_cast<int>(min_exponent(p));
    const long n = p.degree();
    if (n > max_degree_)
      throw DomainError("degree " + std::to_string(n) + " exceeds the multiplicity degree bound " + std::to_string(max_degree_));
    const std::string key = p.to_string() + "@" + h_.format(a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<Elem> c(static_cast<std::size_t>(n) + 1, Elem::zero());
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0])] = v;
    const Elem ainv = h_.inv(a);
    // lower[k]: every value q_k can take given c_0..c_k.
    std::vector<SetValue> lower(static_cast<std::size_t>(n));
    lower[0] = h_.singleton(h_.mul(h_.neg(c[0]), ainv));
    for (long k = 1; k < n; ++k)
      lower[k] = h_.scale(h_.hyperadd(lower[k - 1], h_.singleton(h_.neg(c[k]))), ainv);

    int best = 0;
    std::vector<Elem> q(static_cast<std::size_t>(n));
    q[n - 1] = c[n];
    if (h_.contains(lower[n - 1], q[n - 1])) search(c, a, lower, q, n - 1, best);
    memo_[key] = 1 + best;
    return 1 + best;
  }

 private:
  // q[k] fixed; choose q[k-1] from c_k + a*q_k.
  void search(const std::vector<Elem>& c, const Elem& a, const std::vector<SetValue>& lower, std::vector<Elem>& q, long k,
              int& best) {
    if (k == 0) {
      if (!(h_.mul(h_.neg(a), q[0]) == c[0])) return;
      HPoly quot(h_, 1);
      for (std::size_t i = 0; i < q.size(); ++i) quot.set_term({static_cast<long>(i)}, q[i]);
      best = std::max(best, mult(quot, a));
      return;
    }
    const SetValue s = h_.hyperadd(h_.singleton(c[k]), h_.singleton(h_.mul(a, q[k])));
    std::vector<Elem> cand = h_.boundary(s);
    for (auto& e : h_.boundary(lower[k - 1])) cand.push_back(e);
    std::sort(cand.begin(), cand.end(), ElemLess{});
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (const Elem& x : cand) {
      if (!h_.contains(s, x) || !h_.contains(lower[k - 1], x)) continue;
      q[k - 1] = x;
      search(c, a, lower, q, k - 1, best);
    }
  }

  const Hyperfield& h_;
  int max_degree_;
  std::map<std::string, int> memo_;
};

}  // namespace

int multiplicity(const HPoly& p, const Elem& a, int max_degree) {
  require_univariate(p);
  if (p.laurent()) throw DomainError("multiplicity needs a polynomial, not a Laurent polynomial");
  MultSolver solver(p.hyperfield(), max_degree);
  return solver.mult(p, a);
}

std::vector<RootRecord> roots_univariate(const HPoly& p_in, int max_degree) {
  require_univariate(p_in);
  const bool laurent = p_in.laurent();
  const HPoly p = laurent ? affinize(p_in) : p_in;
  const Hyperfield& h = p.hyperfield();
  MultSolver solver(h, max_degree);
  std::vector<RootRecord> out;
  auto units_of = [&](const std::vector<long>& J) {
    std::vector<std::pair<long, Unit>> terms;
    for (long j : J) terms.emplace_back(j, p.coeff({j}).unit);
    BaseRoots br = base_roots(h.base(), terms);
    if (!br.enumerable) throw UnsupportedError("root set infinite (arc) for " + p.to_string());
    return br.units;
  };
  if (h.is_extension()) {
    auto cells = newton_cells(p);
    for (auto it = cells.rbegin(); it != cells.rend(); ++it)
      for (const Unit& u : units_of(it->J)) {
        Elem r{u, it->level};
        out.push_back({r, solver.mult(p, r), *it});
      }
  } else {
    std::vector<long> J;
    for (const auto& [e, c] : p.terms()) J.push_back(e[0]);
    if (J.size() >= 2)
      for (const Unit& u : units_of(J)) {
        Elem r{u, std::nullopt};
        out.push_back({r, solver.mult(p, r), std::nullopt});
      }
  }
  const long z = min_exponent(p);
  if (z > 0 && !laurent) out.push_back({Elem::zero(), static_cast<int>(z), std::nullopt});
  return out;
}

namespace {

std::vector<Elem> coefficient_pool(const Hyperfield& h) {
  if (h.is_finite()) return h.elements();
  return {};
}

void enumerate_polys(const std::vector<Elem>& pool, int degree, std::vector<Elem>& cur, const std::function<void()>& fn) {
  if (static_cast<int>(cur.size()) == degree + 1) {
    fn();
    return;
  }
  for (const auto& e : pool) {
    if (static_cast<int>(cur.size()) == degree && e.is_zero()) continue;
    cur.push_back(e);
    enumerate_polys(pool, degree, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

MultBoundReport mult_bound_check(const Hyperfield& h, std::size_t trials, int max_degree, std::uint64_t seed,
                                 bool exhaustive) {
  MultBoundReport rep;
  rep.hyperfield = h.key();
  if (h.base_kind() == BaseKind::Phase || h.base_kind() == BaseKind::TropicalPhase) {
    HPoly p(h, 1);
    const Elem one = h.one();
    for (long e = 0; e <= 2; ++e) p.set_term({e}, one);
    rep.applicable = false;
    rep.note = "root set infinite (arc): " + p.to_string() + " vanishes on an open arc";
    return rep;
  }
  auto check = [&](const HPoly& p) {
    ++rep.polys;
    int total = 0;
    for (const auto& r : roots_univariate(p)) total += r.multiplicity;
    if (total > p.degree() && rep.violations.size() < 20)
      rep.violations.push_back(p.to_string() + ": multiplicities sum to " + std::to_string(total));
  };
  if (exhaustive) {
    if (!h.is_finite()) throw DomainError("exhaustive multiplicity check needs a finite hyperfield");
    const auto pool = coefficient_pool(h);
    for (int d = 1; d <= max_degree; ++d) {
      std::vector<Elem> cur;
      enumerate_polys(pool, d, cur, [&] {
        HPoly p(h, 1);
        for (std::size_t i = 0; i < cur.size(); ++i) p.set_term({static_cast<long>(i)}, cur[i]);
        check(p);
      });
    }
    return rep;
  }
  ElemSampler smp(h, seed);
  std::uniform_int_distribution<int> deg(1, max_degree);
  for (std::size_t t = 0; t < trials; ++t) {
    const int d = deg(smp.rng());
    HPoly p(h, 1);
    for (int i = 0; i < d; ++i) p.set_term({i}, smp.next());
    p.set_term({d}, smp.next_nonzero());
    check(p);
  }
  return rep;
}

namespace {

dense::QPoly to_qpoly(const HPoly& p) {
  dense::QPoly q(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) q[static_cast<std::size_t>(e[0])] = std::get<Rational>(c.unit);
  return q;
}

}  // namespace

RacResult rac_check_instance(const Hom& f, const HPoly& p, const Elem& beta) {
  if (f.series_source()) throw DomainError("series homomorphisms need a root corpus");
  const HPoly image = pushforward(f, p);
  if (p.nvars() != 1) throw UnsupportedError("fibre search is implemented for univariate polynomials");
  if (!is_root(image, {beta})) throw DomainError(f.target().format(beta) + " is not a root of " + image.to_string());
  RacResult res;
  const Hyperfield& src = f.source();

  if (f.kind() == HomKind::Sign) {
    if (beta.is_zero()) {
      if (is_root(p, {Elem::zero()})) {
        res.status = RacStatus::Lift;
        res.lift = Elem::zero();
        res.detail = "0";
      } else {
        res.status = RacStatus::Counterexample;
        res.detail = "p(0) != 0";
      }
      return res;
    }
    const bool negative = std::get<Finite>(beta.unit).idx == 2;
    dense::QPoly q = to_qpoly(p);
    for (const auto& r : dense::rational_roots(q)) {
      if ((r < 0) == negative) {
        res.status = RacStatus::Lift;
        res.lift = Elem{r, std::nullopt};
        res.detail = to_string(r);
        return res;
      }
    }
    const int n = dense::sturm_count(q, negative);
    const char* side = negative ? "(-inf, 0)" : "(0, inf)";
    if (n > 0) {
      res.status = RacStatus::Lift;
      res.detail = std::to_string(n) + " irrational real root(s) in " + std::string(side);
    } else {
      res.status = RacStatus::Counterexample;
      res.detail = std::string("no real root in ") + side + " (Sturm count 0)";
    }
    return res;
  }

  // Everything else: enumerate the roots of p over the source when that set is finite.
  std::vector<Elem> candidates;
  if (src.is_finite()) {
    candidates = src.elements();
  } else {
    for (const auto& r : roots_univariate(p)) candidates.push_back(r.root);
  }
  for (const Elem& a : candidates) {
    if (f.apply(a) == beta && is_root(p, {a})) {
      res.status = RacStatus::Lift;
      res.lift = a;
      res.detail = src.format(a);
      return res;
    }
  }
  res.status = RacStatus::Counterexample;
  res.detail = "no root of " + p.to_string() + " over " + src.key() + " maps to " + f.target().format(beta);
  return res;
}

RacResult rac_check_instance(const Hom& f, const SeriesPoly& p, const Elem& beta, const std::vector<Series>& corpus) {
  if (!f.series_source()) throw DomainError(f.name() + " does not act on series");
  const HPoly image = pushforward(f, p);
  if (!is_root(image, {beta})) throw DomainError(f.target().format(beta) + " is not a root of " + image.to_string());
  RacResult res;
  for (const Series& a : corpus) {
    if (f.apply(a) == beta && p.eval({a}).is_zero()) {
      res.status = RacStatus::Lift;
      res.series_lift = a;
      res.detail = a.to_string();
      return res;
    }
  }
  res.status = RacStatus::NotFound;
  res.detail = "not found in corpus";
  return res;
}

HarnessCase kapranov_check(const Hom& f, const std::vector<Series>& roots) {
  HarnessCase hc;
  const SeriesPoly p = product_of_linear_factors(roots);
  const HPoly image = pushforward(f, p);
  const Hyperfield& t = f.target();
  hc.instance = p.to_string();
  std::map<Elem, int, ElemLess> expected;
  for (const auto& r : roots) ++expected[f.apply(r)];
  hc.expected = format_multiset(t, expected);
  if (t.base_kind() == BaseKind::Phase || t.base_kind() == BaseKind::TropicalPhase) {
    hc.ok = true;
    std::string missing;
    for (const auto& [e, k] : expected)
      if (!is_root(image, {e})) {
        hc.ok = false;
        missing += " " + t.format(e);
      }
    hc.got = hc.ok ? "all images are roots of " + image.to_string() : "not roots:" + missing;
    return hc;
  }
  std::map<Elem, int, ElemLess> got;
  for (const auto& r : roots_univariate(image)) {
    if (!is_root(image, {r.root})) throw DomainError("solver returned a non-root " + t.format(r.root));
    got[r.root] += r.multiplicity;
  }
  hc.got = format_multiset(t, got);
  hc.ok = got.size() == expected.size() && std::equal(got.begin(), got.end(), expected.begin(), [](const auto& a, const auto& b) {
            return a.first == b.first && a.second == b.second;
          });
  return hc;
}

namespace {

// Leading data come from tiny pools so that equal levels and equal leading
// coefficients are common; tails use the full exponent range below 8.
Series random_root(Rng& rng, const Hyperfield& k, int den_bound) {
  static const char* lead_levels[] = {"0", "1/2", "1", "3/4", "-1/4"};
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> nterms(0, 2);
  std::uniform_int_distribution<int> den(1, den_bound);
  Series s(k, 1);
  const GroupElem lead(parse_rational(lead_levels[pick(rng)]));
  Unit c;
  switch (k.base_kind()) {
    case BaseKind::Rationals: {
      int v = 0;
      while (v == 0) v = small(rng);
      c = Rational(v);
      break;
    }
    case BaseKind::Gaussian: {
      Gaussian g{0, 0};
      while (gauss_is_zero(g)) g = Gaussian{Rational(small(rng)), Rational(small(rng))};
      c = g;
      break;
    }
    default: c = random_unit(rng, k);
  }
  s.set_term(lead, c);
  const int extra = nterms(rng);
  for (int i = 0; i < extra; ++i) {
    const int d = den(rng);
    std::uniform_int_distribution<int> num(1, 8 * d - 1);
    GroupElem e(make_rational(num(rng), d));
    if (e <= lead) continue;
    s.set_term(e, random_unit(rng, k));
  }
  return s;
}

}  // namespace

HarnessSummary kapranov_harness(const Hom& f, std::size_t trials, std::uint64_t seed, int max_factors, int den_bound) {
  if (!f.series_source()) throw DomainError("the Kapranov harness needs a valuation");
  HarnessSummary sum;
  sum.name = "kapranov/" + f.name();
  sum.trials = trials;
  Rng rng(seed);
  std::uniform_int_distribution<int> nf(1, max_factors);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Series> roots;
    const int n = nf(rng);
    for (int i = 0; i < n; ++i) roots.push_back(random_root(rng, f.source(), den_bound));
    HarnessCase hc = kapranov_check(f, roots);
    if (!hc.ok) sum.failures.push_back(hc);
  }
  return sum;
}

namespace {

Series inv_rel(const Series& s, const GroupElem& rel) {
  auto [c, g] = s.leading_term();
  return s.inv(rel - g);
}

struct Linear {
  Series a, b, c;  // a X + b Y + c
};

Linear as_linear(const SeriesPoly& l) {
  if (l.nvars() != 2 || l.degree() != 1) throw UnsupportedError("not a linear polynomial in X, Y: " + l.to_string());
  return {l.coeff({1, 0}), l.coeff({0, 1}), l.coeff({0, 0})};
}

SeriesPoly linear_poly(const Hyperfield& k, std::size_t rank, const Series& a, const Series& b, const Series& c) {
  SeriesPoly p(k, 2, rank);
  p.add_term({1, 0}, a);
  p.add_term({0, 1}, b);
  p.add_term({0, 0}, c);
  return p;
}

HPoly univariate_in(const HPoly& p, std::size_t var) {
  HPoly out(p.hyperfield(), 1);
  for (const auto& [e, c] : p.terms()) out.set_term({e[var]}, c);
  return out;
}

std::string format_points(const Hyperfield& h, const std::set<std::vector<Elem>, std::function<bool(const std::vector<Elem>&, const std::vector<Elem>&)>>& pts) {
  std::string s = "{";
  for (const auto& p : pts) {
    if (s.size() > 1) s += ", ";
    s += "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + h.format(p[i]);
    s += ")";
  }
  return s + "}";
}

bool point_less(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ElemLess{});
}

}  // namespace

std::pair<Series, Series> solve_linear_2x2(const SeriesPoly& l1, const SeriesPoly& l2, const GroupElem& rel) {
  const Linear p = as_linear(l1), q = as_linear(l2);
  const Series det = p.a * q.b - q.a * p.b;
  if (det.is_zero()) throw DomainError("no isolated solution: the two lines are parallel");
  const Series dinv = inv_rel(det, rel);
  return {(p.b * q.c - q.b * p.c) * dinv, (q.a * p.c - p.a * q.c) * dinv};
}

namespace {

void require_plane_pair(const std::vector<SeriesPoly>& gens) {
  if (gens.size() != 2 || gens[0].nvars() != 2 || gens[1].nvars() != 2)
    throw UnsupportedError("system outside the supported shapes: expected two polynomials in X, Y");
}

struct Substitution {
  long k = -1;
  Series c;  // Y = c X^k
};

Substitution as_substitution(const SeriesPoly& pX, const SeriesPoly& sub, const GroupElem& rel) {
  for (const auto& [e, c] : pX.coeffs())
    if (e[1] != 0) throw UnsupportedError("system outside the supported shapes: first generator must be univariate in X");
  if (sub.coeffs().size() != 2 || sub.coeff({0, 1}).is_zero())
    throw UnsupportedError("system outside the supported shapes: second generator must be Y - c*X^k");
  Substitution out{-1, Series(sub.field(), sub.rank())};
  Series cneg(sub.field(), sub.rank());
  for (const auto& [e, c] : sub.coeffs())
    if (e[1] == 0) {
      out.k = e[0];
      cneg = c;
    }
  if (out.k < 0) throw UnsupportedError("system outside the supported shapes: second generator must be Y - c*X^k");
  out.c = -(cneg * inv_rel(sub.coeff({0, 1}), rel));
  return out;
}

}  // namespace

std::vector<std::pair<Series, Series>> solve_series_system(const std::vector<SeriesPoly>& gens,
                                                           const std::vector<Series>& p_roots, const GroupElem& rel) {
  require_plane_pair(gens);
  if (gens[0].degree() == 1 && gens[1].degree() == 1) return {solve_linear_2x2(gens[0], gens[1], rel)};
  const SeriesPoly& pX = gens[0];
  const Substitution sub = as_substitution(pX, gens[1], rel);
  const Hyperfield& k = pX.field();
  std::vector<Series> roots = p_roots;
  if (roots.empty()) {
    if (pX.degree() != 1) throw UnsupportedError("system outside the supported shapes: give the roots of p(X)");
    roots.push_back(-(pX.coeff({0, 0}) * inv_rel(pX.coeff({1, 0}), rel)));
  }
  std::vector<std::pair<Series, Series>> out;
  for (const auto& r : roots) {
    if (!pX.eval({r, Series(k, pX.rank())}).terms().empty()) throw DomainError("given root does not annihilate p(X)");
    Series y = sub.c;
    for (long i = 0; i < sub.k; ++i) y = y * r;
    out.emplace_back(r, y);
  }
  return out;
}

HarnessCase fundamental_check(const Hom& f, const std::vector<SeriesPoly>& gens, const std::vector<Series>& p_roots,
                              const GroupElem& rel) {
  if (!f.series_source()) throw DomainError("the fundamental harness needs a valuation");
  require_plane_pair(gens);
  HarnessCase hc;
  hc.instance = gens[0].to_string() + " ; " + gens[1].to_string();
  const Hyperfield& t = f.target();
  const Hyperfield& k = gens[0].field();
  const std::size_t rank = gens[0].rank();
  using PointSet = std::set<std::vector<Elem>, std::function<bool(const std::vector<Elem>&, const std::vector<Elem>&)>>;
  PointSet images(point_less), found(point_less);
  for (const auto& [x, y] : solve_series_system(gens, p_roots, rel)) images.insert({f.apply(x), f.apply(y)});
  std::vector<HPoly> system;
  std::vector<Elem> xs, ys;

  if (gens[0].degree() == 1 && gens[1].degree() == 1) {
    const Linear p = as_linear(gens[0]), q = as_linear(gens[1]);
    // Circuits of the row space: eliminate X, Y and the constant.
    const Series det = p.a * q.b - q.a * p.b;
    const Series zero(k, rank);
    std::vector<SeriesPoly> circuits{gens[0], gens[1],
                                     linear_poly(k, rank, det, zero, q.b * p.c - p.b * q.c),
                                     linear_poly(k, rank, zero, det, p.a * q.c - q.a * p.c),
                                     linear_poly(k, rank, q.c * p.a - p.c * q.a, q.c * p.b - p.c * q.b, zero)};
    for (const auto& c : circuits)
      if (!c.coeffs().empty()) system.push_back(pushforward(f, c));
    for (const auto& r : roots_univariate(univariate_in(system[2], 0))) xs.push_back(r.root);
    for (const auto& r : roots_univariate(univariate_in(system[3], 1))) ys.push_back(r.root);
  } else {
    // <p(X), Y - c X^k>: the candidate Y values follow from the X roots.
    const Substitution sub = as_substitution(gens[0], gens[1], rel);
    system = {pushforward(f, gens[0]), pushforward(f, gens[1])};
    const Elem fc = f.apply(sub.c);
    for (const auto& r : roots_univariate(univariate_in(system[0], 0))) {
      xs.push_back(r.root);
      ys.push_back(t.mul(fc, t.pow(r.root, sub.k)));
    }
  }
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (prevariety_member(system, {x, y})) found.insert({x, y});
  hc.expected = format_points(t, images);
  hc.got = format_points(t, found);
  hc.ok = images == found;
  return hc;
}

HarnessSummary fundamental_harness(const Hom& f, std::size_t trials, std::uint64_t seed) {
  HarnessSummary sum;
  sum.name = "fundamental/" + f.name();
  sum.trials = trials;
  Rng rng(seed);
  const Hyperfield& k = f.source();
  const std::size_t rank = f.source_rank();
  std::uniform_int_distribution<int> coin(0, 5);
  std::size_t done = 0;
  while (done < trials) {
    auto coef = [&] { return random_series(rng, k, rank, 3, 4); };
    Series a1 = coef(), b1 = coef(), c1 = coef(), a2 = coef(), b2 = coef(), c2 = coef();
    // Occasionally share a leading term so that cancellations occur.
    if (coin(rng) == 0) a2 = a1 + Series::monomial(k, random_unit(rng, k), GroupElem(Rational(7)));
    if ((a1 * b2 - a2 * b1).is_zero()) continue;
    HarnessCase hc = fundamental_check(f, {linear_poly(k, rank, a1, b1, c1), linear_poly(k, rank, a2, b2, c2)});
    if (!hc.ok) sum.failures.push_back(hc);
    ++done;
  }
  return sum;
}

}  // namespace tropext
