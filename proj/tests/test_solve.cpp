#include "doctest.h"
#include "error.hpp"
#include "hom.hpp"
#include "parse.hpp"
#include "sample.hpp"
#include "dense.hpp"
#include "solve.hpp"

#include <map>

using namespace tropext;

namespace {

Elem el(const Hyperfield& h, const char* s) { return parse_elem(h, s); }
GroupElem lv(const char* q) { return GroupElem(parse_rational(q)); }

// Lower hull of (i, g_i) by brute force: for each pair, the segment is a hull edge iff
// no point lies strictly below its supporting line. Returns slope -> lattice length.
std::map<GroupElem, long> hull_edge_lengths(const HPoly& p) {
  std::vector<std::pair<long, GroupElem>> pts;
  for (const auto& [e, c] : p.terms()) pts.emplace_back(e[0], *c.level);
  std::map<GroupElem, long> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto& [xi, gi] = pts[i];
      const auto& [xj, gj] = pts[j];
      bool edge = true;
      long lo = xi, hi = xj;
      for (const auto& [xk, gk] : pts) {
        // compare (gk - gi)*(xj - xi) with (gj - gi)*(xk - xi)
        GroupElem lhs = (gk - gi).scaled(Integer(xj - xi));
        GroupElem rhs = (gj - gi).scaled(Integer(xk - xi));
        if (lhs < rhs) edge = false;
        if (lhs == rhs) {
          lo = std::min(lo, xk);
          hi = std::max(hi, xk);
        }
      }
      if (!edge) continue;
      GroupElem level = (gi - gj).divided(Integer(xj - xi));
      out[level] = hi - lo;
    }
  return out;
}

}  // namespace

TEST_CASE("Newton cells") {
  auto QQ = Hyperfield::rationals().extend(1);
  auto cells = newton_cells(parse_poly(QQ, "X^2 + (-1,0)*X + (1,1)"));
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].level == lv("0"));
  CHECK(cells[0].J == std::vector<long>{1, 2});
  CHECK(cells[1].level == lv("1"));
  CHECK(cells[1].J == std::vector<long>{0, 1});

  auto T = realize("T");
  auto c2 = newton_cells(parse_poly(T, "X^2 + (1,3)"));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].level == lv("3/2"));
  CHECK(c2[0].J == std::vector<long>{0, 2});

  auto c3 = newton_cells(parse_poly(T, "X + (1,0)"));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].J == std::vector<long>{0, 1});
  CHECK(newton_cells(parse_poly(T, "(1,2)*X^3")).empty());
}

TEST_CASE("base solvers") {
  auto S = Hyperfield::sign();
  auto s = base_roots(S, {{2, Finite{1}}, {1, Finite{2}}, {0, Finite{1}}});
  CHECK(s.units.size() == 1);
  CHECK(compare_units(s.units[0], Unit{Finite{1}}) == 0);

  auto Q = Hyperfield::rationals();
  auto q = base_roots(Q, {{1, Rational(-1)}, {2, Rational(1)}});
  REQUIRE(q.units.size() == 1);
  CHECK(compare_units(q.units[0], Unit{Rational(1)}) == 0);
  CHECK(base_roots(Q, {{2, Rational(1)}, {0, Rational(-2)}}).units.empty());

  auto K = Hyperfield::krasner();
  auto k = base_roots(K, {{0, Finite{1}}, {2, Finite{1}}});
  REQUIRE(k.units.size() == 1);

  auto Qi = Hyperfield::gaussian();
  auto g = base_roots(Qi, {{2, Gaussian{1, 0}}, {0, Gaussian{1, 0}}});
  CHECK(g.units.size() == 2);  // +-i
  // (x - (1+2i))(x - 3)(x + i/2) expanded, found by the divisor search
  auto cubic = parse_poly(Qi, "X^3 + (-4-3/2i)*X^2 + (4+4i)*X + (-3+3/2i)");
  std::vector<std::pair<long, Unit>> terms;
  for (const auto& [e, c] : cubic.terms()) terms.emplace_back(e[0], c.unit);
  auto gr = base_roots(Qi, terms);
  CHECK(gr.units.size() == 3);

  auto P = Hyperfield::phase();
  CHECK_FALSE(base_roots(P, {{0, make_direction(1, 0)}, {1, make_direction(1, 0)}}).enumerable);
}

TEST_CASE("univariate roots over extensions") {
  auto QQ = Hyperfield::rationals().extend(1);
  auto roots = roots_univariate(parse_poly(QQ, "X^2 + (-1,0)*X + (1,1)"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].root == el(QQ, "(1,1)"));
  CHECK(roots[1].root == el(QQ, "(1,0)"));
  CHECK(roots[0].multiplicity == 1);

  // the same polynomial from the series side
  auto fval = Hom::fval(Hyperfield::rationals());
  auto p = product_of_linear_factors({parse_series("t"), parse_series("1+t")});
  CHECK(pushforward(fval, p) == parse_poly(QQ, "X^2 + (-1,0)*X + (1,1)"));

  auto T = realize("T");
  auto troots = roots_univariate(pushforward(Hom::val(Hyperfield::rationals()), p));
  REQUIRE(troots.size() == 2);
  CHECK(troots[0].root == el(T, "1"));
  CHECK(troots[1].root == el(T, "0"));

  auto r2 = roots_univariate(parse_poly(T, "X^2 + (1,3)"));
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].root == el(T, "3/2"));
  CHECK(r2[0].multiplicity == 2);

  auto rz = roots_univariate(parse_poly(T, "X^3 + X^2"));
  REQUIRE(rz.size() == 2);
  CHECK(rz[1].root.is_zero());
  CHECK(rz[1].multiplicity == 2);
}

TEST_CASE("multiplicities") {
  auto K = Hyperfield::krasner();
  CHECK(multiplicity(parse_poly(K, "X + 1"), el(K, "1")) == 1);
  auto T = realize("T");
  CHECK(multiplicity(parse_poly(T, "X^2 + (1,3)"), el(T, "3/2")) == 2);
  CHECK(multiplicity(parse_poly(T, "X^2 + (1,3)"), el(T, "1")) == 0);
  auto S = Hyperfield::sign();
  // Two sign changes: X^2 - X + 1 = (X - 1)(X - 1) in the division sense.
  CHECK(multiplicity(parse_poly(S, "X^2 - X + 1"), el(S, "1")) == 2);
  CHECK(multiplicity(parse_poly(S, "X^2 - X + 1"), el(S, "-1")) == 0);
  CHECK_THROWS_AS(multiplicity(parse_poly(T, "X^9 + (1,0)"), el(T, "0")), DomainError);
}

TEST_CASE("multiplicity over T matches the lattice length of Newton polygon edges") {
  auto T = realize("T");
  ElemSampler smp(T, 67);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int i = 0; i < 100; ++i) {
    const int d = deg(smp.rng());
    HPoly p(T, 1);
    for (int k = 0; k < d; ++k) p.set_term({k}, smp.next());
    p.set_term({d}, smp.next_nonzero());
    if (p.terms().begin()->first[0] > 0) p.set_term({0}, smp.next_nonzero());
    auto expected = hull_edge_lengths(p);
    auto roots = roots_univariate(p);
    CHECK(roots.size() == expected.size());
    long total = 0;
    for (const auto& r : roots) {
      REQUIRE(expected.count(*r.root.level));
      CHECK(r.multiplicity == expected[*r.root.level]);
      total += r.multiplicity;
    }
    CHECK(total == d);
  }
}

TEST_CASE("multiplicity bound") {
  CHECK(mult_bound_check(realize("T"), 100, 6, 1).passed());
  CHECK(mult_bound_check(realize("TR"), 100, 6, 2).passed());
  CHECK(mult_bound_check(Hyperfield::sign(), 0, 3, 0, true).passed());
  CHECK(mult_bound_check(Hyperfield::krasner(), 0, 4, 0, true).passed());
  CHECK(mult_bound_check(Hyperfield::quotient(7, {1, 2, 3, 4, 5, 6}), 0, 3, 0, true).passed());
  CHECK(mult_bound_check(Hyperfield::quotient(5, {1}), 0, 3, 0, true).passed());
  CHECK(mult_bound_check(Hyperfield::finite_field(5), 0, 3, 0, true).passed());
  auto p = mult_bound_check(Hyperfield::phase(), 10, 3, 0);
  CHECK_FALSE(p.applicable);
  CHECK(p.note.find("root set infinite (arc)") != std::string::npos);
}

TEST_CASE("non-stringent quotients exceed the multiplicity bound") {
  // GF(5)/{1,4}: x^2 - 1 and x^2 + 4 both have coefficient classes (1, 0, 1), with double roots
  // in the classes of 1 and of 2 respectively, so X^2 + 1 gets total multiplicity 4.
  auto H = Hyperfield::quotient(5, {1, 4});
  auto p = parse_poly(H, "X^2 + 1");
  CHECK(multiplicity(p, el(H, "1")) == 2);
  CHECK(multiplicity(p, el(H, "2")) == 2);
  CHECK_FALSE(H.is_stringent());
  CHECK_FALSE(mult_bound_check(H, 0, 2, 0, true).passed());
  CHECK_FALSE(mult_bound_check(Hyperfield::quotient(7, {1, 2, 4}), 0, 2, 0, true).passed());
}

TEST_CASE("Sturm counts") {
  using dense::QPoly;
  CHECK(dense::sturm_count(QPoly{Rational(1), Rational(-1), Rational(1)}, false) == 0);
  CHECK(dense::sturm_count(QPoly{Rational(-2), Rational(0), Rational(1)}, false) == 1);
  CHECK(dense::sturm_count(QPoly{Rational(-2), Rational(0), Rational(1)}, true) == 1);
  // (x-1)(x-2)(x+3)
  CHECK(dense::sturm_count(QPoly{Rational(6), Rational(-7), Rational(0), Rational(1)}, false) == 2);
}

TEST_CASE("relatively algebraically closed instances") {
  auto S = Hyperfield::sign();
  auto sgn = Hom::sign();
  auto p = parse_poly(Hyperfield::rationals(), "X^2 - X + 1");
  CHECK(is_root(pushforward(sgn, p), {el(S, "1")}));
  auto r = rac_check_instance(sgn, p, el(S, "1"));
  CHECK(r.status == RacStatus::Counterexample);
  auto r2 = rac_check_instance(sgn, parse_poly(Hyperfield::rationals(), "X^2 - 2"), el(S, "-1"));
  CHECK(r2.status == RacStatus::Lift);
  CHECK_FALSE(r2.lift);

  auto fval = Hom::fval(Hyperfield::rationals());
  std::vector<Series> corpus{parse_series("t"), parse_series("1+t"), parse_series("2")};
  auto sp = product_of_linear_factors({corpus[0], corpus[1]});
  auto QQ = Hyperfield::rationals().extend(1);
  auto lift = rac_check_instance(fval, sp, el(QQ, "(1,1)"), corpus);
  CHECK(lift.status == RacStatus::Lift);
  CHECK(*lift.series_lift == parse_series("t"));
}

TEST_CASE("omega on finite quotients is not relatively algebraically closed") {
  // X^2 + 1 over GF(7)/{1,2,4}: omega_* gives X^2 + 1 over K with root 1, but the sum
  // A + A for the nonzero cosets never contains 0 because -1 is not in {1,2,4}.
  auto H = Hyperfield::quotient(7, {1, 2, 4});
  auto w = Hom::trivial(H);
  auto K = Hyperfield::krasner();
  std::size_t polys = 0, counterexamples = 0;
  const auto elems = H.elements();
  for (const auto& c0 : elems)
    for (const auto& c1 : elems)
      for (const auto& c2 : elems) {
        HPoly p(H, 1);
        p.set_term({0}, c0);
        p.set_term({1}, c1);
        p.set_term({2}, c2);
        if (p.degree() < 1) continue;
        HPoly img = pushforward(w, p);
        for (const auto& beta : K.elements()) {
          if (!is_root(img, {beta})) continue;
          ++polys;
          auto res = rac_check_instance(w, p, beta);
          if (res.status != RacStatus::Lift) ++counterexamples;
          // definitive: check the fibre by hand
          bool any = false;
          for (const auto& a : elems)
            if (w.apply(a) == beta && is_root(p, {a})) any = true;
          CHECK(any == (res.status == RacStatus::Lift));
        }
      }
  CHECK(polys > 0);
  CHECK(counterexamples > 0);
  HPoly x2p1 = parse_poly(H, "X^2 + 1");
  CHECK(rac_check_instance(w, x2p1, el(K, "1")).status == RacStatus::Counterexample);

  // Full unit group: the quotient is K itself and omega is an isomorphism.
  auto Kq = Hyperfield::quotient(7, {1, 2, 3, 4, 5, 6});
  auto wk = Hom::trivial(Kq);
  for (const auto& c0 : Kq.elements())
    for (const auto& c1 : Kq.elements())
      for (const auto& c2 : Kq.elements()) {
        HPoly p(Kq, 1);
        p.set_term({0}, c0);
        p.set_term({1}, c1);
        p.set_term({2}, c2);
        if (p.degree() < 1) continue;
        for (const auto& beta : K.elements())
          if (is_root(pushforward(wk, p), {beta})) CHECK(rac_check_instance(wk, p, beta).status == RacStatus::Lift);
      }
}

TEST_CASE("omega extended to K x| Q on sampled polynomials") {
  auto Kq = Hyperfield::quotient(5, {1, 2, 3, 4});
  auto f = Hom::extended(Hom::trivial(Kq));
  ElemSampler smp(Kq.extend(1), 71);
  std::uniform_int_distribution<int> deg(1, 4);
  int lifts = 0;
  for (int i = 0; i < 100; ++i) {
    const int d = deg(smp.rng());
    HPoly p(Kq.extend(1), 1);
    for (int k = 0; k <= d; ++k) p.set_term({k}, k == d ? smp.next_nonzero() : smp.next());
    HPoly img = pushforward(f, p);
    for (const auto& r : roots_univariate(img)) {
      auto res = rac_check_instance(f, p, r.root);
      CHECK(res.status == RacStatus::Lift);
      ++lifts;
    }
  }
  CHECK(lifts > 0);
}

TEST_CASE("Kapranov instances") {
  auto Q = Hyperfield::rationals();
  CHECK(kapranov_check(Hom::fval(Q), {parse_series("t"), parse_series("1+t")}).ok);
  auto dbl = kapranov_check(Hom::val(Q), {parse_series("t"), parse_series("t")});
  CHECK(dbl.ok);
  CHECK(dbl.got == "{(1,1)^2}");
  auto sv = kapranov_check(Hom::sval(), {parse_series("1+t"), parse_series("-1+t")});
  CHECK(sv.ok);
  CHECK(sv.got == "{(1,0), (-1,0)}");
  auto ph = kapranov_check(Hom::phval(), {parse_series("1+t", Hyperfield::gaussian()),
                                          parse_series("i - t", Hyperfield::gaussian())});
  CHECK(ph.ok);
}

TEST_CASE("Kapranov harness on random products") {
  auto Q = Hyperfield::rationals();
  for (const auto& f : {Hom::val(Q), Hom::sval(), Hom::fval(Q), Hom::phval(), Hom::val(Hyperfield::finite_field(7)),
                        Hom::fval(Hyperfield::finite_field(5))}) {
    auto s = kapranov_harness(f, 40, 73);
    INFO(s.name);
    CHECK(s.passed());
    for (const auto& c : s.failures) MESSAGE(c.instance << " expected " << c.expected << " got " << c.got);
  }
}

TEST_CASE("fundamental theorem instances") {
  auto Q = Hyperfield::rationals();
  std::vector<SeriesPoly> ex{parse_series_poly("X + Y - 1"), parse_series_poly("t*X + (1+t^2)*Y + 1")};
  auto a = fundamental_check(Hom::fval(Q), ex);
  CHECK(a.ok);
  CHECK(a.got == "{((2,0), (-1,0))}");
  auto b = fundamental_check(Hom::val(Q), ex);
  CHECK(b.ok);
  CHECK(b.got == "{((1,0), (1,0))}");
  auto c = fundamental_check(Hom::fval(Q), {parse_series_poly("X - t", Q, 2), parse_series_poly("Y - X^2", Q, 2)});
  CHECK(c.ok);
  CHECK(c.got == "{((1,1), (1,2))}");
  auto [x, y] = solve_linear_2x2(ex[0], ex[1], GroupElem(3));
  CHECK(x == parse_series("2 + 2*t + t^2 + O(t^3)"));
  CHECK(y == parse_series("-1 - 2*t - t^2 + O(t^3)"));
  CHECK_THROWS_WITH_AS(solve_linear_2x2(parse_series_poly("X + Y"), parse_series_poly("2*X + 2*Y + 1"), GroupElem(3)),
                       doctest::Contains("no isolated solution"), DomainError);
}

TEST_CASE("fundamental harness on random systems") {
  auto Q = Hyperfield::rationals();
  for (const auto& f : {Hom::fval(Q), Hom::val(Q), Hom::sval()}) {
    auto s = fundamental_harness(f, 30, 79);
    INFO(s.name);
    CHECK(s.passed());
    for (const auto& c : s.failures) MESSAGE(c.instance << " expected " << c.expected << " got " << c.got);
  }
}
