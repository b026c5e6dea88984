#include "doctest.h"
#include "error.hpp"
#include "hom.hpp"
#include "series.hpp"

using namespace tropext;

namespace {

const Hyperfield& Q() {
  static const Hyperfield q = Hyperfield::rationals();
  return q;
}
GroupElem lv(const char* q) { return GroupElem(parse_rational(q)); }
Series mono(const char* c, const char* e) { return Series::monomial(Q(), parse_rational(c), lv(e)); }
Series one() { return Series::constant(Q(), Rational(1)); }

// Smallest exponent, read off the term map directly.
std::optional<GroupElem> min_exponent(const Series& s) {
  std::optional<GroupElem> m;
  for (const auto& [e, c] : s.terms())
    if (!m || e < *m) m = e;
  return m;
}

}  // namespace

TEST_CASE("series inverse multiplies back to one") {
  Series a = one() - mono("1", "1") + mono("1", "2");
  Series inv = a.inv(lv("4"));
  CHECK(inv == one() + mono("1", "1") - mono("1", "3") + Series::unknown(Q(), lv("4")));
  Series back = a * inv;
  CHECK(back == one() + Series::unknown(Q(), lv("4")));
}

TEST_CASE("quotient of the leading example") {
  Series num = Series::constant(Q(), Rational(2)) + mono("1", "2");
  Series den = one() - mono("1", "1") + mono("1", "2");
  Series x = (num * den.inv(lv("3")));
  CHECK(x == Series::constant(Q(), Rational(2)) + mono("2", "1") + mono("1", "2") + Series::unknown(Q(), lv("3")));
  CHECK(x.to_string() == "2 + 2*t + t^2 + O(t^3)");
  auto [c, g] = x.leading_term();
  CHECK(compare_units(c, Unit{Rational(2)}) == 0);
  CHECK(g == lv("0"));
}

TEST_CASE("series basics") {
  Series a = mono("3", "2") + mono("5", "7");
  auto [c, g] = a.leading_term();
  CHECK(compare_units(c, Unit{Rational(3)}) == 0);
  CHECK(g == lv("2"));
  CHECK((a + (-a)).is_zero());
  CHECK_THROWS_AS(Series(Q()).leading_term(), DomainError);
  CHECK_THROWS_WITH_AS(Series::unknown(Q(), lv("3")).leading_term(), doctest::Contains("insufficient precision"),
                       PrecisionError);
  Series y = Series::constant(Q(), Rational(-1)) - mono("2", "1") - mono("1", "2") + Series::unknown(Q(), lv("3"));
  CHECK(y.leading_term().second == lv("0"));
  CHECK(y.to_string() == "-1 - 2*t - t^2 + O(t^3)");
  CHECK_THROWS_AS(Series(Q()).inv(lv("2")), DomainError);
  CHECK_THROWS_AS(Series::unknown(Q(), lv("1")).inv(lv("2")), PrecisionError);
}

TEST_CASE("precision propagation") {
  Series a = one() + mono("1", "1") + Series::unknown(Q(), lv("3"));
  Series b = mono("1", "1") + Series::unknown(Q(), lv("2"));
  // prec(a*b) = min(val a + prec b, val b + prec a) = min(2, 4)
  CHECK((a * b).precision() == lv("2"));
  CHECK((a + b).precision() == lv("2"));
  // inverse loses the relative precision
  Series c = mono("1", "1") + mono("1", "2") + Series::unknown(Q(), lv("4"));
  CHECK(c.inv(lv("10")).precision() == lv("2"));
}

TEST_CASE("higher precision never changes determined terms") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Series a = random_series(rng, Q(), 1, 4, 4);
    Series lo = a.inv(lv("3")), hi = a.inv(lv("6"));
    CHECK(hi.truncated(lv("3")) == lo);
    Series back = a * hi;
    auto p = *back.precision();
    CHECK(back == one().truncated(p));
  }
}

TEST_CASE("valuation images of series") {
  auto fval = Hom::fval(Q());
  Series x = Series::constant(Q(), Rational(2)) + mono("2", "1") + mono("1", "2") + Series::unknown(Q(), lv("3"));
  CHECK(fval.apply(x) == Elem{Rational(2), lv("0")});
  auto sval = Hom::sval();
  CHECK(sval.apply(mono("-3", "1/2") + mono("1", "1")) == Elem{Finite{2}, lv("1/2")});
  auto val = Hom::val(Q());
  CHECK(val.apply(Series(Q())).is_zero());
  CHECK(val.apply(mono("5", "-2/3")) == Elem{Finite{1}, lv("-2/3")});
  auto Qi = Hyperfield::gaussian();
  auto phval = Hom::phval();
  CHECK(phval.target() == Hyperfield::phase().extend(1));
  CHECK(phval.apply(Series::monomial(Qi, Gaussian{Rational(-2), Rational(2)}, lv("1"))) ==
        Elem{make_direction(-1, 1), lv("1")});
  CHECK_THROWS_AS(fval.apply(Series::unknown(Q(), lv("1"))), PrecisionError);
}

TEST_CASE("valuation axioms on samples") {
  Rng rng(23);
  auto val = Hom::val(Q());
  for (int i = 0; i < 1000; ++i) {
    Series a = random_series(rng, Q()), b = random_series(rng, Q());
    if (i % 4 == 0) b = b - Series::monomial(Q(), a.leading_term().first, a.leading_term().second);
    if (b.is_zero()) continue;
    auto va = *min_exponent(a), vb = *min_exponent(b);
    CHECK(*min_exponent(a * b) == va + vb);
    CHECK(*val.apply(a * b).level == va + vb);
    Series s = a + b;
    if (s.is_zero()) continue;
    auto vs = *min_exponent(s);
    CHECK(vs >= std::min(va, vb));
    if (!(va == vb)) CHECK(vs == std::min(va, vb));
  }
}

TEST_CASE("fval is multiplicative on leading terms") {
  Rng rng(29);
  for (const auto& k : {Q(), Hyperfield::gaussian(), Hyperfield::finite_field(7)}) {
    auto f = Hom::fval(k);
    for (int i = 0; i < 1000; ++i) {
      Series a = random_series(rng, k), b = random_series(rng, k);
      CHECK(f.apply(a * b) == f.target().mul(f.apply(a), f.apply(b)));
    }
  }
}

TEST_CASE("homomorphism checks") {
  CHECK(hom_check(Hom::fval(Q()), 500, 1).passed());
  CHECK(hom_check(Hom::val(Hyperfield::finite_field(7)), 500, 2).passed());
  CHECK(hom_check(Hom::sval(), 500, 3).passed());
  CHECK(hom_check(Hom::phval(), 500, 4).passed());
  CHECK(hom_check(Hom::val(Q(), 2), 300, 5).passed());
  CHECK(hom_check(Hom::sign(), 500, 6).passed());
  CHECK(hom_check(Hom::phase(), 500, 7).passed());
  CHECK(hom_check(Hom::compose(Hom::fval(Q()), Hom::extended(Hom::sign())), 300, 8).passed());
}

TEST_CASE("sum lifting fails for the weak sign map") {
  auto rep = hom_check(Hom::sign(true), 500, 9, true);
  CHECK(rep.laws_hold());
  CHECK(rep.lifts_checked);
  CHECK_FALSE(rep.passed());
  CHECK(std::find(rep.missing_lifts.begin(), rep.missing_lifts.end(), "-1 in 1 + 1") != rep.missing_lifts.end());
  CHECK(std::find(rep.missing_lifts.begin(), rep.missing_lifts.end(), "1 in -1 + -1") != rep.missing_lifts.end());
  CHECK(rep.missing_lifts.size() == 2);

  auto strict = hom_check(Hom::sign(false), 500, 9, true);
  CHECK(strict.passed());

  auto quot = hom_check(Hom::quotient(Hyperfield::finite_field(7), Hyperfield::quotient(7, {1, 2, 4})), 200, 1, true);
  CHECK(quot.lifts_exhaustive);
  CHECK(quot.passed());
}

TEST_CASE("trivial homomorphism") {
  auto S = Hyperfield::sign();
  auto w = Hom::trivial(S);
  CHECK(w.apply(Elem{Finite{2}, std::nullopt}) == Elem{Finite{1}, std::nullopt});
  CHECK(w.apply(Elem::zero()).is_zero());
  CHECK(Hom::trivial(Hyperfield::phase()).apply(Elem{make_direction(1, 1), std::nullopt}) ==
        Elem{Finite{1}, std::nullopt});
  for (const auto& h : {S, Hyperfield::phase(), Hyperfield::weak_sign(), realize("TR"), Hyperfield::quotient(7, {1, 2, 4})})
    CHECK(hom_check(Hom::trivial(h), 500, 10).laws_hold());
}
