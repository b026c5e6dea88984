#include "axioms.hpp"
#include "doctest.h"
#include "error.hpp"
#include "hom.hpp"
#include "hyperfield.hpp"
#include "sample.hpp"

using namespace tropext;

namespace {

GroupElem lv(const char* q) { return GroupElem(parse_rational(q)); }
Elem pair(Unit u, const char* g) { return Elem{std::move(u), lv(g)}; }
Unit plus() { return Finite{1}; }
Unit minus() { return Finite{2}; }

SetValue level_set(const Hyperfield& h, std::initializer_list<Unit> units, const char* g, bool tail) {
  BaseSet b = h.base().base_empty();
  for (const auto& u : units) b = h.base().base_unite(b, h.base().base_singleton(u));
  return SetValue{b, true, lv(g), tail};
}

}  // namespace

TEST_CASE("tropical extension sums") {
  auto T = realize("T");
  CHECK(T.add(pair(plus(), "3"), pair(plus(), "3")) == level_set(T, {plus()}, "3", true));

  auto TR = realize("TR");
  SetValue cancel = TR.add(pair(plus(), "0"), pair(minus(), "0"));
  CHECK(cancel == level_set(TR, {plus(), minus()}, "0", true));
  CHECK(TR.contains(cancel, pair(minus(), "7/2")));
  CHECK(TR.contains(cancel, Elem::zero()));
  CHECK_FALSE(TR.contains(cancel, pair(plus(), "-1")));

  CHECK(TR.add(pair(plus(), "1"), pair(minus(), "2")) == TR.singleton(pair(plus(), "1")));
}

TEST_CASE("extension products") {
  auto T = realize("T");
  CHECK(T.mul(pair(plus(), "2"), pair(plus(), "5")) == pair(plus(), "7"));
  auto TR = realize("TR");
  CHECK(TR.mul(pair(minus(), "1"), pair(minus(), "1")) == pair(plus(), "2"));
  auto TC = realize("TC");
  CHECK(TC.mul(pair(make_direction(0, 1), "0"), pair(make_direction(0, 1), "0")) ==
        pair(make_direction(-1, 0), "0"));
  CHECK(TC.mul(Elem::zero(), pair(make_direction(0, 1), "0")).is_zero());
}

TEST_CASE("realizations") {
  auto T = realize("T");
  CHECK(T.rank() == 1);
  CHECK(T.base() == Hyperfield::krasner());
  CHECK(realize("TR").base() == Hyperfield::sign());
  CHECK(realize("TC").base() == Hyperfield::tropical_phase());
  auto T2 = realize("T^2");
  CHECK(T2.rank() == 2);
  CHECK(T2.base() == Hyperfield::krasner());
  CHECK(Hyperfield::krasner().extend(1).extend(1) == T2);
  CHECK_THROWS_AS(realize("TX"), DomainError);
}

TEST_CASE("extended homomorphisms") {
  auto omega = Hom::extended(Hom::trivial(Hyperfield::tropical_phase()));
  CHECK(omega.source() == realize("TC"));
  CHECK(omega.target() == realize("T"));
  CHECK(omega.apply(pair(make_direction(1, 1), "5")) == pair(Finite{1}, "5"));
  CHECK(omega.apply(Elem::zero()).is_zero());
  auto id = Hom::extended(Hom::identity(Hyperfield::sign()));
  CHECK(id.apply(pair(minus(), "2")) == pair(minus(), "2"));
}

TEST_CASE("extension axioms on sampled triples") {
  std::vector<Hyperfield> hs{realize("T"), realize("TR"), realize("TC"), Hyperfield::rationals().extend(1),
                             Hyperfield::quotient(7, {1, 2, 4}).extend(1), realize("T^2")};
  for (const auto& h : hs) {
    auto rep = check_axioms(h, false, 1000, 11);
    INFO(h.key());
    CHECK(rep.triples >= 1000);
    CHECK(rep.passed());
    if (!rep.passed()) MESSAGE(rep.violations.front().axiom << ": " << rep.violations.front().instance);
  }
}

TEST_CASE("stringency is inherited from the base") {
  for (const auto& base : {Hyperfield::krasner(), Hyperfield::sign(), Hyperfield::weak_sign(), Hyperfield::phase(),
                           Hyperfield::tropical_phase(), Hyperfield::rationals(), Hyperfield::finite_field(5)}) {
    CHECK(base.extend(1).is_stringent() == base.is_stringent());
  }
  CHECK(realize("T").is_stringent());
  CHECK(realize("TR").is_stringent());
  CHECK_FALSE(realize("TC").is_stringent());
}

TEST_CASE("extended homomorphism laws on samples") {
  std::vector<Hom> homs{Hom::extended(Hom::trivial(Hyperfield::tropical_phase())),
                        Hom::extended(Hom::trivial(Hyperfield::sign())),
                        Hom::extended(Hom::trivial(Hyperfield::quotient(7, {1, 2, 4}))),
                        Hom::extended(Hom::quotient(Hyperfield::finite_field(7), Hyperfield::quotient(7, {1, 6}))),
                        Hom::extended(Hom::sign()), Hom::extended(Hom::phase(true), 2)};
  for (const auto& f : homs) {
    auto rep = hom_check(f, 1000, 5);
    INFO(f.name() << " on " << f.source().key());
    CHECK(rep.laws_hold());
    if (!rep.laws_hold()) MESSAGE(rep.violations.front().law << ": " << rep.violations.front().instance);
  }
}

TEST_CASE("lower level dominates") {
  for (const auto& h : {realize("T"), realize("TR"), realize("TC"), Hyperfield::rationals().extend(2)}) {
    ElemSampler smp(h, 3);
    for (int i = 0; i < 500; ++i) {
      Elem a = smp.next_nonzero(), b = smp.next_nonzero();
      if (*a.level == *b.level) continue;
      const Elem& low = *a.level < *b.level ? a : b;
      CHECK(h.add(a, b) == h.singleton(low));
    }
  }
}
