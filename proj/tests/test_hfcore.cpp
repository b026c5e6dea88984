#include "axioms.hpp"
#include "doctest.h"
#include "error.hpp"
#include "hyperfield.hpp"
#include "oracles.hpp"
#include "sample.hpp"

using namespace tropext;

namespace {

Elem fin(std::uint32_t i) { return Elem{Finite{i}, std::nullopt}; }
Elem sgn(int s) { return s == 0 ? Elem::zero() : fin(s > 0 ? 1 : 2); }
Elem dir(long x, long y) { return Elem{make_direction(x, y), std::nullopt}; }

SetValue fin_set(std::initializer_list<std::uint32_t> idx) {
  FiniteSet f;
  for (auto i : idx) f.mask.set(i);
  return SetValue{f};
}

}  // namespace

TEST_CASE("multiplication and inverses") {
  auto S = Hyperfield::sign();
  CHECK(S.mul(sgn(-1), sgn(-1)) == sgn(1));
  CHECK(S.inv(sgn(-1)) == sgn(-1));
  auto P = Hyperfield::phase();
  CHECK(P.mul(dir(0, 1), dir(0, 1)) == dir(-1, 0));
  CHECK(P.inv(dir(1, 1)) == dir(1, -1));
  auto K = Hyperfield::krasner();
  CHECK(K.mul(fin(1), fin(1)) == fin(1));
  CHECK_THROWS_WITH_AS(S.inv(Elem::zero()), "no inverse of zero", DomainError);

  auto F7 = Hyperfield::finite_field(7);
  std::uint32_t brute = 0;
  for (std::uint32_t x = 1; x < 7; ++x)
    if ((3 * x) % 7 == 1) brute = x;
  CHECK(brute == 5);
  CHECK(F7.inv(fin(3)) == fin(brute));
}

TEST_CASE("elementary hypersums") {
  auto K = Hyperfield::krasner();
  CHECK(K.add(fin(1), fin(1)) == fin_set({0, 1}));
  auto S = Hyperfield::sign();
  CHECK(S.add(sgn(1), sgn(-1)) == fin_set({0, 1, 2}));
  CHECK(S.add(sgn(1), sgn(1)) == fin_set({1}));
  auto W = Hyperfield::weak_sign();
  CHECK(W.add(sgn(1), sgn(1)) == fin_set({1, 2}));
  CHECK(W.add(sgn(-1), sgn(-1)) == fin_set({1, 2}));
  auto Q = Hyperfield::rationals();
  auto q = [](const char* s) { return Elem{parse_rational(s), std::nullopt}; };
  Elem out;
  CHECK(Q.singleton_value(Q.add(q("1/2"), q("1/3")), &out));
  CHECK(out == q("5/6"));
  CHECK(Q.contains_zero(Q.add(q("2"), q("-2"))));
}

TEST_CASE("phase sums are exact arcs") {
  auto P = Hyperfield::phase();
  auto arc = P.add(dir(1, 0), dir(0, 1));
  CHECK(P.contains(arc, dir(1, 1)));
  CHECK_FALSE(P.contains(arc, dir(1, 0)));
  CHECK_FALSE(P.contains(arc, dir(0, 1)));
  CHECK_FALSE(P.contains_zero(arc));
  CHECK(P.add(dir(2, 3), dir(-2, -3)) ==
        P.hyperadd(P.hyperadd(P.singleton(dir(2, 3)), P.singleton(dir(-2, -3))), P.singleton(Elem::zero())));
  auto anti = P.add(dir(2, 3), dir(-2, -3));
  CHECK(P.contains_zero(anti));
  CHECK(P.contains(anti, dir(2, 3)));
  CHECK(P.contains(anti, dir(-2, -3)));
  CHECK_FALSE(P.contains(anti, dir(3, 2)));

  auto Phi = Hyperfield::tropical_phase();
  auto closed = Phi.add(dir(1, 0), dir(0, 1));
  CHECK(Phi.contains(closed, dir(1, 0)));
  CHECK(Phi.contains(closed, dir(0, 1)));
  CHECK(Phi.contains(closed, dir(5, 1)));
  CHECK_FALSE(Phi.contains(closed, dir(-1, 1)));
  auto all = Phi.add(dir(1, 2), dir(-1, -2));
  CHECK(Phi.contains_zero(all));
  CHECK(Phi.contains(all, dir(7, -3)));
}

TEST_CASE("arc membership") {
  auto P = Hyperfield::phase();
  auto arc = P.add(dir(0, -1), dir(-1, 1));
  Rational l, m;
  REQUIRE(oracle::solve_combination(Direction{-1, 0}, Direction{0, -1}, Direction{-1, 1}, l, m));
  CHECK(l == 1);
  CHECK(m == 1);
  CHECK(P.contains(arc, dir(-1, 0)));
  auto S = Hyperfield::sign();
  CHECK(S.contains(S.add(sgn(1), sgn(-1)), sgn(-1)));
  auto K = Hyperfield::krasner();
  CHECK_FALSE(K.contains_zero(K.singleton(fin(1))));
}

TEST_CASE("phase membership agrees with the positive-combination oracle") {
  auto P = Hyperfield::phase();
  auto Phi = Hyperfield::tropical_phase();
  Rng rng(5);
  std::uniform_int_distribution<int> c(-9, 9);
  auto rnd = [&] {
    for (;;) {
      int x = c(rng), y = c(rng);
      if (x || y) return make_direction(x, y);
    }
  };
  int checked = 0;
  while (checked < 1000) {
    Direction a = rnd(), b = rnd(), u = rnd();
    if (cross(a, b) == 0) continue;
    ++checked;
    Elem ea{a, std::nullopt}, eb{b, std::nullopt}, eu{u, std::nullopt};
    CHECK(P.contains(P.add(ea, eb), eu) == oracle::in_open_cone(u, a, b));
    CHECK(Phi.contains(Phi.add(ea, eb), eu) == oracle::in_closed_cone(u, a, b));
  }
}

TEST_CASE("n-ary sums fold from the left") {
  auto S = Hyperfield::sign();
  auto left = S.nary_sum({sgn(1), sgn(1), sgn(-1)});
  auto right = S.hyperadd(S.singleton(sgn(1)), S.add(sgn(1), sgn(-1)));
  CHECK(left == fin_set({0, 1, 2}));
  CHECK(left == right);
  auto K = Hyperfield::krasner();
  CHECK(K.nary_sum({fin(1)}) == fin_set({1}));
  CHECK_THROWS_AS(K.nary_sum({}), DomainError);
  auto P = Hyperfield::phase();
  CHECK(P.contains_zero(P.nary_sum({dir(0, -1), dir(-1, 1), dir(1, 0)})));
}

TEST_CASE("quotient hyperfields") {
  auto h = Hyperfield::quotient(7, {1, 2, 4});
  const FiniteTable* t = h.table();
  REQUIRE(t->size() == 3);
  // Cosets enumerated by brute force over GF(7).
  for (std::uint32_t a = 1; a < 7; ++a) {
    std::uint32_t expected = (a == 1 || a == 2 || a == 4) ? 1 : 2;
    CHECK(t->coset_of(a) == expected);
  }
  CHECK(t->name(2) == "3");

  auto g5 = Hyperfield::quotient(5, {1, 4});
  CHECK(g5.contains_zero(g5.add(fin(1), fin(1))));

  auto g3 = Hyperfield::quotient(3, {1});
  auto f3 = Hyperfield::finite_field(3);
  for (auto& a : f3.elements())
    for (auto& b : f3.elements()) CHECK(g3.add(a, b) == f3.add(a, b));

  CHECK_THROWS_AS(Hyperfield::quotient(7, {1, 3}), DomainError);
  CHECK_THROWS_AS(Hyperfield::quotient(7, {2, 4}), DomainError);
  CHECK_THROWS_AS(Hyperfield::finite_field(6), DomainError);
}

TEST_CASE("prime power fields") {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u}) {
    auto F = Hyperfield::finite_field(q);
    auto r = check_axioms(F, false, 400, q);
    CHECK(r.passed());
    CHECK(F.is_stringent());
    // The units form a group of order q - 1: x^(q-1) = 1.
    for (auto& x : F.elements())
      if (!x.is_zero()) CHECK(F.pow(x, q - 1) == F.one());
  }
}

TEST_CASE("axioms on finite and sampled hyperfields") {
  for (auto h : {Hyperfield::krasner(), Hyperfield::sign(), Hyperfield::weak_sign(), Hyperfield::finite_field(5)}) {
    auto r = check_axioms(h, true, 0, 0);
    CHECK_MESSAGE(r.passed(), h.key());
  }
  auto P = check_axioms(Hyperfield::phase(), false, 200, 3);
  CHECK(P.passed());
  CHECK_FALSE(P.stringent);
  auto W = check_axioms(Hyperfield::weak_sign(), true, 0, 0);
  CHECK(W.passed());
  CHECK_FALSE(W.stringent);
}

TEST_CASE("stringency") {
  CHECK(Hyperfield::sign().is_stringent());
  CHECK(Hyperfield::krasner().is_stringent());
  CHECK_FALSE(Hyperfield::phase().is_stringent());
  CHECK_FALSE(Hyperfield::weak_sign().is_stringent());
  CHECK(Hyperfield::rationals().is_stringent());
}

TEST_CASE("every quotient of small fields satisfies the axioms") {
  // All subgroups of GF(q)^x for a few q: the unit group is cyclic, so subgroups are powers of a generator.
  for (std::uint32_t q : {5u, 7u, 9u, 13u}) {
    auto F = Hyperfield::finite_field(q);
    Elem gen;
    for (auto& x : F.elements()) {
      if (x.is_zero()) continue;
      std::uint32_t order = 1;
      for (Elem y = x; !(y == F.one()); y = F.mul(y, x)) ++order;
      if (order == q - 1) {
        gen = x;
        break;
      }
    }
    for (std::uint32_t d = 1; d <= q - 1; ++d) {
      if ((q - 1) % d != 0) continue;
      std::vector<std::uint32_t> U;
      Elem h = F.pow(gen, (q - 1) / d);
      for (std::uint32_t k = 0; k < d; ++k) U.push_back(std::get<Finite>(F.pow(h, k).unit).idx);
      auto quotient = Hyperfield::quotient(q, U);
      auto r = check_axioms(quotient, true, 0, 0);
      CHECK_MESSAGE(r.passed(), quotient.key());
    }
  }
}

TEST_CASE("set algebra invariants on samples") {
  std::vector<Hyperfield> hs = {Hyperfield::krasner(), Hyperfield::sign(), Hyperfield::weak_sign(),
                                Hyperfield::phase(), Hyperfield::tropical_phase(), Hyperfield::rationals(),
                                Hyperfield::gaussian(), Hyperfield::quotient(7, {1, 2, 4})};
  std::uint64_t seed = 100;
  for (const auto& h : hs) {
    ElemSampler s(h, ++seed);
    for (int i = 0; i < 500; ++i) {
      Elem a = s.next(), b = s.next(), c = s.next();
      CHECK(h.add(a, b) == h.add(b, a));
      CHECK(h.hyperadd(h.add(a, b), h.singleton(c)) == h.hyperadd(h.singleton(a), h.add(b, c)));
      CHECK(h.contains(h.add(b, c), a) == h.contains(h.add(a, h.neg(b)), c));
    }
  }
}
