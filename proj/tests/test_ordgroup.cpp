#include "doctest.h"
#include "error.hpp"
#include "ordgroup.hpp"
#include "sample.hpp"

using namespace tropext;

namespace {

GroupElem g(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (auto c : cs) v.push_back(parse_rational(c));
  return GroupElem(v);
}

GroupElem random_elem(Rng& rng, std::size_t rank) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < rank; ++i) v.push_back(random_rational(rng, 5, 4));
  return GroupElem(v);
}

}  // namespace

TEST_CASE("group addition") {
  CHECK(group_add(g({"1/2"}), g({"1/3"})) == g({"5/6"}));
  CHECK(group_add(g({"0", "0"}), g({"7", "-2"})) == g({"7", "-2"}));
  CHECK(group_add(g({"1", "0"}), g({"0", "5"})) == g({"1", "5"}));
  CHECK(group_add(g({"3/4"}), -g({"3/4"})).is_zero());
  CHECK_THROWS_AS(group_add(g({"1"}), g({"1", "2"})), DomainError);
}

TEST_CASE("lexicographic order") {
  CHECK(lex_compare(g({"1", "9"}), g({"2", "0"})) == Order::LT);
  CHECK(lex_compare(g({"1", "1"}), g({"1", "1"})) == Order::EQ);
  CHECK(lex_compare(g({"0", "3"}), g({"0", "2"})) == Order::GT);
  CHECK_THROWS_AS(lex_compare(g({"1"}), g({"1", "0"})), DomainError);
}

TEST_CASE("scalar multiples and division") {
  CHECK(scalar_mul(3, g({"1/2"})) == g({"3/2"}));
  CHECK(scalar_mul(0, g({"5", "-1"})).is_zero());
  CHECK(group_div(g({"1", "1"}), 2) == g({"1/2", "1/2"}));
  CHECK_THROWS_AS(group_div(g({"1"}), 0), DomainError);
}

TEST_CASE("order is total, antisymmetric and translation invariant") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    std::size_t rank = 1 + i % 3;
    auto a = random_elem(rng, rank), b = random_elem(rng, rank), c = random_elem(rng, rank);
    int outcomes = (a < b) + (a == b) + (a > b);
    CHECK(outcomes == 1);
    auto ab = lex_compare(a, b), ba = lex_compare(b, a);
    CHECK((ab == Order::EQ) == (ba == Order::EQ));
    CHECK((ab == Order::LT) == (ba == Order::GT));
    CHECK(lex_compare(a + c, b + c) == ab);
  }
}

TEST_CASE("divisibility roundtrip") {
  Rng rng(12);
  for (int n = 1; n <= 12; ++n) {
    for (int i = 0; i < 20; ++i) {
      auto a = random_elem(rng, 1 + i % 3);
      CHECK(group_div(scalar_mul(n, a), n) == a);
    }
  }
}

TEST_CASE("string forms") {
  CHECK(g({"3/2"}).to_string() == "3/2");
  CHECK(g({"1", "-1/2"}).to_string() == "(1,-1/2)");
  CHECK(g({"4/6"}).to_strings() == std::vector<std::string>{"2/3"});
}
