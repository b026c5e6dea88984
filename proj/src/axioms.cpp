/* SPDX-License-Identifier: Apache-2.0 */
#include "axioms.hpp"

#include "error.hpp"
#include "sample.hpp"

namespace tropext {

namespace {

class Checker {
 public:
  explicit Checker(const Hyperfield& h, AxiomReport& r) : h_(h), r_(r) {}

  void triple(const Elem& a, const Elem& b, const Elem& c) {
    ++r_.triples;
    auto ab = h_.add(a, b);
    expect(ab == h_.add(b, a), "commutativity", a, b, c);
    expect(h_.hyperadd(ab, h_.singleton(c)) == h_.hyperadd(h_.singleton(a), h_.add(b, c)), "associativity", a, b, c);
    expect(h_.add(a, Elem::zero()) == h_.singleton(a), "additive identity", a, b, c);
    expect(h_.contains_zero(h_.add(a, h_.neg(a))), "additive inverse exists", a, b, c);
    if (h_.contains_zero(ab)) expect(b == h_.neg(a), "additive inverse unique", a, b, c);
    bool lhs = h_.contains(h_.add(b, c), a);
    bool rhs = h_.contains(h_.add(a, h_.neg(b)), c);
    expect(lhs == rhs, "reversibility", a, b, c);
    expect(h_.scale(h_.add(b, c), a) == h_.add(h_.mul(a, b), h_.mul(a, c)), "distributivity", a, b, c);
    expect(h_.mul(h_.mul(a, b), c) == h_.mul(a, h_.mul(b, c)), "multiplicative associativity", a, b, c);
    expect(h_.mul(a, b) == h_.mul(b, a), "multiplicative commutativity", a, b, c);
    expect(h_.mul(a, h_.one()) == a, "multiplicative identity", a, b, c);
    if (!a.is_zero()) expect(h_.mul(a, h_.inv(a)) == h_.one(), "multiplicative inverse", a, b, c);
    expect(h_.mul(a, Elem::zero()).is_zero(), "zero absorbs", a, b, c);
  }

 private:
  void expect(bool ok, const char* axiom, const Elem& a, const Elem& b, const Elem& c) {
    if (ok) return;
    r_.violations.push_back({axiom, "a=" + h_.format(a) + " b=" + h_.format(b) + " c=" + h_.format(c)});
  }

  const Hyperfield& h_;
  AxiomReport& r_;
};

}  // namespace

AxiomReport check_axioms(const Hyperfield& h, bool exhaustive, std::size_t samples, std::uint64_t seed) {
  AxiomReport r;
  r.hyperfield = h.key();
  r.stringent = h.is_stringent();
  Checker check(h, r);
  if (exhaustive) {
    if (!h.is_finite()) throw UnsupportedError("exhaustive axiom check needs a finite hyperfield, got " + h.key());
    auto all = h.elements();
    r.exhaustive = true;
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) check.triple(a, b, c);
    return r;
  }
  ElemSampler s(h, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Elem a = s.next(), b = s.next(), c = s.next();
    check.triple(a, b, c);
  }
  return r;
}

}  // namespace tropext
