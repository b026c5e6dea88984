/* SPDX-License-Identifier: Apache-2.0 */
#include "hom.hpp"

#include "error.hpp"

#include <map>

namespace tropext {

namespace {

Unit sign_unit(const Rational& q) { return Finite{q > 0 ? 1u : 2u}; }

}  // namespace

Hom Hom::identity(const Hyperfield& h) { return Hom(HomKind::Identity, h, h); }

Hom Hom::trivial(const Hyperfield& h) { return Hom(HomKind::Trivial, h, Hyperfield::krasner()); }

Hom Hom::val(const Hyperfield& coeffs, std::size_t rank) {
  if (!coeffs.is_field()) throw DomainError("val needs a coefficient field, got " + coeffs.key());
  Hom f(HomKind::Val, coeffs, Hyperfield::krasner().extend(rank));
  f.series_source_ = true;
  f.source_rank_ = rank;
  return f;
}

Hom Hom::sval(std::size_t rank) {
  Hom f(HomKind::SVal, Hyperfield::rationals(), Hyperfield::sign().extend(rank));
  f.series_source_ = true;
  f.source_rank_ = rank;
  return f;
}

Hom Hom::fval(const Hyperfield& coeffs, std::size_t rank) {
  if (!coeffs.is_field()) throw DomainError("fval needs a coefficient field, got " + coeffs.key());
  Hom f(HomKind::FVal, coeffs, coeffs.extend(rank));
  f.series_source_ = true;
  f.source_rank_ = rank;
  return f;
}

Hom Hom::phval(std::size_t rank) {
  Hom f(HomKind::PhVal, Hyperfield::gaussian(), Hyperfield::phase().extend(rank));
  f.series_source_ = true;
  f.source_rank_ = rank;
  return f;
}

Hom Hom::sign(bool weak) {
  return Hom(HomKind::Sign, Hyperfield::rationals(), weak ? Hyperfield::weak_sign() : Hyperfield::sign());
}

Hom Hom::phase(bool tropical) {
  return Hom(HomKind::Phase, Hyperfield::gaussian(), tropical ? Hyperfield::tropical_phase() : Hyperfield::phase());
}

Hom Hom::quotient(const Hyperfield& from, const Hyperfield& to) {
  if (!from.is_finite() || !to.is_finite()) throw DomainError("quotient maps need finite hyperfields");
  const FiniteTable* t = to.table();
  const FiniteTable* s = from.table();
  if (t->flavor() != FiniteFlavor::Quotient) throw DomainError(to.key() + " is not a quotient of a finite field");
  auto field_of = [](const FiniteTable* x) { return x->flavor() == FiniteFlavor::Field ? x->field_order() : x->field()->field_order(); };
  if (s->flavor() != FiniteFlavor::Field && s->flavor() != FiniteFlavor::Quotient)
    throw DomainError(from.key() + " is not a finite field or one of its quotients");
  if (field_of(s) != field_of(t)) throw DomainError("quotient map between different fields");
  if (s->flavor() == FiniteFlavor::Quotient) {
    for (auto u : s->subgroup())
      if (t->coset_of(u) != 1) throw DomainError("source subgroup is not contained in the target subgroup");
  }
  return Hom(HomKind::Quotient, from, to);
}

Hom Hom::extended(const Hom& inner, std::size_t rank) {
  if (inner.series_source_) throw DomainError("cannot extend a homomorphism with a series source");
  if (inner.source_.is_extension() || inner.target_.is_extension())
    throw DomainError("extend a homomorphism between base hyperfields");
  Hom f(HomKind::Extended, inner.source_.extend(rank), inner.target_.extend(rank));
  f.parts_.push_back(std::make_shared<const Hom>(inner));
  return f;
}

Hom Hom::compose(const Hom& first, const Hom& second) {
  if (second.series_source_) throw DomainError("only the first map of a composite may have a series source");
  if (!(first.target_ == second.source_))
    throw DomainError("cannot compose: " + first.target_.key() + " vs " + second.source_.key());
  Hom f(HomKind::Composite, first.source_, second.target_);
  f.series_source_ = first.series_source_;
  f.source_rank_ = first.source_rank_;
  f.parts_.push_back(std::make_shared<const Hom>(first));
  f.parts_.push_back(std::make_shared<const Hom>(second));
  return f;
}

std::string Hom::name() const {
  switch (kind_) {
    case HomKind::Identity: return "id";
    case HomKind::Trivial: return "omega";
    case HomKind::Val: return "val";
    case HomKind::SVal: return "sval";
    case HomKind::FVal: return "fval";
    case HomKind::PhVal: return "phval";
    case HomKind::Sign: return "sgn";
    case HomKind::Phase: return "ph";
    case HomKind::Quotient: return "quot";
    case HomKind::Extended: return parts_[0]->name() + "^G";
    case HomKind::Composite: return parts_[1]->name() + "*" + parts_[0]->name();
  }
  return "?";
}

Unit Hom::apply_unit(const Unit& u) const {
  if (unit_is_zero(u)) return Zero{};
  switch (kind_) {
    case HomKind::Identity:
    case HomKind::FVal: return u;
    case HomKind::Trivial:
    case HomKind::Val: return Finite{1};
    case HomKind::Sign:
    case HomKind::SVal: return sign_unit(std::get<Rational>(u));
    case HomKind::Phase:
    case HomKind::PhVal: return direction_of(std::get<Gaussian>(u));
    case HomKind::Quotient: {
      const FiniteTable* s = source_.table();
      std::uint32_t i = std::get<Finite>(u).idx;
      std::uint32_t field_elem = s->flavor() == FiniteFlavor::Field ? i : s->representative(i);
      return Finite{target_.table()->coset_of(field_elem)};
    }
    case HomKind::Extended: return parts_[0]->apply_unit(u);
    case HomKind::Composite: return parts_[1]->apply_unit(parts_[0]->apply_unit(u));
  }
  throw DomainError("unreachable");
}

Elem Hom::apply(const Elem& a) const {
  if (series_source_) throw DomainError(name() + " expects a series argument");
  if (a.is_zero()) return Elem::zero();
  switch (kind_) {
    case HomKind::Identity: return a;
    case HomKind::Trivial: return Elem{Finite{1}, std::nullopt};
    case HomKind::Extended: return Elem{parts_[0]->apply_unit(a.unit), a.level};
    case HomKind::Composite: return parts_[1]->apply(parts_[0]->apply(a));
    default: return Elem{apply_unit(a.unit), std::nullopt};
  }
}

Elem Hom::apply(const Series& a) const {
  if (!series_source_) throw DomainError(name() + " expects a hyperfield element");
  if (kind_ == HomKind::Composite) return parts_[1]->apply(parts_[0]->apply(a));
  if (!(a.field() == source_) || a.rank() != source_rank_)
    throw DomainError(name() + " applied to a series over " + a.field().key());
  if (a.is_zero()) return Elem::zero();
  auto [c, g] = a.leading_term();
  return Elem{apply_unit(c), g};
}

Series random_series(Rng& rng, const Hyperfield& coeffs, std::size_t rank, int max_terms, int den_bound) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> num(-2, 6);
  std::uniform_int_distribution<int> den(1, den_bound);
  Series s(coeffs, rank);
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> e;
    for (std::size_t i = 0; i < rank; ++i) e.push_back(make_rational(num(rng), den(rng)));
    s.set_term(GroupElem(std::move(e)), random_unit(rng, coeffs));
  }
  return s;
}

namespace {

std::string show(const Hyperfield& h, const Elem& e) { return h.format(e); }

}  // namespace

HomReport hom_check(const Hom& f, std::size_t trials, std::uint64_t seed, bool check_lifts) {
  HomReport rep;
  rep.hom = f.name();
  rep.trials = trials;
  const Hyperfield& tgt = f.target();
  auto violate = [&](const std::string& law, const std::string& inst) {
    if (rep.violations.size() < 50) rep.violations.push_back({law, inst});
  };
  auto in_sum = [&](const Elem& fa, const Elem& fb, const Elem& fc) {
    return tgt.contains(tgt.hyperadd(tgt.singleton(fa), tgt.singleton(fb)), fc);
  };

  if (f.series_source()) {
    const Hyperfield& k = f.source();
    const std::size_t r = f.source_rank();
    Rng rng(seed);
    if (!f.apply(Series(k, r)).is_zero()) violate("zero", "f(0) != 0");
    if (!(f.apply(Series::constant(k, k.unit_one(), r)) == tgt.one())) violate("one", "f(1) != 1");
    std::uniform_int_distribution<int> coin(0, 3);
    for (std::size_t i = 0; i < trials; ++i) {
      Series a = random_series(rng, k, r);
      Series b = random_series(rng, k, r);
      if (coin(rng) == 0) {
        auto [c, g] = a.leading_term();
        b = b + Series::monomial(k, k.unit_neg(c), g);
      }
      const Elem fa = f.apply(a), fb = f.apply(b);
      const Elem fab = f.apply(a * b);
      if (!(fab == tgt.mul(fa, fb))) violate("multiplicative", a.to_string() + " ; " + b.to_string());
      if (!(f.apply(-a) == tgt.neg(fa))) violate("negation", a.to_string());
      if (!in_sum(fa, fb, f.apply(a + b))) violate("sum", a.to_string() + " ; " + b.to_string());
    }
  } else {
    const Hyperfield& src = f.source();
    ElemSampler smp(src, seed);
    if (!f.apply(Elem::zero()).is_zero()) violate("zero", "f(0) != 0");
    if (!(f.apply(src.one()) == tgt.one())) violate("one", "f(1) != 1");
    for (std::size_t i = 0; i < trials; ++i) {
      const Elem a = smp.next(), b = smp.next();
      const Elem fa = f.apply(a), fb = f.apply(b);
      if (!(f.apply(src.mul(a, b)) == tgt.mul(fa, fb)))
        violate("multiplicative", show(src, a) + " ; " + show(src, b));
      if (!(f.apply(src.neg(a)) == tgt.neg(fa))) violate("negation", show(src, a));
      for (const Elem& c : src.representatives(src.hyperadd(src.singleton(a), src.singleton(b))))
        if (!in_sum(fa, fb, f.apply(c)))
          violate("sum", show(src, a) + " + " + show(src, b) + " contains " + show(src, c));
    }
  }

  const bool field_source = f.series_source() || f.source().is_field();
  if (!check_lifts || !field_source || !tgt.is_finite()) return rep;
  rep.lifts_checked = true;

  // Bucket source elements by image, then search for a + b over each target sum.
  struct Sample {
    std::optional<Series> s;
    Elem e;
  };
  std::map<Elem, std::vector<Sample>, ElemLess> buckets;
  constexpr std::size_t kBucketCap = 24;
  auto add_sample = [&](Sample x, const Elem& image) {
    auto& v = buckets[image];
    if (v.size() < kBucketCap) v.push_back(std::move(x));
  };
  if (!f.series_source() && f.source().is_finite()) {
    rep.lifts_exhaustive = true;
    for (const Elem& e : f.source().elements()) add_sample({std::nullopt, e}, f.apply(e));
  } else if (f.series_source()) {
    Rng rng(seed + 1);
    for (std::size_t i = 0; i < std::max<std::size_t>(trials, 200); ++i) {
      Series s = random_series(rng, f.source(), f.source_rank());
      Elem img = f.apply(s);
      add_sample({s, Elem::zero()}, img);
    }
  } else {
    ElemSampler smp(f.source(), seed + 1);
    for (std::size_t i = 0; i < std::max<std::size_t>(trials, 200); ++i) {
      Elem e = smp.next_nonzero();
      add_sample({std::nullopt, e}, f.apply(e));
    }
  }
  auto image_of_sum = [&](const Sample& x, const Sample& y) {
    if (x.s) return f.apply(*x.s + *y.s);
    SetValue sum = f.source().hyperadd(f.source().singleton(x.e), f.source().singleton(y.e));
    Elem c;
    f.source().singleton_value(sum, &c);
    return f.apply(c);
  };
  const auto elems = tgt.elements();
  for (const Elem& alpha : elems) {
    if (alpha.is_zero()) continue;
    for (const Elem& beta : elems) {
      if (beta.is_zero()) continue;
      SetValue sum = tgt.hyperadd(tgt.singleton(alpha), tgt.singleton(beta));
      for (const Elem& gamma : tgt.representatives(sum)) {
        bool found = false;
        const auto& pa = buckets[alpha];
        const auto& pb = buckets[beta];
        for (std::size_t i = 0; i < pa.size() && !found; ++i)
          for (std::size_t j = 0; j < pb.size() && !found; ++j)
            found = image_of_sum(pa[i], pb[j]) == gamma;
        if (!found)
          rep.missing_lifts.push_back(tgt.format(gamma) + " in " + tgt.format(alpha) + " + " + tgt.format(beta));
      }
    }
  }
  return rep;
}

}  // namespace tropext
