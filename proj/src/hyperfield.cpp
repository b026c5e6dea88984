/* SPDX-License-Identifier: Apache-2.0 */
#include "hyperfield.hpp"

#include "error.hpp"

#include <algorithm>

namespace tropext {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void sort_units(std::vector<Unit>& v) {
  std::sort(v.begin(), v.end(), [](const Unit& a, const Unit& b) { return compare_units(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end(), [](const Unit& a, const Unit& b) { return compare_units(a, b) == 0; }),
          v.end());
}

bool units_equal(const std::vector<Unit>& a, const std::vector<Unit>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (compare_units(a[i], b[i]) != 0) return false;
  return true;
}

bool base_equal(const BaseSet& a, const BaseSet& b) {
  if (a.index() != b.index()) return false;
  if (auto* fa = std::get_if<FiniteSet>(&a)) return fa->mask == std::get<FiniteSet>(b).mask;
  if (auto* sa = std::get_if<ScalarSet>(&a)) return units_equal(sa->elems, std::get<ScalarSet>(b).elems);
  return std::get<ArcSet>(a) == std::get<ArcSet>(b);
}

}  // namespace

bool operator==(const SetValue& a, const SetValue& b) {
  return a.extended == b.extended && a.level == b.level && a.tail == b.tail && base_equal(a.base, b.base);
}

Hyperfield Hyperfield::rationals() { return Hyperfield(BaseKind::Rationals, nullptr, 0); }
Hyperfield Hyperfield::gaussian() { return Hyperfield(BaseKind::Gaussian, nullptr, 0); }
Hyperfield Hyperfield::krasner() { return finite(FiniteTable::krasner()); }
Hyperfield Hyperfield::sign() { return finite(FiniteTable::sign()); }
Hyperfield Hyperfield::weak_sign() { return finite(FiniteTable::weak_sign()); }
Hyperfield Hyperfield::phase() { return Hyperfield(BaseKind::Phase, nullptr, 0); }
Hyperfield Hyperfield::tropical_phase() { return Hyperfield(BaseKind::TropicalPhase, nullptr, 0); }
Hyperfield Hyperfield::finite_field(std::uint32_t q) { return finite(FiniteTable::field_of_order(q)); }
Hyperfield Hyperfield::quotient(std::uint32_t q, std::vector<std::uint32_t> subgroup) {
  return finite(FiniteTable::quotient(q, std::move(subgroup)));
}
Hyperfield Hyperfield::finite(std::shared_ptr<const FiniteTable> table) {
  return Hyperfield(BaseKind::Finite, std::move(table), 0);
}

Hyperfield Hyperfield::extend(std::size_t rank) const {
  if (rank == 0) throw DomainError("extension rank must be positive");
  return Hyperfield(kind_, table_, rank_ + rank);
}

Hyperfield Hyperfield::base() const { return Hyperfield(kind_, table_, 0); }

bool Hyperfield::base_is_field() const {
  switch (kind_) {
    case BaseKind::Rationals:
    case BaseKind::Gaussian: return true;
    case BaseKind::Finite: return table_->flavor() == FiniteFlavor::Field;
    default: return false;
  }
}

std::string Hyperfield::key() const {
  std::string b;
  switch (kind_) {
    case BaseKind::Rationals: b = "Q"; break;
    case BaseKind::Gaussian: b = "Qi"; break;
    case BaseKind::Phase: b = "P"; break;
    case BaseKind::TropicalPhase: b = "Phi"; break;
    case BaseKind::Finite: b = table_->key(); break;
  }
  if (rank_ == 0) return b;
  if (b == "K") return rank_ == 1 ? "T" : "T^" + std::to_string(rank_);
  if (rank_ == 1 && b == "S") return "TR";
  if (rank_ == 1 && b == "Phi") return "TC";
  return b + "⋊Q" + (rank_ == 1 ? "" : "^" + std::to_string(rank_));
}

Unit Hyperfield::unit_one() const {
  switch (kind_) {
    case BaseKind::Rationals: return Rational(1);
    case BaseKind::Gaussian: return Gaussian{1, 0};
    case BaseKind::Finite: return Finite{1};
    default: return Direction{1, 0};
  }
}

Elem Hyperfield::one() const {
  if (is_extension()) return Elem{unit_one(), GroupElem::zero(rank_)};
  return Elem{unit_one(), std::nullopt};
}

Elem Hyperfield::make(Unit u) const {
  if (is_extension()) throw DomainError("extension element needs a level");
  Elem e{std::move(u), std::nullopt};
  if (!valid(e)) throw DomainError("element not in " + key());
  return e;
}

Elem Hyperfield::make(Unit u, GroupElem level) const {
  if (!is_extension()) throw DomainError(key() + " is not an extension");
  if (unit_is_zero(u)) return Elem::zero();
  if (level.rank() != rank_) throw DomainError("level rank mismatch for " + key());
  Elem e{std::move(u), std::move(level)};
  if (!valid(e)) throw DomainError("element not in " + key());
  return e;
}

bool Hyperfield::valid(const Elem& a) const {
  if (a.is_zero()) return !a.level.has_value();
  if (is_extension() != a.level.has_value()) return false;
  if (a.level && a.level->rank() != rank_) return false;
  switch (kind_) {
    case BaseKind::Rationals: {
      auto* q = std::get_if<Rational>(&a.unit);
      return q && *q != 0;
    }
    case BaseKind::Gaussian: {
      auto* g = std::get_if<Gaussian>(&a.unit);
      return g && !gauss_is_zero(*g);
    }
    case BaseKind::Finite: {
      auto* f = std::get_if<Finite>(&a.unit);
      return f && f->idx >= 1 && f->idx < table_->size();
    }
    default: {
      auto* d = std::get_if<Direction>(&a.unit);
      if (!d) return false;
      Integer g;
      mpz_gcd(g.get_mpz_t(), d->x.get_mpz_t(), d->y.get_mpz_t());
      return g == 1;
    }
  }
}

Unit Hyperfield::unit_mul(const Unit& a, const Unit& b) const {
  if (unit_is_zero(a) || unit_is_zero(b)) return Zero{};
  switch (kind_) {
    case BaseKind::Rationals: return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    case BaseKind::Gaussian: return gauss_mul(std::get<Gaussian>(a), std::get<Gaussian>(b));
    case BaseKind::Finite: return Finite{table_->mul(std::get<Finite>(a).idx, std::get<Finite>(b).idx)};
    default: return dir_mul(std::get<Direction>(a), std::get<Direction>(b));
  }
}

Unit Hyperfield::unit_inv(const Unit& a) const {
  if (unit_is_zero(a)) throw DomainError("no inverse of zero");
  switch (kind_) {
    case BaseKind::Rationals: return Rational(1 / std::get<Rational>(a));
    case BaseKind::Gaussian: return gauss_inv(std::get<Gaussian>(a));
    case BaseKind::Finite: return Finite{table_->inv(std::get<Finite>(a).idx)};
    default: return dir_inv(std::get<Direction>(a));
  }
}

Unit Hyperfield::unit_neg(const Unit& a) const {
  if (unit_is_zero(a)) return Zero{};
  switch (kind_) {
    case BaseKind::Rationals: return Rational(-std::get<Rational>(a));
    case BaseKind::Gaussian: {
      const auto& g = std::get<Gaussian>(a);
      return Gaussian{-g.re, -g.im};
    }
    case BaseKind::Finite: return Finite{table_->neg(std::get<Finite>(a).idx)};
    default: return dir_neg(std::get<Direction>(a));
  }
}

Unit Hyperfield::field_add(const Unit& a, const Unit& b) const {
  if (!base_is_field()) throw DomainError(base().key() + " is not a field");
  if (unit_is_zero(a)) return b;
  if (unit_is_zero(b)) return a;
  switch (kind_) {
    case BaseKind::Rationals: {
      Rational s = std::get<Rational>(a) + std::get<Rational>(b);
      if (s == 0) return Zero{};
      return s;
    }
    case BaseKind::Gaussian: {
      const auto& x = std::get<Gaussian>(a);
      const auto& y = std::get<Gaussian>(b);
      Gaussian s{x.re + y.re, x.im + y.im};
      if (gauss_is_zero(s)) return Zero{};
      return s;
    }
    default: {
      std::uint32_t s = table_->field_add(std::get<Finite>(a).idx, std::get<Finite>(b).idx);
      if (s == 0) return Zero{};
      return Finite{s};
    }
  }
}

Elem Hyperfield::mul(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) return Elem::zero();
  Elem r{unit_mul(a.unit, b.unit), std::nullopt};
  if (is_extension()) r.level = *a.level + *b.level;
  return r;
}

Elem Hyperfield::inv(const Elem& a) const {
  if (a.is_zero()) throw DomainError("no inverse of zero");
  Elem r{unit_inv(a.unit), std::nullopt};
  if (is_extension()) r.level = -*a.level;
  return r;
}

Elem Hyperfield::neg(const Elem& a) const {
  if (a.is_zero()) return a;
  return Elem{unit_neg(a.unit), a.level};
}

Elem Hyperfield::pow(const Elem& a, long n) const {
  if (n == 0) return one();
  if (a.is_zero()) {
    if (n < 0) throw DomainError("0^k undefined for negative k");
    return a;
  }
  Elem base = n < 0 ? inv(a) : a;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

BaseSet Hyperfield::base_empty() const {
  switch (kind_) {
    case BaseKind::Finite: return FiniteSet{};
    case BaseKind::Rationals:
    case BaseKind::Gaussian: return ScalarSet{};
    default: return ArcSet::empty();
  }
}

BaseSet Hyperfield::base_singleton(const Unit& u) const {
  switch (kind_) {
    case BaseKind::Finite: {
      FiniteSet s;
      s.mask.set(unit_is_zero(u) ? 0 : std::get<Finite>(u).idx);
      return s;
    }
    case BaseKind::Rationals:
    case BaseKind::Gaussian: return ScalarSet{{u}};
    default:
      if (unit_is_zero(u)) return ArcSet::zero_only();
      return ArcSet::point(std::get<Direction>(u));
  }
}

BaseSet Hyperfield::base_add(const BaseSet& a, const BaseSet& b) const {
  switch (kind_) {
    case BaseKind::Finite: {
      const Mask& ma = std::get<FiniteSet>(a).mask;
      const Mask& mb = std::get<FiniteSet>(b).mask;
      FiniteSet out;
      for (std::uint32_t i = 0; i < table_->size(); ++i) {
        if (!ma.test(i)) continue;
        for (std::uint32_t j = 0; j < table_->size(); ++j)
          if (mb.test(j)) out.mask |= table_->sum(i, j);
      }
      return out;
    }
    case BaseKind::Rationals:
    case BaseKind::Gaussian: {
      ScalarSet out;
      for (const auto& x : std::get<ScalarSet>(a).elems)
        for (const auto& y : std::get<ScalarSet>(b).elems) out.elems.push_back(field_add(x, y));
      sort_units(out.elems);
      return out;
    }
    default:
      return arc_hyperadd(std::get<ArcSet>(a), std::get<ArcSet>(b), kind_ == BaseKind::TropicalPhase);
  }
}

bool Hyperfield::base_contains(const BaseSet& s, const Unit& u) const {
  if (auto* f = std::get_if<FiniteSet>(&s)) return f->mask.test(unit_is_zero(u) ? 0 : std::get<Finite>(u).idx);
  if (auto* sc = std::get_if<ScalarSet>(&s)) {
    for (const auto& x : sc->elems)
      if (compare_units(x, u) == 0) return true;
    return false;
  }
  const auto& arc = std::get<ArcSet>(s);
  if (unit_is_zero(u)) return arc.has_zero();
  return arc.contains(std::get<Direction>(u));
}

bool Hyperfield::base_has_zero(const BaseSet& s) const { return base_contains(s, Zero{}); }

bool Hyperfield::base_has_nonzero(const BaseSet& s) const {
  if (auto* f = std::get_if<FiniteSet>(&s)) {
    Mask m = f->mask;
    m.reset(0);
    return m.any();
  }
  if (auto* sc = std::get_if<ScalarSet>(&s)) {
    for (const auto& x : sc->elems)
      if (!unit_is_zero(x)) return true;
    return false;
  }
  return !std::get<ArcSet>(s).no_directions();
}

BaseSet Hyperfield::base_strip_zero(const BaseSet& s) const {
  if (auto* f = std::get_if<FiniteSet>(&s)) {
    FiniteSet out = *f;
    out.mask.reset(0);
    return out;
  }
  if (auto* sc = std::get_if<ScalarSet>(&s)) {
    ScalarSet out;
    for (const auto& x : sc->elems)
      if (!unit_is_zero(x)) out.elems.push_back(x);
    return out;
  }
  return std::get<ArcSet>(s).with_zero(false);
}

BaseSet Hyperfield::base_unite(const BaseSet& a, const BaseSet& b) const {
  if (auto* f = std::get_if<FiniteSet>(&a)) return FiniteSet{f->mask | std::get<FiniteSet>(b).mask};
  if (auto* sc = std::get_if<ScalarSet>(&a)) {
    ScalarSet out = *sc;
    const auto& other = std::get<ScalarSet>(b).elems;
    out.elems.insert(out.elems.end(), other.begin(), other.end());
    sort_units(out.elems);
    return out;
  }
  return std::get<ArcSet>(a).unite(std::get<ArcSet>(b));
}

BaseSet Hyperfield::base_scale(const BaseSet& s, const Unit& u) const {
  if (unit_is_zero(u)) throw DomainError("scaling by zero");
  if (auto* f = std::get_if<FiniteSet>(&s)) {
    FiniteSet out;
    for (std::uint32_t i = 0; i < table_->size(); ++i)
      if (f->mask.test(i)) out.mask.set(table_->mul(i, std::get<Finite>(u).idx));
    return out;
  }
  if (auto* sc = std::get_if<ScalarSet>(&s)) {
    ScalarSet out;
    for (const auto& x : sc->elems) out.elems.push_back(unit_mul(x, u));
    sort_units(out.elems);
    return out;
  }
  return std::get<ArcSet>(s).rotated(std::get<Direction>(u));
}

bool Hyperfield::base_subset(const BaseSet& a, const BaseSet& b) const {
  if (auto* f = std::get_if<FiniteSet>(&a)) return (f->mask & ~std::get<FiniteSet>(b).mask).none();
  if (auto* sc = std::get_if<ScalarSet>(&a)) {
    for (const auto& x : sc->elems)
      if (!base_contains(b, x)) return false;
    return true;
  }
  return std::get<ArcSet>(a).subset_of(std::get<ArcSet>(b));
}

std::vector<Unit> Hyperfield::base_units(const BaseSet& s) const {
  std::vector<Unit> out;
  if (auto* f = std::get_if<FiniteSet>(&s)) {
    for (std::uint32_t i = 1; i < table_->size(); ++i)
      if (f->mask.test(i)) out.push_back(Finite{i});
    return out;
  }
  if (auto* sc = std::get_if<ScalarSet>(&s)) {
    for (const auto& x : sc->elems)
      if (!unit_is_zero(x)) out.push_back(x);
    return out;
  }
  const auto& arc = std::get<ArcSet>(s);
  if (arc.no_directions()) return out;
  bool any_gap = arc.is_full();
  for (bool g : arc.gap_in()) any_gap = any_gap || g;
  if (any_gap) throw UnsupportedError("arc set has infinitely many phases");
  for (std::size_t i = 0; i < arc.critical().size(); ++i)
    if (arc.point_in()[i]) out.push_back(arc.critical()[i]);
  return out;
}

SetValue Hyperfield::singleton(const Elem& a) const {
  SetValue s;
  s.extended = is_extension();
  if (!is_extension()) {
    s.base = base_singleton(a.unit);
    return s;
  }
  if (a.is_zero()) {
    s.base = base_empty();
    return s;
  }
  s.base = base_singleton(a.unit);
  s.level = a.level;
  return s;
}

SetValue Hyperfield::hyperadd(const SetValue& a, const SetValue& b) const {
  if (a.extended != is_extension() || b.extended != is_extension())
    throw DomainError("set kind mismatch for " + key());
  if (is_extension()) return ext_hyperadd(*this, a, b);
  SetValue s;
  s.base = base_add(a.base, b.base);
  return s;
}

SetValue Hyperfield::nary_sum(const std::vector<Elem>& terms) const {
  if (terms.empty()) throw DomainError("empty hypersum");
  SetValue acc = singleton(terms[0]);
  for (std::size_t i = 1; i < terms.size(); ++i) acc = hyperadd(acc, singleton(terms[i]));
  return acc;
}

bool Hyperfield::contains(const SetValue& s, const Elem& a) const {
  if (!is_extension()) return base_contains(s.base, a.unit);
  if (a.is_zero()) return !s.level || s.tail;
  if (!s.level) return false;
  auto c = *a.level <=> *s.level;
  if (c == 0) return base_contains(s.base, a.unit);
  return c > 0 && s.tail;
}

bool Hyperfield::contains_zero(const SetValue& s) const { return contains(s, Elem::zero()); }

SetValue Hyperfield::scale(const SetValue& s, const Elem& a) const {
  if (a.is_zero()) return singleton(a);
  SetValue out = s;
  if (!is_extension()) {
    out.base = base_scale(s.base, a.unit);
    return out;
  }
  if (!s.level) return out;
  out.level = *s.level + *a.level;
  out.base = base_scale(s.base, a.unit);
  return out;
}

bool Hyperfield::subset(const SetValue& a, const SetValue& b) const {
  if (is_extension()) return ext_subset(*this, a, b);
  return base_subset(a.base, b.base);
}

bool Hyperfield::singleton_value(const SetValue& s, Elem* out) const {
  if (is_extension()) {
    if (!s.level) {
      if (out) *out = Elem::zero();
      return true;
    }
    if (s.tail) return false;
    if (std::holds_alternative<ArcSet>(s.base)) {
      const auto& arc = std::get<ArcSet>(s.base);
      if (arc.is_full() || arc.critical().size() != 1 || arc.gap_in()[0]) return false;
    }
    auto units = base_units(s.base);
    if (units.size() != 1) return false;
    if (out) *out = Elem{units[0], s.level};
    return true;
  }
  if (std::holds_alternative<ArcSet>(s.base)) {
    const auto& arc = std::get<ArcSet>(s.base);
    if (arc.is_full()) return false;
    if (arc.no_directions()) {
      if (out) *out = Elem::zero();
      return arc.has_zero();
    }
    if (arc.has_zero() || arc.critical().size() != 1 || arc.gap_in()[0]) return false;
    if (out) *out = Elem{arc.critical()[0], std::nullopt};
    return true;
  }
  auto units = base_units(s.base);
  bool z = base_has_zero(s.base);
  if (units.size() + (z ? 1 : 0) != 1) return false;
  if (out) *out = z ? Elem::zero() : Elem{units[0], std::nullopt};
  return true;
}

std::vector<Elem> Hyperfield::boundary(const SetValue& s) const {
  std::vector<Elem> out;
  if (!is_extension()) {
    if (base_has_zero(s.base)) out.push_back(Elem::zero());
    for (auto& u : base_units(s.base)) out.push_back(Elem{u, std::nullopt});
    return out;
  }
  if (contains_zero(s)) out.push_back(Elem::zero());
  if (s.level)
    for (auto& u : base_units(s.base)) out.push_back(Elem{u, s.level});
  return out;
}

namespace {

std::vector<Unit> base_representatives(const BaseSet& b) {
  std::vector<Unit> out;
  std::visit(Overloaded{
                 [&](const FiniteSet& f) {
                   for (std::uint32_t i = 0; i < kMaxFinite; ++i)
                     if (f.mask.test(i)) out.push_back(i == 0 ? Unit{Zero{}} : Unit{Finite{i}});
                 },
                 [&](const ScalarSet& s) { out = s.elems; },
                 [&](const ArcSet& a) {
                   if (a.has_zero()) out.push_back(Zero{});
                   for (const auto& piece : a.pieces())
                     out.push_back(piece.is_point ? piece.from : gap_representative(piece.from, piece.to));
                 },
             },
             b);
  return out;
}

}  // namespace

std::vector<Elem> Hyperfield::representatives(const SetValue& s) const {
  std::vector<Elem> out;
  if (!is_extension()) {
    for (auto& u : base_representatives(s.base)) out.push_back(Elem{u, std::nullopt});
    return out;
  }
  if (s.tail) out.push_back(Elem::zero());
  if (!s.level) return out;
  for (auto& u : base_representatives(s.base))
    if (!unit_is_zero(u)) out.push_back(Elem{u, s.level});
  if (s.tail) {
    std::vector<Rational> c(rank_, Rational(0));
    c[rank_ - 1] = 1;
    const GroupElem above = *s.level + GroupElem(c);
    const Unit one = unit_one();
    const Unit minus_one = unit_neg(one);
    out.push_back(Elem{one, above});
    if (compare_units(one, minus_one) != 0) out.push_back(Elem{minus_one, above});
  }
  return out;
}

std::vector<Elem> Hyperfield::elements() const {
  if (!is_finite()) throw UnsupportedError(key() + " is not finite");
  std::vector<Elem> out{Elem::zero()};
  for (std::uint32_t i = 1; i < table_->size(); ++i) out.push_back(Elem{Finite{i}, std::nullopt});
  return out;
}

bool Hyperfield::is_stringent() const {
  switch (kind_) {
    case BaseKind::Rationals:
    case BaseKind::Gaussian: return true;
    case BaseKind::Phase:
    case BaseKind::TropicalPhase: return false;
    case BaseKind::Finite: break;
  }
  const auto n = table_->size();
  for (std::uint32_t a = 1; a < n; ++a)
    for (std::uint32_t b = 1; b < n; ++b) {
      if (table_->sum(a, b).count() > 1 && b != table_->neg(a)) return false;
    }
  return true;
}

std::string Hyperfield::format_unit(const Unit& u) const {
  return std::visit(Overloaded{
                        [](const Zero&) -> std::string { return "0"; },
                        [](const Rational& q) { return to_string(q); },
                        [](const Gaussian& g) {
                          auto imag = [](const Rational& v) -> std::string {
                            if (v == 1) return "i";
                            if (v == -1) return "-i";
                            return to_string(v) + "i";
                          };
                          if (g.im == 0) return to_string(g.re);
                          if (g.re == 0) return imag(g.im);
                          std::string im = imag(g.im);
                          return to_string(g.re) + (im[0] == '-' ? "" : "+") + im;
                        },
                        [this](const Finite& f) { return table_->name(f.idx); },
                        [](const Direction& d) { return "dir(" + d.x.get_str() + "," + d.y.get_str() + ")"; },
                    },
                    u);
}

std::string Hyperfield::format(const Elem& a) const {
  if (!is_extension()) return format_unit(a.unit);
  if (a.is_zero()) return "inf";
  std::string s = "(" + format_unit(a.unit);
  for (const auto& c : a.level->coords()) s += "," + to_string(c);
  return s + ")";
}

std::string Hyperfield::format(const SetValue& s) const {
  auto base_text = [this](const BaseSet& b) -> std::string {
    if (const auto* arc = std::get_if<ArcSet>(&b)) {
      if (arc->is_full()) return arc->has_zero() ? "circle+0" : "circle";
      std::string t = "{";
      bool first = true;
      auto put = [&](const std::string& x) {
        t += (first ? "" : ", ") + x;
        first = false;
      };
      if (arc->has_zero()) put("0");
      const auto& c = arc->critical();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (arc->point_in()[i]) put(format_unit(c[i]));
        if (arc->gap_in()[i]) put("arc(" + format_unit(c[i]) + ".." + format_unit(c[(i + 1) % c.size()]) + ")");
      }
      return t + "}";
    }
    std::string t = "{";
    bool first = true;
    if (base_has_zero(b)) {
      t += "0";
      first = false;
    }
    for (const auto& u : base_units(b)) {
      t += (first ? "" : ", ") + format_unit(u);
      first = false;
    }
    return t + "}";
  };
  if (!is_extension()) return base_text(s.base);
  if (!s.level) return "{inf}";
  std::string t = "level " + s.level->to_string() + ": " + base_text(s.base);
  if (s.tail) t += " + above";
  return t;
}

}  // namespace tropext
