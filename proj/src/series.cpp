/* SPDX-License-Identifier: Apache-2.0 */
#include "series.hpp"

#include "error.hpp"

namespace tropext {

namespace {

std::optional<GroupElem> min_opt(const std::optional<GroupElem>& a, const std::optional<GroupElem>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

void require_compatible(const Series& a, const Series& b) {
  if (!(a.field() == b.field()) || a.rank() != b.rank())
    throw DomainError("series over different fields or exponent ranks");
}

std::string exponent_text(const GroupElem& e) {
  if (e.rank() == 1) {
    const Rational& q = e[0];
    if (q == 1) return "t";
    if (q.get_den() == 1 && q > 0) return "t^" + to_string(q);
    return "t^(" + to_string(q) + ")";
  }
  return "t^" + e.to_string();
}

}  // namespace

Series::Series(Hyperfield field, std::size_t rank) : field_(std::move(field)), rank_(rank) {
  if (!field_.is_field()) throw DomainError("series coefficients must come from Q, Qi or GF(q), got " + field_.key());
}

Series Series::constant(const Hyperfield& field, const Unit& c, std::size_t rank) {
  Series s(field, rank);
  s.set_term(GroupElem::zero(rank), c);
  return s;
}

Series Series::monomial(const Hyperfield& field, const Unit& c, const GroupElem& exponent) {
  Series s(field, exponent.rank());
  s.set_term(exponent, c);
  return s;
}

Series Series::unknown(const Hyperfield& field, const GroupElem& precision) {
  Series s(field, precision.rank());
  s.prec_ = precision;
  return s;
}

void Series::set_term(const GroupElem& e, const Unit& c) {
  if (e.rank() != rank_) throw DomainError("exponent rank mismatch");
  if (prec_ && e >= *prec_) return;
  if (unit_is_zero(c)) terms_.erase(e);
  else terms_[e] = c;
}

void Series::normalize() {
  if (!prec_) return;
  terms_.erase(terms_.lower_bound(*prec_), terms_.end());
}

std::pair<Unit, GroupElem> Series::leading_term() const {
  if (terms_.empty()) {
    if (prec_) throw PrecisionError("insufficient precision: leading term of O(t^" + prec_->to_string() + ") is unknown");
    throw DomainError("zero series has no leading term");
  }
  return {terms_.begin()->second, terms_.begin()->first};
}

std::optional<GroupElem> Series::lower_bound() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return prec_;
}

Series Series::truncated(const GroupElem& p) const {
  Series s = *this;
  s.prec_ = min_opt(prec_, p);
  s.normalize();
  return s;
}

Series operator+(const Series& a, const Series& b) {
  require_compatible(a, b);
  Series s = a;
  for (const auto& [e, c] : b.terms_) {
    auto it = s.terms_.find(e);
    Unit sum = it == s.terms_.end() ? c : a.field_.field_add(it->second, c);
    if (unit_is_zero(sum)) s.terms_.erase(e);
    else s.terms_[e] = sum;
  }
  s.prec_ = min_opt(a.prec_, b.prec_);
  s.normalize();
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& [e, c] : s.terms_) c = field_.unit_neg(c);
  return s;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series Series::scaled(const Unit& c) const {
  if (unit_is_zero(c)) return Series(field_, rank_);
  Series s = *this;
  for (auto& [e, v] : s.terms_) v = field_.unit_mul(v, c);
  return s;
}

Series operator*(const Series& a, const Series& b) {
  require_compatible(a, b);
  Series s(a.field_, a.rank_);
  if (a.is_zero() || b.is_zero()) return s;
  std::optional<GroupElem> p;
  if (b.prec_) p = min_opt(p, *a.lower_bound() + *b.prec_);
  if (a.prec_) p = min_opt(p, *b.lower_bound() + *a.prec_);
  s.prec_ = p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      GroupElem e = ea + eb;
      if (p && e >= *p) continue;
      Unit prod = a.field_.unit_mul(ca, cb);
      auto it = s.terms_.find(e);
      Unit sum = it == s.terms_.end() ? prod : a.field_.field_add(it->second, prod);
      if (unit_is_zero(sum)) s.terms_.erase(e);
      else s.terms_[e] = sum;
    }
  }
  return s;
}

Series Series::inv(const GroupElem& requested) const {
  auto [c, g] = leading_term();
  std::optional<GroupElem> out_prec = requested;
  if (prec_) out_prec = min_opt(out_prec, *prec_ - g - g);
  // a = c t^g (1 + u); 1/a = c^{-1} t^{-g} sum (-u)^n, needed up to relative order out_prec + g.
  const GroupElem bound = *out_prec + g;
  Unit cinv = field_.unit_inv(c);
  Series u(field_, rank_);
  for (const auto& [e, v] : terms_)
    if (!(e == g)) u.set_term(e - g, field_.unit_mul(v, cinv));
  for (const auto& [e, v] : u.terms_) {
    (void)v;
    if (!(e[0] > 0) && rank_ > 1)
      throw UnsupportedError("inverse needs exponents with positive leading coordinate in rank > 1");
  }
  Series neg_u = (-u).truncated(bound);
  Series sum = Series::constant(field_, field_.unit_one(), rank_).truncated(bound);
  Series term = sum;
  if (!neg_u.terms_.empty()) {
    for (;;) {
      term = (term * neg_u).truncated(bound);
      if (term.terms_.empty()) break;
      sum = sum + term;
    }
  }
  Series out = Series::monomial(field_, cinv, -g) * sum;
  out.prec_ = out_prec;
  out.normalize();
  return out;
}

std::string Series::to_string() const {
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::string coef = field_.format_unit(c);
    bool compound = coef.find_first_of("+-", 1) != std::string::npos;
    if (compound) coef = "(" + coef + ")";
    bool neg = !compound && coef[0] == '-';
    if (neg) coef = coef.substr(1);
    std::string body;
    if (e.is_zero()) body = coef;
    else if (coef == "1") body = exponent_text(e);
    else body = coef + "*" + exponent_text(e);
    if (s.empty()) s = (neg ? "-" : "") + body;
    else s += (neg ? " - " : " + ") + body;
  }
  if (prec_) {
    std::string o = "O(" + exponent_text(*prec_) + ")";
    if (prec_->is_zero()) o = "O(1)";
    s = s.empty() ? o : s + " + " + o;
  }
  return s.empty() ? "0" : s;
}

bool operator==(const Series& a, const Series& b) {
  if (!(a.field_ == b.field_) || a.rank_ != b.rank_ || a.prec_ != b.prec_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (!(e == it->first) || compare_units(c, it->second) != 0) return false;
    ++it;
  }
  return true;
}

SeriesPoly SeriesPoly::variable(const Hyperfield& field, std::size_t nvars, std::size_t i, std::size_t rank) {
  SeriesPoly p(field, nvars, rank);
  Exponent e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Series::constant(field, field.unit_one(), rank));
  return p;
}

SeriesPoly SeriesPoly::constant(const Series& c, std::size_t nvars) {
  SeriesPoly p(c.field(), nvars, c.rank());
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

void SeriesPoly::add_term(const Exponent& e, const Series& c) {
  if (e.size() != nvars_) throw DomainError("exponent length mismatch");
  auto it = coeffs_.find(e);
  Series sum = it == coeffs_.end() ? c : it->second + c;
  if (sum.is_zero()) coeffs_.erase(e);
  else coeffs_.insert_or_assign(e, sum);
}

Series SeriesPoly::coeff(const Exponent& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Series(field_, rank_) : it->second;
}

long SeriesPoly::degree() const {
  long d = -1;
  for (const auto& [e, c] : coeffs_) {
    long t = 0;
    for (long x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly p = a;
  for (const auto& [e, c] : b.coeffs_) p.add_term(e, c);
  return p;
}

SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly p = a;
  for (const auto& [e, c] : b.coeffs_) p.add_term(e, -c);
  return p;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("variable count mismatch");
  SeriesPoly p(a.field_, a.nvars_, a.rank_);
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      Exponent e(a.nvars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

SeriesPoly SeriesPoly::scaled(const Series& c) const {
  SeriesPoly p(field_, nvars_, rank_);
  for (const auto& [e, v] : coeffs_) p.add_term(e, v * c);
  return p;
}

Series SeriesPoly::eval(const std::vector<Series>& point) const {
  if (point.size() != nvars_) throw DomainError("point dimension mismatch");
  Series acc(field_, rank_);
  for (const auto& [e, c] : coeffs_) {
    Series term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] < 0) throw UnsupportedError("negative exponents are not evaluated on the series side");
      for (long k = 0; k < e[i]; ++k) term = term * point[i];
    }
    acc = acc + term;
  }
  return acc;
}

std::string SeriesPoly::to_string(const std::vector<std::string>& names) const {
  static const char* defaults[] = {"X", "Y", "Z"};
  std::string s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      std::string v = i < names.size() ? names[i] : (nvars_ <= 3 ? defaults[i] : "X" + std::to_string(i + 1));
      if (!mono.empty()) mono += "*";
      mono += v;
      if (it->first[i] != 1) mono += "^" + std::to_string(it->first[i]);
    }
    std::string term = "(" + it->second.to_string() + ")";
    if (!mono.empty()) term += "*" + mono;
    s += (s.empty() ? "" : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

SeriesPoly product_of_linear_factors(const std::vector<Series>& roots) {
  if (roots.empty()) throw DomainError("no roots given");
  const Hyperfield& f = roots[0].field();
  const std::size_t rank = roots[0].rank();
  SeriesPoly p = SeriesPoly::constant(Series::constant(f, f.unit_one(), rank), 1);
  SeriesPoly x = SeriesPoly::variable(f, 1, 0, rank);
  for (const auto& r : roots) p = p * (x - SeriesPoly::constant(r, 1));
  return p;
}

}  // namespace tropext
