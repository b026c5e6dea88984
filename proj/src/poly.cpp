/* SPDX-License-Identifier: Apache-2.0 */
#include "poly.hpp"

#include "error.hpp"

namespace tropext {

HPoly::HPoly(Hyperfield h, std::size_t nvars, bool laurent) : h_(std::move(h)), nvars_(nvars), laurent_(laurent) {
  if (nvars == 0) throw DomainError("a polynomial needs at least one variable");
}

HPoly HPoly::constant(const Hyperfield& h, std::size_t nvars, const Elem& c) {
  HPoly p(h, nvars);
  p.set_term(Exponent(nvars, 0), c);
  return p;
}

HPoly HPoly::monomial(const Hyperfield& h, const Exponent& e, const Elem& c, bool laurent) {
  HPoly p(h, e.size(), laurent);
  p.set_term(e, c);
  return p;
}

long HPoly::degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long t = 0;
    for (long x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

bool HPoly::is_homogeneous() const {
  const long d = degree();
  for (const auto& [e, c] : terms_) {
    long t = 0;
    for (long x : e) t += x;
    if (t != d) return false;
  }
  return true;
}

Elem HPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Elem::zero() : it->second;
}

void HPoly::set_term(const Exponent& e, const Elem& c) {
  if (e.size() != nvars_) throw DomainError("exponent has " + std::to_string(e.size()) + " entries, expected " +
                                            std::to_string(nvars_));
  if (!laurent_)
    for (long x : e)
      if (x < 0) throw DomainError("negative exponent in a non-Laurent polynomial");
  if (c.is_zero()) {
    terms_.erase(e);
    return;
  }
  if (!h_.valid(c)) throw DomainError("coefficient is not an element of " + h_.key());
  terms_.insert_or_assign(e, c);
}

std::vector<std::string> HPoly::default_names(std::size_t nvars) {
  static const char* small[] = {"X", "Y", "Z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars; ++i)
    out.push_back(nvars <= 3 ? std::string(small[i]) : "X" + std::to_string(i + 1));
  return out;
}

std::string HPoly::to_string(const std::vector<std::string>& names_in) const {
  const auto names = names_in.empty() ? default_names(nvars_) : names_in;
  const Elem one = h_.one();
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const long k = it->first[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (k != 1) mono += k < 0 ? "^(" + std::to_string(k) + ")" : "^" + std::to_string(k);
    }
    Elem c = it->second;
    std::string coef = h_.format(c);
    bool minus = false;
    // Print "- 2*X" rather than "+ -2*X" when the sign is the hyperfield's negation.
    if (coef.size() > 1 && coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos &&
        h_.format(h_.neg(c)) == coef.substr(1)) {
      minus = true;
      c = h_.neg(c);
      coef = coef.substr(1);
    }
    if (h_.is_field() && coef.find_first_of("+-", 1) != std::string::npos) coef = "(" + coef + ")";
    std::string term;
    if (mono.empty()) term = coef;
    else if (c == one) term = mono;
    else term = coef + "*" + mono;
    if (s.empty()) s = minus ? "-" + term : term;
    else s += (minus ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

bool operator==(const HPoly& a, const HPoly& b) {
  return a.h_ == b.h_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Elem monomial_value(const Hyperfield& h, const Elem& c, const Exponent& d, const std::vector<Elem>& a) {
  Elem v = c;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) v = h.mul(v, h.pow(a[i], d[i]));
  return v;
}

SetValue eval(const HPoly& p, const std::vector<Elem>& a) {
  if (a.size() != p.nvars()) throw DomainError("point has " + std::to_string(a.size()) + " coordinates, expected " +
                                               std::to_string(p.nvars()));
  const Hyperfield& h = p.hyperfield();
  if (p.is_zero()) return h.singleton(Elem::zero());
  std::vector<Elem> values;
  values.reserve(p.terms().size());
  for (const auto& [d, c] : p.terms()) values.push_back(monomial_value(h, c, d, a));
  return h.nary_sum(values);
}

bool is_root(const HPoly& p, const std::vector<Elem>& a) { return p.hyperfield().contains_zero(eval(p, a)); }

bool prevariety_member(const std::vector<HPoly>& system, const std::vector<Elem>& a) {
  for (const auto& p : system)
    if (!is_root(p, a)) return false;
  return true;
}

HPoly pushforward(const Hom& f, const HPoly& p) {
  if (f.series_source() || !(f.source() == p.hyperfield()))
    throw DomainError(f.name() + " cannot push forward a polynomial over " + p.hyperfield().key());
  HPoly out(f.target(), p.nvars(), p.laurent());
  for (const auto& [d, c] : p.terms()) out.set_term(d, f.apply(c));
  return out;
}

HPoly pushforward(const Hom& f, const SeriesPoly& p) {
  if (!f.series_source()) throw DomainError(f.name() + " does not act on series");
  HPoly out(f.target(), p.nvars());
  for (const auto& [d, c] : p.coeffs()) out.set_term(d, f.apply(c));
  return out;
}

HPoly homogenize(const HPoly& p) {
  const long deg = p.degree();
  HPoly out(p.hyperfield(), p.nvars() + 1);
  for (const auto& [d, c] : p.terms()) {
    Exponent e{deg};
    for (long x : d) {
      if (x < 0) throw DomainError("homogenize needs nonnegative exponents; affinize first");
      e[0] -= x;
      e.push_back(x);
    }
    out.set_term(e, c);
  }
  return out;
}

HPoly affinize(const HPoly& p) {
  Exponent shift(p.nvars(), 0);
  for (const auto& [d, c] : p.terms())
    for (std::size_t i = 0; i < d.size(); ++i) shift[i] = std::min(shift[i], d[i]);
  HPoly out(p.hyperfield(), p.nvars());
  for (const auto& [d, c] : p.terms()) {
    Exponent e = d;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= shift[i];
    out.set_term(e, c);
  }
  return out;
}

ProjPoint ProjPoint::canonicalize(const Hyperfield& h, std::vector<Elem> coords) {
  auto first = std::find_if(coords.begin(), coords.end(), [](const Elem& e) { return !e.is_zero(); });
  if (first == coords.end()) throw DomainError("projective point with all coordinates zero");
  const Elem scale = h.inv(*first);
  ProjPoint p;
  for (auto& c : coords) p.coords_.push_back(h.mul(c, scale));
  return p;
}

bool proj_is_root(const HPoly& p, const ProjPoint& a) {
  if (!p.is_homogeneous()) throw DomainError("projective root test needs a homogeneous polynomial");
  return is_root(p, a.coords());
}

}  // namespace tropext
