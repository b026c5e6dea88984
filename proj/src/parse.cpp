/* SPDX-License-Identifier: Apache-2.0 */
#include "parse.hpp"

#include "error.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace tropext {

std::string normalize_text(std::string_view text) {
  static const std::pair<std::string_view, std::string_view> kMap[] = {
      {"−", "-"}, {"⊞", "+"}, {"⊙", "*"}, {"⋊", "><"}, {"·", "*"}};
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    bool hit = false;
    for (const auto& [from, to] : kMap) {
      if (text.substr(i, from.size()) == from) {
        out += to;
        i += from.size();
        hit = true;
        break;
      }
    }
    if (!hit) out += text[i++];
  }
  return out;
}

namespace {

struct Cursor {
  std::string text;
  std::size_t pos = 0;

  explicit Cursor(std::string_view t) : text(normalize_text(t)) {}

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= text.size();
  }
  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool accept(std::string_view s) {
    skip();
    if (text.compare(pos, s.size(), s) != 0) return false;
    pos += s.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in \"" + text + "\"", pos);
  }
  void finish() {
    if (!done()) fail("unexpected trailing input");
  }

  std::string digits() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return text.substr(start, pos - start);
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer integer() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Integer n(digits());
    return neg ? Integer(-n) : n;
  }

  // [sign] digits ['/' digits]
  Rational rational() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    return unsigned_rational(neg);
  }
  Rational unsigned_rational(bool neg = false) {
    std::string num = digits();
    std::string den = "1";
    std::size_t save = pos;
    if (accept('/')) {
      skip();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) den = digits();
      else pos = save;
    }
    if (Integer(den) == 0) fail("zero denominator");
    Rational q = make_rational(Integer(num), Integer(den));
    return neg ? Rational(-q) : q;
  }
};

Hyperfield base_from_name(const std::string& name, const Cursor& cur) {
  if (name == "Q") return Hyperfield::rationals();
  if (name == "Qi") return Hyperfield::gaussian();
  if (name == "K") return Hyperfield::krasner();
  if (name == "S") return Hyperfield::sign();
  if (name == "W") return Hyperfield::weak_sign();
  if (name == "P") return Hyperfield::phase();
  if (name == "Phi") return Hyperfield::tropical_phase();
  if (name == "T" || name == "TR" || name == "TC") return realize(name);
  cur.fail("unknown hyperfield '" + name + "'");
}

// GF(p^k) element from text: a table name, else an integer reduced into the prime field.
Unit finite_from_integer(const Hyperfield& base, const Integer& n, const Cursor& cur) {
  const FiniteTable* t = base.table();
  std::string name = Integer(abs(n)).get_str();
  Unit u;
  if (auto idx = t->index_of(name)) {
    u = *idx == 0 ? Unit{Zero{}} : Unit{Finite{*idx}};
  } else if (t->flavor() == FiniteFlavor::Field && t->field_order() == t->characteristic()) {
    Integer r = Integer(abs(n)) % t->characteristic();
    auto idx2 = t->index_of(r.get_str());
    u = *idx2 == 0 ? Unit{Zero{}} : Unit{Finite{*idx2}};
  } else {
    cur.fail("'" + name + "' is not an element of " + base.key());
  }
  if (n < 0 && !unit_is_zero(u)) u = base.unit_neg(u);
  return u;
}

Gaussian gaussian_term(Cursor& cur, bool neg) {
  // rational ['i'] | 'i'
  Rational v = 1;
  bool have_num = false;
  if (cur.at_digit()) {
    v = cur.unsigned_rational();
    have_num = true;
  }
  if (cur.accept('i')) return neg ? Gaussian{0, -v} : Gaussian{0, v};
  if (!have_num) cur.fail("expected a Gaussian rational");
  return neg ? Gaussian{-v, 0} : Gaussian{v, 0};
}

// Full a+bi form.
Gaussian gaussian_full(Cursor& cur) {
  bool neg = false;
  if (cur.accept('-')) neg = true;
  else cur.accept('+');
  Gaussian g = gaussian_term(cur, neg);
  for (;;) {
    char c = cur.peek();
    if (c != '+' && c != '-') break;
    std::size_t save = cur.pos;
    ++cur.pos;
    if (!cur.at_digit() && cur.peek() != 'i') {
      cur.pos = save;
      break;
    }
    Gaussian h = gaussian_term(cur, c == '-');
    g = Gaussian{g.re + h.re, g.im + h.im};
  }
  return g;
}

Unit to_unit(const Gaussian& g) {
  if (gauss_is_zero(g)) return Zero{};
  return g;
}

// One base literal; `full` allows a+bi without parentheses.
Unit base_literal(const Hyperfield& base, Cursor& cur, bool full) {
  switch (base.base_kind()) {
    case BaseKind::Rationals: {
      Rational q = cur.rational();
      if (q == 0) return Zero{};
      return q;
    }
    case BaseKind::Gaussian: {
      if (cur.accept('(')) {
        Gaussian g = gaussian_full(cur);
        cur.expect(')');
        return to_unit(g);
      }
      if (full) return to_unit(gaussian_full(cur));
      bool neg = false;
      if (cur.accept('-')) neg = true;
      else cur.accept('+');
      return to_unit(gaussian_term(cur, neg));
    }
    case BaseKind::Finite: {
      bool neg = false;
      if (cur.accept('-')) neg = true;
      else cur.accept('+');
      Integer n(cur.digits());
      Unit u = finite_from_integer(base, neg ? Integer(-n) : n, cur);
      if (cur.accept('/')) {
        Unit d = finite_from_integer(base, Integer(cur.digits()), cur);
        if (unit_is_zero(d)) cur.fail("division by zero");
        if (!unit_is_zero(u)) u = base.unit_mul(u, base.unit_inv(d));
      }
      return u;
    }
    case BaseKind::Phase:
    case BaseKind::TropicalPhase: {
      bool neg = false;
      if (cur.accept('-')) neg = true;
      else cur.accept('+');
      Unit u;
      if (cur.accept("dir")) {
        cur.expect('(');
        Integer x = cur.integer();
        cur.expect(',');
        Integer y = cur.integer();
        cur.expect(')');
        if (x == 0 && y == 0) throw DomainError("dir(0,0) is not a phase");
        u = make_direction(x, y);
      } else if (cur.accept('i')) {
        u = make_direction(0, 1);
      } else {
        std::string d = cur.digits();
        if (d == "0") return Zero{};
        if (d != "1") cur.fail("phases are written dir(x,y), 1, -1, i or -i");
        u = make_direction(1, 0);
      }
      return neg ? Unit{dir_neg(std::get<Direction>(u))} : u;
    }
  }
  cur.fail("unsupported literal");
}

Elem elem_literal(const Hyperfield& h, Cursor& cur, bool full) {
  if (!h.is_extension()) return Elem{base_literal(h, cur, full), std::nullopt};
  if (cur.accept("inf")) return Elem::zero();
  const Hyperfield base = h.base();
  if (cur.peek() != '(') {
    if (base.base_kind() == BaseKind::Finite && base.table()->flavor() == FiniteFlavor::Krasner && h.rank() == 1) {
      // Bare tropical number g stands for (1, g).
      return Elem{Finite{1}, GroupElem(cur.rational())};
    }
    cur.fail("expected an extension element (c, g) or inf");
  }
  cur.expect('(');
  Unit c = base_literal(base, cur, true);
  if (unit_is_zero(c)) cur.fail("the unit of (c, g) must be nonzero; write inf for zero");
  std::vector<Rational> g;
  while (cur.accept(',')) g.push_back(cur.rational());
  cur.expect(')');
  if (g.size() != h.rank())
    cur.fail("expected " + std::to_string(h.rank()) + " level coordinate(s), got " + std::to_string(g.size()));
  return Elem{c, GroupElem(std::move(g))};
}

// Variable table: explicit names, or X/Y/Z and X1..Xn.
struct Vars {
  std::vector<std::string> names;
  std::size_t nvars = 0;
  bool fixed = false;

  std::optional<std::size_t> match(Cursor& cur) {
    cur.skip();
    if (fixed || !names.empty()) {
      std::optional<std::size_t> best;
      std::size_t best_len = 0;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (cur.text.compare(cur.pos, names[i].size(), names[i]) == 0 && names[i].size() > best_len) {
          best = i;
          best_len = names[i].size();
        }
      if (best) cur.pos += best_len;
      return best;
    }
    const char c = cur.peek();
    if (c == 'X' && cur.pos + 1 < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos + 1]))) {
      ++cur.pos;
      long k = std::stol(cur.digits());
      if (k < 1) cur.fail("variables are numbered from X1");
      return static_cast<std::size_t>(k - 1);
    }
    if (c == 'X' || c == 'Y' || c == 'Z') {
      ++cur.pos;
      return static_cast<std::size_t>(c - 'X');
    }
    return std::nullopt;
  }
};

long power(Cursor& cur) {
  if (!cur.accept('^')) return 1;
  if (cur.accept('(')) {
    long v = cur.integer().get_si();
    cur.expect(')');
    return v;
  }
  return cur.integer().get_si();
}

using Monomial = std::map<std::size_t, long>;

Exponent to_exponent(const Monomial& m, std::size_t nvars) {
  Exponent e(nvars, 0);
  for (const auto& [i, k] : m) e[i] += k;
  return e;
}

std::size_t infer_nvars(const std::vector<Monomial>& monos, std::size_t requested, const Vars& vars) {
  std::size_t n = requested;
  if (!vars.names.empty()) n = std::max(n, vars.names.size());
  for (const auto& m : monos)
    for (const auto& [i, k] : m) n = std::max(n, i + 1);
  return std::max<std::size_t>(n, 1);
}

}  // namespace

Hyperfield parse_hyperfield(std::string_view key_in) {
  Cursor cur(key_in);
  cur.skip();
  auto name = [&]() {
    cur.skip();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && std::isalpha(static_cast<unsigned char>(cur.text[cur.pos]))) ++cur.pos;
    if (start == cur.pos) cur.fail("expected a hyperfield name");
    return cur.text.substr(start, cur.pos - start);
  };
  std::string n = name();
  Hyperfield h = Hyperfield::rationals();
  if (n == "GF") {
    std::uint32_t q = static_cast<std::uint32_t>(std::stoul(cur.digits()));
    if (cur.accept('/')) {
      cur.expect('{');
      std::vector<std::uint32_t> u;
      do {
        u.push_back(static_cast<std::uint32_t>(std::stoul(cur.digits())));
      } while (cur.accept(','));
      cur.expect('}');
      h = Hyperfield::quotient(q, u);
    } else {
      h = Hyperfield::finite_field(q);
    }
  } else {
    h = base_from_name(n, cur);
    if (n == "T" && cur.accept('^')) h = Hyperfield::krasner().extend(static_cast<std::size_t>(std::stoul(cur.digits())));
  }
  while (cur.accept("><")) {
    if (name() != "Q") cur.fail("only Q^k value groups are supported");
    std::size_t k = 1;
    if (cur.accept('^')) k = static_cast<std::size_t>(std::stoul(cur.digits()));
    if (k == 0) cur.fail("rank must be positive");
    h = h.extend(k);
  }
  cur.finish();
  return h;
}

Elem parse_elem(const Hyperfield& h, std::string_view text) {
  Cursor cur(text);
  Elem e = elem_literal(h, cur, true);
  cur.finish();
  return e;
}

HPoly parse_poly(const Hyperfield& h, std::string_view text, std::size_t nvars, const std::vector<std::string>& names) {
  Cursor cur(text);
  {
    Cursor probe(text);
    if (probe.accept('0') && probe.done()) return HPoly(h, nvars ? nvars : 1);
  }
  Vars vars;
  vars.names = names;
  std::vector<std::pair<Monomial, Elem>> terms;
  bool first = true;
  while (first || !cur.done()) {
    bool neg = false;
    if (cur.accept('-')) neg = true;
    else if (!cur.accept('+') && !first) cur.fail("expected '+' or '-'");
    first = false;
    Monomial m;
    std::optional<Elem> coef;
    bool need_factor = true;
    while (need_factor) {
      if (auto v = vars.match(cur)) {
        m[*v] += power(cur);
      } else {
        if (coef) cur.fail("two coefficients in one term");
        coef = elem_literal(h, cur, false);
      }
      need_factor = cur.accept('*');
    }
    Elem c = coef ? *coef : h.one();
    if (neg) c = h.neg(c);
    terms.emplace_back(std::move(m), c);
  }
  std::vector<Monomial> monos;
  for (const auto& t : terms) monos.push_back(t.first);
  const std::size_t n = infer_nvars(monos, nvars, vars);
  if (nvars && n > nvars) throw ParseError("polynomial uses more than " + std::to_string(nvars) + " variables", 0);
  bool laurent = false;
  for (const auto& m : monos)
    for (const auto& [i, k] : m) laurent = laurent || to_exponent(m, n)[i] < 0;
  HPoly p(h, n, laurent);
  for (const auto& [m, c] : terms) {
    Exponent e = to_exponent(m, n);
    if (p.terms().count(e)) throw ParseError("repeated monomial in " + cur.text, 0);
    p.set_term(e, c);
  }
  return p;
}

namespace {

GroupElem series_exponent(Cursor& cur, std::size_t rank) {
  if (!cur.accept('^')) {
    std::vector<Rational> e(rank, Rational(0));
    e[0] = 1;
    return GroupElem(std::move(e));
  }
  std::vector<Rational> e;
  if (cur.accept('(')) {
    do e.push_back(cur.rational());
    while (cur.accept(','));
    cur.expect(')');
  } else {
    e.push_back(Rational(cur.integer()));
  }
  if (e.size() != rank) cur.fail("exponent rank " + std::to_string(e.size()) + ", expected " + std::to_string(rank));
  return GroupElem(std::move(e));
}

struct SeriesParser {
  Cursor& cur;
  const Hyperfield& k;
  std::size_t rank;
  Vars* vars;

  using Terms = std::vector<std::pair<Monomial, Series>>;

  Series one() const { return Series::constant(k, k.unit_one(), rank); }

  // sum of products; variables allowed only when vars != nullptr
  Terms sum() {
    Terms out;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (cur.accept('-')) neg = true;
      else if (!first && !cur.accept('+')) break;
      else if (first) cur.accept('+');
      first = false;
      auto [m, s] = product();
      out.emplace_back(std::move(m), neg ? -s : s);
      char c = cur.peek();
      if (c != '+' && c != '-') break;
    }
    return out;
  }

  std::pair<Monomial, Series> product() {
    Monomial m;
    Series s = one();
    do {
      if (vars) {
        if (auto v = vars->match(cur)) {
          m[*v] += power(cur);
          continue;
        }
      }
      s = s * factor();
    } while (cur.accept('*'));
    return {m, s};
  }

  Series factor() {
    if (cur.accept("O(")) {
      Series o(k, rank);
      if (cur.accept('t')) {
        o = Series::unknown(k, series_exponent(cur, rank));
      } else {
        if (cur.digits() != "1") cur.fail("expected O(1) or O(t^e)");
        o = Series::unknown(k, GroupElem::zero(rank));
      }
      cur.expect(')');
      return o;
    }
    if (cur.accept('t')) return Series::monomial(k, k.unit_one(), series_exponent(cur, rank));
    if (cur.peek() == '(') {
      std::size_t save = cur.pos;
      cur.expect('(');
      Vars* saved = vars;
      vars = nullptr;
      Terms inner = sum();
      vars = saved;
      if (cur.peek() == ')') {
        cur.expect(')');
        Series s(k, rank);
        for (auto& t : inner) s = s + t.second;
        return s;
      }
      cur.pos = save;
    }
    Unit u = base_literal(k, cur, false);
    if (unit_is_zero(u)) return Series(k, rank);
    return Series::constant(k, u, rank);
  }
};

}  // namespace

Series parse_series(std::string_view text, const Hyperfield& coeffs, std::size_t rank) {
  Cursor cur(text);
  SeriesParser sp{cur, coeffs, rank, nullptr};
  Series s(coeffs, rank);
  for (auto& t : sp.sum()) s = s + t.second;
  cur.finish();
  return s;
}

SeriesPoly parse_series_poly(std::string_view text, const Hyperfield& coeffs, std::size_t nvars, std::size_t rank,
                             const std::vector<std::string>& names) {
  Cursor cur(text);
  Vars vars;
  vars.names = names;
  SeriesParser sp{cur, coeffs, rank, &vars};
  auto terms = sp.sum();
  cur.finish();
  std::vector<Monomial> monos;
  for (const auto& t : terms) monos.push_back(t.first);
  const std::size_t n = infer_nvars(monos, nvars, vars);
  if (nvars && n > nvars) throw ParseError("polynomial uses more than " + std::to_string(nvars) + " variables", 0);
  SeriesPoly p(coeffs, n, rank);
  for (const auto& [m, s] : terms) {
    Exponent e = to_exponent(m, n);
    for (long x : e)
      if (x < 0) throw ParseError("negative powers are not supported for series polynomials", 0);
    p.add_term(e, s);
  }
  return p;
}

}  // namespace tropext
