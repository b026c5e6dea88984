/* SPDX-License-Identifier: Apache-2.0 */
#include "tropgeo.hpp"

#include "error.hpp"
#include "hom.hpp"
#include "sample.hpp"
#include "solve.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <limits>
#include <set>

namespace tropext {

namespace {

Rational cross(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }
Rational dot(const Vec2& u, const Vec2& v) { return u[0] * v[0] + u[1] * v[1]; }
Vec2 sub(const Vec2& u, const Vec2& v) { return {u[0] - v[0], u[1] - v[1]}; }
Vec2 axpy(const Vec2& p, const Rational& s, const Vec2& v) { return {p[0] + s * v[0], p[1] + s * v[1]}; }
Vec2 to_vec(const std::array<Integer, 2>& d) { return {Rational(d[0]), Rational(d[1])}; }

std::array<Integer, 2> primitive(const Vec2& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer x = v[0].get_num() * (l / v[0].get_den());
  Integer y = v[1].get_num() * (l / v[1].get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g == 0) throw DomainError("zero direction");
  return {x / g, y / g};
}

// Lines have no preferred orientation: make the first nonzero coordinate positive.
std::array<Integer, 2> orient(std::array<Integer, 2> d) {
  if (d[0] < 0 || (d[0] == 0 && d[1] < 0)) d = {-d[0], -d[1]};
  return d;
}

std::string fmt(const Rational& q) { return to_string(q); }
std::string fmt(const Vec2& v) { return "(" + fmt(v[0]) + "," + fmt(v[1]) + ")"; }

Rational level_of(const Elem& e) { return (*e.level)[0]; }

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw UnsupportedError("exponent out of range");
  return z.get_si();
}

// Parametric form of a one-dimensional cell: p + s v with s in the open interval (lo, hi).
struct Param {
  Vec2 p, v;
  std::optional<Rational> lo, hi;
};

Param param(const Cell2& c) {
  switch (c.kind) {
    case Cell2::Kind::Segment: return {c.a, sub(c.b, c.a), Rational(0), Rational(1)};
    case Cell2::Kind::Ray: return {c.a, to_vec(c.dir), Rational(0), std::nullopt};
    case Cell2::Kind::Line: return {c.a, to_vec(c.dir), std::nullopt, std::nullopt};
    default: throw DomainError("a point has no parametrisation");
  }
}

bool inside(const Rational& s, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  return (!lo || s > *lo) && (!hi || s < *hi);
}

Cell2 make_point(const Vec2& x) {
  Cell2 c;
  c.kind = Cell2::Kind::Point;
  c.a = x;
  return c;
}

Cell2 from_interval(const Vec2& p, const Vec2& v, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  Cell2 c;
  if (lo && hi) {
    c.kind = Cell2::Kind::Segment;
    c.a = axpy(p, *lo, v);
    c.b = axpy(p, *hi, v);
    if (c.b < c.a) std::swap(c.a, c.b);
  } else if (lo) {
    c.kind = Cell2::Kind::Ray;
    c.a = axpy(p, *lo, v);
    c.dir = primitive(v);
  } else if (hi) {
    c.kind = Cell2::Kind::Ray;
    c.a = axpy(p, *hi, v);
    c.dir = primitive({-v[0], -v[1]});
  } else {
    c.kind = Cell2::Kind::Line;
    c.dir = orient(primitive(v));
    const Vec2 d = to_vec(c.dir);
    c.a = axpy(p, -dot(p, d) / dot(d, d), d);
  }
  return c;
}

std::string linear_text(const Integer& alpha, const Integer& beta, const Rational& gamma) {
  // alpha gX + beta gY = gamma
  std::string s;
  auto term = [&](const Integer& k, const char* name) {
    if (k == 0) return;
    if (s.empty()) s = k == 1 ? "" : k == -1 ? "-" : to_string(k) + "*";
    else s += k > 0 ? (k == 1 ? " + " : " + " + to_string(k) + "*") : (k == -1 ? " - " : " - " + to_string(Integer(-k)) + "*");
    s += name;
  };
  term(alpha, "gX");
  term(beta, "gY");
  return s + " = " + fmt(gamma);
}

int cell_rank(const Cell2& c) { return static_cast<int>(c.kind); }

bool cell_less(const Cell2& x, const Cell2& y) {
  if (x.dim() != y.dim()) return x.dim() < y.dim();
  if (x.a != y.a) return x.a < y.a;
  if (cell_rank(x) != cell_rank(y)) return cell_rank(x) < cell_rank(y);
  if (x.kind == Cell2::Kind::Segment) return x.b < y.b;
  return x.dir < y.dir;
}

}  // namespace

bool operator==(const Cell2& x, const Cell2& y) {
  if (x.kind != y.kind || x.a != y.a) return false;
  if (x.kind == Cell2::Kind::Segment) return x.b == y.b;
  if (x.kind == Cell2::Kind::Point) return true;
  return x.dir == y.dir;
}

bool Cell2::contains(const Vec2& x) const {
  if (kind == Kind::Point) return x == a;
  const Param pr = param(*this);
  const Vec2 w = sub(x, pr.p);
  if (cross(w, pr.v) != 0) return false;
  return inside(dot(w, pr.v) / dot(pr.v, pr.v), pr.lo, pr.hi);
}

std::string Cell2::constraints() const {
  if (kind == Kind::Point) return "gX = " + fmt(a[0]) + ", gY = " + fmt(a[1]);
  const Param pr = param(*this);
  const std::array<Integer, 2> d = primitive(pr.v);
  // d_y gX - d_x gY = d_y a_x - d_x a_y, oriented so the leading coefficient is positive
  Integer alpha = d[1], beta = -d[0];
  if (alpha < 0 || (alpha == 0 && beta < 0)) {
    alpha = -alpha;
    beta = -beta;
  }
  std::string s = linear_text(alpha, beta, alpha * a[0] + beta * a[1]);
  const int coord = d[0] != 0 ? 0 : 1;
  const char* name = coord == 0 ? "gX" : "gY";
  auto at = [&](const Rational& t) -> Rational { return pr.p[coord] + t * pr.v[coord]; };
  std::optional<Rational> lo, hi;
  if (pr.lo) (pr.v[coord] > 0 ? lo : hi) = at(*pr.lo);
  if (pr.hi) (pr.v[coord] > 0 ? hi : lo) = at(*pr.hi);
  if (lo && hi) s += ", " + fmt(*lo) + " < " + name + " < " + fmt(*hi);
  else if (lo) s += std::string(", ") + name + " > " + fmt(*lo);
  else if (hi) s += std::string(", ") + name + " < " + fmt(*hi);
  return s;
}

std::string Cell2::to_string() const {
  auto dirs = [&] { return "(" + tropext::to_string(dir[0]) + "," + tropext::to_string(dir[1]) + ")"; };
  switch (kind) {
    case Kind::Point: return "point " + fmt(a);
    case Kind::Segment: return "segment " + fmt(a) + " -- " + fmt(b);
    case Kind::Ray: return "ray from " + fmt(a) + " towards " + dirs();
    case Kind::Line: return "line through " + fmt(a) + " along " + dirs();
  }
  return {};
}

std::optional<Cell2> intersect(const Cell2& x, const Cell2& y) {
  if (x.kind == Cell2::Kind::Point) return y.contains(x.a) ? std::optional<Cell2>(x) : std::nullopt;
  if (y.kind == Cell2::Kind::Point) return x.contains(y.a) ? std::optional<Cell2>(y) : std::nullopt;
  const Param p1 = param(x), p2 = param(y);
  const Rational cr = cross(p1.v, p2.v);
  const Vec2 w = sub(p2.p, p1.p);
  if (cr != 0) {
    const Rational s = cross(w, p2.v) / cr, t = cross(w, p1.v) / cr;
    if (!inside(s, p1.lo, p1.hi) || !inside(t, p2.lo, p2.hi)) return std::nullopt;
    return make_point(axpy(p1.p, s, p1.v));
  }
  if (cross(w, p1.v) != 0) return std::nullopt;
  // Collinear: express y's interval in x's parameter.
  const Rational vv = dot(p1.v, p1.v);
  const Rational off = dot(w, p1.v) / vv, k = dot(p2.v, p1.v) / vv;
  std::optional<Rational> lo2, hi2;
  auto map = [&](const Rational& t) -> Rational { return off + k * t; };
  if (k > 0) {
    if (p2.lo) lo2 = map(*p2.lo);
    if (p2.hi) hi2 = map(*p2.hi);
  } else {
    if (p2.hi) lo2 = map(*p2.hi);
    if (p2.lo) hi2 = map(*p2.lo);
  }
  std::optional<Rational> lo = p1.lo, hi = p1.hi;
  if (lo2 && (!lo || *lo2 > *lo)) lo = lo2;
  if (hi2 && (!hi || *hi2 < *hi)) hi = hi2;
  if (lo && hi && *lo >= *hi) return std::nullopt;
  return from_interval(p1.p, p1.v, lo, hi);
}

const std::vector<std::string>& unit_names() {
  static const std::vector<std::string> names{"cX", "cY"};
  return names;
}

namespace {

struct Collinear {
  std::array<Integer, 2> e;
  std::vector<std::pair<long, Unit>> terms;  // polynomial in z = c^e
};

// Support of b on one line: b = c^a0 * g(c^e).
std::optional<Collinear> collinear_form(const HPoly& b) {
  const auto& t = b.terms();
  if (t.size() < 2) return std::nullopt;
  const Exponent a0 = t.begin()->first;
  const Exponent a1 = std::next(t.begin())->first;
  Collinear out;
  out.e = orient(primitive({Rational(a1[0] - a0[0]), Rational(a1[1] - a0[1])}));
  const Vec2 e = to_vec(out.e);
  for (const auto& [a, c] : t) {
    const Vec2 d{Rational(a[0] - a0[0]), Rational(a[1] - a0[1])};
    if (cross(d, e) != 0) return std::nullopt;
    const Rational k = dot(d, e) / dot(e, e);
    out.terms.emplace_back(to_long(k.get_num()), c.unit);
  }
  return out;
}

Unit upow(const Hyperfield& f, const Unit& u, long n) {
  Unit base = n < 0 ? f.unit_inv(u) : u;
  Unit r = f.unit_one();
  for (long i = 0; i < std::labs(n); ++i) r = f.unit_mul(r, base);
  return r;
}

// s*x + t*y = 1 for a primitive (x, y).
std::pair<Integer, Integer> bezout(const std::array<Integer, 2>& e) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), e[0].get_mpz_t(), e[1].get_mpz_t());
  if (g < 0) {
    s = -s;
    t = -t;
  }
  return {s, t};
}

HPoly binomial(const Hyperfield& f, const std::array<Integer, 2>& e, const Unit& z) {
  // c^e = z, cleared of negative exponents
  const long ex = to_long(e[0]), ey = to_long(e[1]);
  HPoly p(f, 2);
  const Elem one = f.one();
  const Elem mz{f.unit_neg(z), std::nullopt};
  if (ey >= 0) {
    p.set_term({ex, ey}, one);
    p.set_term({0, 0}, mz);
  } else {
    p.set_term({ex, 0}, one);
    p.set_term({0, -ey}, mz);
  }
  return p;
}

std::vector<Unit> roots_of(const Hyperfield& f, const std::map<long, Unit>& poly) {
  std::vector<std::pair<long, Unit>> terms;
  for (const auto& [e, c] : poly)
    if (!unit_is_zero(c)) terms.emplace_back(e, c);
  if (terms.size() < 2) return {};
  BaseRoots br = base_roots(f, terms);
  if (!br.enumerable) throw UnsupportedError("base root set is not finite");
  return br.units;
}

using UPoly = std::map<long, Unit>;

void uadd_term(const Hyperfield& f, UPoly& p, long e, const Unit& c) {
  auto it = p.find(e);
  Unit v = it == p.end() ? c : f.field_add(it->second, c);
  if (unit_is_zero(v)) {
    if (it != p.end()) p.erase(it);
  } else {
    p[e] = v;
  }
}

UPoly umul(const Hyperfield& f, const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) uadd_term(f, out, i + j, f.unit_mul(x, y));
  return out;
}

UPoly upow(const Hyperfield& f, const UPoly& a, long n) {
  UPoly r{{0, f.unit_one()}};
  for (long i = 0; i < n; ++i) r = umul(f, r, a);
  return r;
}

Unit ueval(const Hyperfield& f, const UPoly& p, const Unit& x) {
  Unit s = Zero{};
  for (const auto& [e, c] : p) s = f.field_add(s, f.unit_mul(c, upow(f, x, e)));
  return s;
}

bool proportional(const Hyperfield& f, const HPoly& a, const HPoly& b) {
  if (a.terms().size() != b.terms().size()) return false;
  std::optional<Unit> ratio;
  for (const auto& [e, c] : a.terms()) {
    auto it = b.terms().find(e);
    if (it == b.terms().end()) return false;
    Unit r = f.unit_mul(it->second.unit, f.unit_inv(c.unit));
    if (ratio && compare_units(*ratio, r) != 0) return false;
    ratio = r;
  }
  return true;
}

std::string residual(const HPoly& b1, const HPoly& b2) {
  return "{" + b1.to_string(unit_names()) + " = 0, " + b2.to_string(unit_names()) + " = 0}";
}

// Linear in c_v with a monomial coefficient: b = u c_w^k c_v^(m+1) + r(c_w) c_v^m.
struct LinearIn {
  std::size_t v;
  Unit u;
  long k;
  UPoly r;
};

std::optional<LinearIn> linear_in(const HPoly& b, std::size_t v) {
  long m = std::numeric_limits<long>::max(), top = std::numeric_limits<long>::min();
  for (const auto& [e, c] : b.terms()) {
    m = std::min(m, e[v]);
    top = std::max(top, e[v]);
  }
  if (top != m + 1) return std::nullopt;
  LinearIn out{v, Unit{}, 0, {}};
  int lead = 0;
  for (const auto& [e, c] : b.terms()) {
    if (e[v] == top) {
      ++lead;
      out.u = c.unit;
      out.k = e[1 - v];
    } else {
      out.r[e[1 - v]] = c.unit;
    }
  }
  if (lead != 1) return std::nullopt;
  return out;
}

void add_point(const Hyperfield& f, BaseSolutions& out, const Unit& x, const Unit& y) {
  if (unit_is_zero(x) || unit_is_zero(y)) return;
  for (const auto& p : out.points)
    if (compare_units(p[0], x) == 0 && compare_units(p[1], y) == 0) return;
  (void)f;
  out.points.push_back({x, y});
}

}  // namespace

BaseSolutions solve_base_system(const HPoly& b1, const HPoly& b2) {
  const Hyperfield& f = b1.hyperfield();
  if (!f.is_field()) throw UnsupportedError("base conditions are solved over fields only, not over " + f.key());
  BaseSolutions out;
  if (b1.terms().size() < 2 || b2.terms().size() < 2) return out;
  auto l1 = collinear_form(b1), l2 = collinear_form(b2);
  if (!l1 && l2) return solve_base_system(b2, b1);

  if (l1 && l2) {
    const auto z1 = roots_of(f, UPoly(l1->terms.begin(), l1->terms.end()));
    const auto z2 = roots_of(f, UPoly(l2->terms.begin(), l2->terms.end()));
    if (l1->e == l2->e) {
      for (const auto& z : z1)
        for (const auto& w : z2)
          if (compare_units(z, w) == 0) out.families.push_back({binomial(f, l1->e, z)});
      return out;
    }
    // c^e1 = z1, c^e2 = z2 through c = d^W with e1 W = (1, 0), e2 W = (l21, l22).
    const auto [s, t] = bezout(l1->e);
    Integer w[2][2] = {{s, -l1->e[1]}, {t, l1->e[0]}};
    const Integer l21 = l2->e[0] * w[0][0] + l2->e[1] * w[1][0];
    Integer l22 = l2->e[0] * w[0][1] + l2->e[1] * w[1][1];
    if (l22 < 0) {
      l22 = -l22;
      w[0][1] = -w[0][1];
      w[1][1] = -w[1][1];
    }
    for (const auto& d1 : z1)
      for (const auto& zz : z2) {
        const Unit rhs = f.unit_mul(zz, upow(f, d1, -to_long(l21)));
        for (const auto& d2 : roots_of(f, {{to_long(l22), f.unit_one()}, {0, f.unit_neg(rhs)}}))
          add_point(f, out, f.unit_mul(upow(f, d1, to_long(w[0][0])), upow(f, d2, to_long(w[0][1]))),
                    f.unit_mul(upow(f, d1, to_long(w[1][0])), upow(f, d2, to_long(w[1][1]))));
      }
    return out;
  }

  if (l1) {
    // Substitute c^e = z into b2 and solve for the complementary coordinate d2.
    const auto [s, t] = bezout(l1->e);
    const Integer w[2][2] = {{s, -l1->e[1]}, {t, l1->e[0]}};
    for (const auto& z : roots_of(f, UPoly(l1->terms.begin(), l1->terms.end()))) {
      UPoly g;
      for (const auto& [a, c] : b2.terms()) {
        const long k1 = to_long(a[0] * w[0][0] + a[1] * w[1][0]);
        const long k2 = to_long(a[0] * w[0][1] + a[1] * w[1][1]);
        uadd_term(f, g, k2, f.unit_mul(c.unit, upow(f, z, k1)));
      }
      if (g.empty()) {
        out.families.push_back({binomial(f, l1->e, z)});
        continue;
      }
      for (const auto& d2 : roots_of(f, g))
        add_point(f, out, f.unit_mul(upow(f, z, to_long(w[0][0])), upow(f, d2, to_long(w[0][1]))),
                  f.unit_mul(upow(f, z, to_long(w[1][0])), upow(f, d2, to_long(w[1][1]))));
    }
    return out;
  }

  if (proportional(f, b1, b2)) {
    out.families.push_back({b1});
    return out;
  }
  const HPoly* polys[2] = {&b1, &b2};
  for (int i = 0; i < 2; ++i)
    for (std::size_t v = 0; v < 2; ++v) {
      auto lin = linear_in(*polys[i], v);
      if (!lin) continue;
      const HPoly& other = *polys[1 - i];
      const std::size_t wv = 1 - v;
      // c_v = -r(c_w) / (u c_w^k); clear denominators in the other polynomial.
      long amin = std::numeric_limits<long>::max(), amax = std::numeric_limits<long>::min();
      for (const auto& [e, c] : other.terms()) {
        amin = std::min(amin, e[v]);
        amax = std::max(amax, e[v]);
      }
      const long A = amax - amin;
      UPoly neg_r;
      for (const auto& [e, c] : lin->r) neg_r[e] = f.unit_neg(c);
      const UPoly den{{lin->k, lin->u}};
      UPoly total;
      for (const auto& [e, c] : other.terms()) {
        const long alpha = e[v] - amin;
        UPoly term = umul(f, upow(f, neg_r, alpha), upow(f, den, A - alpha));
        for (const auto& [k, x] : term) uadd_term(f, total, k + e[wv], f.unit_mul(x, c.unit));
      }
      if (total.empty()) {
        out.families.push_back({*polys[i]});
        return out;
      }
      for (const auto& cw : roots_of(f, total)) {
        const Unit cv = f.unit_mul(ueval(f, neg_r, cw), f.unit_inv(ueval(f, den, cw)));
        if (v == 0) add_point(f, out, cv, cw);
        else add_point(f, out, cw, cv);
      }
      return out;
    }
  throw UnsupportedError("base system outside the supported shapes: " + residual(b1, b2));
}

namespace {

std::optional<bool> torus_solvable(const HPoly& cond) {
  const Hyperfield& f = cond.hyperfield();
  if (auto l = collinear_form(cond)) {
    BaseRoots br = base_roots(f, l->terms);
    if (!br.enumerable) return true;
    return !br.units.empty();
  }
  auto at = [&](const Unit& x, const Unit& y) {
    return is_root(cond, {Elem{x, std::nullopt}, Elem{y, std::nullopt}});
  };
  if (f.is_finite()) {
    for (const auto& x : f.elements())
      for (const auto& y : f.elements())
        if (!x.is_zero() && !y.is_zero() && at(x.unit, y.unit)) return true;
    return false;
  }
  if (!f.is_field()) return std::nullopt;
  // Try a few values of cY and solve for cX.
  for (int n : {1, -1, 2, -2, 3, -3}) {
    const Unit y = f.base_kind() == BaseKind::Gaussian ? Unit{Gaussian{Rational(n), Rational(0)}} : Unit{Rational(n)};
    UPoly g;
    for (const auto& [e, c] : cond.terms()) uadd_term(f, g, e[0], f.unit_mul(c.unit, upow(f, y, e[1])));
    if (g.empty() || !roots_of(f, g).empty()) return true;
  }
  return std::nullopt;
}

long edge_weight(const std::vector<Exponent>& J) {
  const Vec2 d{Rational(J.back()[0] - J.front()[0]), Rational(J.back()[1] - J.front()[1])};
  const Vec2 e = to_vec(primitive(d));
  Rational lo = 0, hi = 0;
  for (const auto& a : J) {
    const Rational k = dot({Rational(a[0] - J.front()[0]), Rational(a[1] - J.front()[1])}, e) / dot(e, e);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  return to_long(Rational(hi - lo).get_num());
}

}  // namespace

FineCurve fine_hypersurface(const HPoly& p) {
  const Hyperfield& h = p.hyperfield();
  if (!h.is_extension() || h.rank() != 1 || p.nvars() != 2)
    throw DomainError("fine curves need a polynomial in X, Y over a rank one extension");
  if (p.is_zero()) throw DomainError("the zero polynomial has no hypersurface");
  const Hyperfield base = h.base();
  std::vector<Exponent> sup;
  std::vector<Rational> lev;
  std::vector<Unit> units;
  for (const auto& [e, c] : p.terms()) {
    sup.push_back(e);
    lev.push_back(level_of(c));
    units.push_back(c.unit);
  }
  const std::size_t n = sup.size();
  auto a = [&](std::size_t i) { return Vec2{Rational(sup[i][0]), Rational(sup[i][1])}; };
  // value of term l minus term i at g
  auto diff = [&](std::size_t l, std::size_t i, const Vec2& g) -> Rational { return lev[l] - lev[i] + dot(sub(a(l), a(i)), g); };

  std::map<std::vector<std::size_t>, Cell2> edges;
  std::map<Vec2, std::vector<std::size_t>> vertices;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec2 d = sub(a(i), a(j));
      const Rational r = lev[j] - lev[i];
      const Vec2 g0{r * d[0] / dot(d, d), r * d[1] / dot(d, d)};
      const Vec2 v = to_vec(primitive({-d[1], d[0]}));
      std::optional<Rational> lo, hi;
      bool empty = false;
      for (std::size_t l = 0; l < n && !empty; ++l) {
        const Rational alpha = diff(l, i, g0), beta = dot(sub(a(l), a(i)), v);
        if (beta == 0) empty = alpha < 0;
        else if (beta > 0) {
          const Rational s = -alpha / beta;
          if (!lo || s > *lo) lo = s;
        } else {
          const Rational s = -alpha / beta;
          if (!hi || s < *hi) hi = s;
        }
      }
      if (empty || (lo && hi && *lo >= *hi)) continue;
      const Rational mid = lo && hi ? (*lo + *hi) / 2 : lo ? *lo + 1 : hi ? *hi - 1 : Rational(0);
      auto argmin = [&](const Rational& s) {
        std::vector<std::size_t> J;
        const Vec2 g = axpy(g0, s, v);
        for (std::size_t l = 0; l < n; ++l)
          if (diff(l, i, g) == 0) J.push_back(l);
        return J;
      };
      const auto J = argmin(mid);
      if (edges.count(J)) continue;
      edges.emplace(J, from_interval(g0, v, lo, hi));
      for (const auto& end : {lo, hi})
        if (end) vertices.emplace(axpy(g0, *end, v), argmin(*end));
    }

  FineCurve out{p, {}};
  auto make = [&](const Cell2& cell, const std::vector<std::size_t>& J) {
    CurveCell cc{cell, {}, HPoly(base, 2, p.laurent()), 0, std::nullopt};
    for (std::size_t l : J) {
      cc.J.push_back(sup[l]);
      cc.condition.set_term(sup[l], Elem{units[l], std::nullopt});
    }
    if (cell.dim() == 1) cc.weight = edge_weight(cc.J);
    cc.solvable = torus_solvable(cc.condition);
    out.cells.push_back(std::move(cc));
  };
  for (const auto& [pt, J] : vertices) make(make_point(pt), J);
  for (const auto& [J, cell] : edges) make(cell, J);
  std::stable_sort(out.cells.begin(), out.cells.end(),
                   [](const CurveCell& x, const CurveCell& y) { return cell_less(x.cell, y.cell); });
  return out;
}

TropCurve trop_project(const FineCurve& c) {
  TropCurve t;
  for (const auto& cc : c.cells) t.cells.emplace_back(cc.cell, cc.weight);
  return t;
}

std::string FinePoint::to_string(const Hyperfield& h) const {
  return "(" + h.format(coords[0]) + ", " + h.format(coords[1]) + ")";
}

bool operator<(const FinePoint& x, const FinePoint& y) {
  const int c = compare_elems(x.coords[0], y.coords[0]);
  if (c != 0) return c < 0;
  return compare_elems(x.coords[1], y.coords[1]) < 0;
}

std::string FineComponent::to_string(const Hyperfield& base) const {
  const char* cn[2] = {"cX", "cY"};
  const char* gn[2] = {"gX", "gY"};
  std::string s = "{(";
  for (int i = 0; i < 2; ++i) {
    if (i) s += ", ";
    s += "(";
    s += fixed[i] ? base.format_unit(*fixed[i]) : std::string(cn[i]);
    s += ",";
    const bool pinned = piece.kind == Cell2::Kind::Point || (piece.kind != Cell2::Kind::Segment && piece.dir[i] == 0) ||
                        (piece.kind == Cell2::Kind::Segment && piece.a[i] == piece.b[i]);
    s += pinned ? tropext::to_string(piece.a[i]) : std::string(gn[i]);
    s += ")";
  }
  s += ") : " + piece.constraints();
  for (const auto& c : conditions) {
    bool pinned = false;
    for (int i = 0; i < 2; ++i)
      if (fixed[i] && c.terms().size() == 2 && c.terms().count(i == 0 ? Exponent{1, 0} : Exponent{0, 1}) &&
          c.terms().count({0, 0}))
        pinned = true;
    if (!pinned) s += ", " + c.to_string(unit_names()) + " = 0";
  }
  return s + "}";
}

namespace {

std::array<std::optional<Unit>, 2> fixed_units(const Hyperfield& f, const std::vector<HPoly>& conds) {
  std::array<std::optional<Unit>, 2> out;
  for (const auto& c : conds) {
    if (c.terms().size() != 2 || !c.terms().count({0, 0})) continue;
    for (int i = 0; i < 2; ++i) {
      const Exponent e = i == 0 ? Exponent{1, 0} : Exponent{0, 1};
      if (!c.terms().count(e)) continue;
      out[i] = f.unit_neg(f.unit_mul(c.terms().at({0, 0}).unit, f.unit_inv(c.terms().at(e).unit)));
    }
  }
  return out;
}

FineComponent make_component(const Hyperfield& f, const Cell2& piece, std::vector<HPoly> conds) {
  FineComponent c{piece, std::move(conds), {}};
  c.fixed = fixed_units(f, c.conditions);
  return c;
}

HPoly coordinate_condition(const Hyperfield& f, std::size_t i, const Unit& u) {
  HPoly p(f, 2);
  p.set_term(i == 0 ? Exponent{1, 0} : Exponent{0, 1}, f.one());
  p.set_term({0, 0}, Elem{f.unit_neg(u), std::nullopt});
  return p;
}

}  // namespace

bool on_curve(const FineCurve& c, const FinePoint& x) {
  if (x.coords[0].is_zero() || x.coords[1].is_zero()) throw DomainError("fine curves live in the torus");
  const Vec2 g{level_of(x.coords[0]), level_of(x.coords[1])};
  for (const auto& cc : c.cells)
    if (cc.cell.contains(g) &&
        is_root(cc.condition, {Elem{x.coords[0].unit, std::nullopt}, Elem{x.coords[1].unit, std::nullopt}}))
      return true;
  return false;
}

FineIntersection fine_intersect(const FineCurve& c1, const FineCurve& c2) {
  const Hyperfield& h = c1.source.hyperfield();
  if (!(h == c2.source.hyperfield())) throw DomainError("fine curves over different hyperfields");
  const Hyperfield f = h.base();
  FineIntersection out;
  std::set<FinePoint> pts;
  for (const auto& x : c1.cells)
    for (const auto& y : c2.cells) {
      auto piece = intersect(x.cell, y.cell);
      if (!piece) continue;
      BaseSolutions bs = solve_base_system(x.condition, y.condition);
      for (const auto& fam : bs.families) out.components.push_back(make_component(f, *piece, fam));
      for (const auto& u : bs.points) {
        if (piece->dim() == 0) {
          pts.insert(FinePoint{{Elem{u[0], GroupElem(piece->a[0])}, Elem{u[1], GroupElem(piece->a[1])}}});
        } else {
          out.components.push_back(
              make_component(f, *piece, {coordinate_condition(f, 0, u[0]), coordinate_condition(f, 1, u[1])}));
        }
      }
    }
  out.points.assign(pts.begin(), pts.end());
  return out;
}

HPoly perturb_units(const HPoly& p, std::uint64_t seed) {
  const Hyperfield& h = p.hyperfield();
  const Hyperfield f = h.base();
  Rng rng(seed);
  auto generic = [&]() -> Unit {
    switch (f.base_kind()) {
      case BaseKind::Rationals: return random_nonzero_rational(rng, 999983, 999979);
      case BaseKind::Gaussian:
        return Gaussian{random_nonzero_rational(rng, 999983, 999979), random_nonzero_rational(rng, 999983, 999979)};
      case BaseKind::Finite:
        if (f.is_field()) return random_unit(rng, f);
        [[fallthrough]];
      default: throw UnsupportedError("generic perturbation needs a base field, not " + f.key());
    }
  };
  HPoly out(h, p.nvars(), p.laurent());
  for (const auto& [e, c] : p.terms()) out.set_term(e, Elem{f.unit_mul(c.unit, generic()), c.level});
  return out;
}

std::vector<Vec2> stable_intersect(const FineCurve& c1, const FineCurve& c2, std::uint64_t seed) {
  FineIntersection fi = fine_intersect(c1, c2);
  for (std::uint64_t attempt = 0; fi.degenerate(); ++attempt) {
    if (attempt == 16) throw UnsupportedError("no generic perturbation found after 16 attempts");
    fi = fine_intersect(c1, fine_hypersurface(perturb_units(c2.source, seed * 1000003ULL + attempt)));
  }
  std::set<Vec2> pts;
  for (const auto& p : fi.points) pts.insert({level_of(p.coords[0]), level_of(p.coords[1])});
  return {pts.begin(), pts.end()};
}

std::vector<FinePoint> oracle_intersect_series(const SeriesPoly& p, const SeriesPoly& q, const GroupElem& rel) {
  const Hom f = Hom::fval(p.field(), p.rank());
  std::set<FinePoint> pts;
  for (const auto& [x, y] : solve_series_system({p, q}, {}, rel)) pts.insert(FinePoint{{f.apply(x), f.apply(y)}});
  return {pts.begin(), pts.end()};
}

Integer hull_area2(const std::vector<Exponent>& in) {
  std::vector<std::pair<long, long>> pts;
  for (const auto& e : in) pts.emplace_back(e[0], e[1]);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;
  auto crs = [](const std::pair<long, long>& o, const std::pair<long, long>& a, const std::pair<long, long>& b) -> Integer {
    return Integer(a.first - o.first) * (b.second - o.second) - Integer(a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && crs(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && crs(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  Integer area = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    area += Integer(p.first) * q.second - Integer(q.first) * p.second;
  }
  return abs(area);
}

long mixed_volume(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  std::vector<Exponent> sum;
  for (const auto& x : a)
    for (const auto& y : b) sum.push_back({x[0] + y[0], x[1] + y[1]});
  const Integer mv2 = hull_area2(sum) - hull_area2(a) - hull_area2(b);
  return to_long(Integer(mv2 / 2));
}

std::vector<FinePoint> HomotopyStart::solutions() const {
  std::vector<FinePoint> out;
  for (const auto& c : cells) out.insert(out.end(), c.solutions.begin(), c.solutions.end());
  return out;
}

HomotopyStart homotopy_start(const SeriesPoly& p, const SeriesPoly& q) {
  if (p.nvars() != 2 || q.nvars() != 2) throw DomainError("homotopy start systems need two polynomials in X, Y");
  const Hom f = Hom::fval(p.field(), p.rank());
  const FineCurve c1 = fine_hypersurface(pushforward(f, p)), c2 = fine_hypersurface(pushforward(f, q));
  HomotopyStart out;
  std::vector<Exponent> s1, s2;
  for (const auto& [e, c] : p.coeffs()) s1.push_back(e);
  for (const auto& [e, c] : q.coeffs()) s2.push_back(e);
  out.bkk = mixed_volume(s1, s2);
  for (const auto& x : c1.cells)
    for (const auto& y : c2.cells) {
      auto piece = intersect(x.cell, y.cell);
      if (!piece) continue;
      BaseSolutions bs = solve_base_system(x.condition, y.condition);
      if (!bs.families.empty() || (piece->dim() == 1 && !bs.points.empty()))
        throw DomainError("lift not generic, reseed");
      if (piece->dim() == 1) continue;
      MixedCell mc{piece->a, x.J, y.J, mixed_volume(x.J, y.J), {}};
      for (const auto& u : bs.points)
        mc.solutions.push_back(FinePoint{{Elem{u[0], GroupElem(piece->a[0])}, Elem{u[1], GroupElem(piece->a[1])}}});
      std::sort(mc.solutions.begin(), mc.solutions.end());
      out.total_mixed_volume += mc.mixed_volume;
      out.cells.push_back(std::move(mc));
    }
  return out;
}

SeriesPoly random_lift(const HPoly& p, std::uint64_t seed) {
  const Hyperfield& f = p.hyperfield();
  if (!f.is_field()) throw DomainError("lifting needs a polynomial over a base field");
  Rng rng(seed);
  std::uniform_int_distribution<int> den(1, 7);
  SeriesPoly out(f, p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const int d = den(rng);
    std::uniform_int_distribution<int> num(-4 * d, 4 * d);
    out.add_term(e, Series::monomial(f, c.unit, GroupElem(make_rational(num(rng), d))));
  }
  return out;
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<FineCurve>& curves, const std::vector<Vec2>& points, bool labels) {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  auto grow = [&](const Vec2& v) {
    xmin = std::min(xmin, v[0].get_d());
    xmax = std::max(xmax, v[0].get_d());
    ymin = std::min(ymin, v[1].get_d());
    ymax = std::max(ymax, v[1].get_d());
  };
  for (const auto& c : curves)
    for (const auto& cc : c.cells) {
      grow(cc.cell.a);
      if (cc.cell.kind == Cell2::Kind::Segment) grow(cc.cell.b);
    }
  for (const auto& p : points) grow(p);
  const double pad = std::max(1.5, 0.3 * std::max(xmax - xmin, ymax - ymin));
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;
  const double scale = 480.0 / std::max(xmax - xmin, ymax - ymin);
  const double width = (xmax - xmin) * scale, height = (ymax - ymin) * scale;
  auto X = [&](double x) { return num((x - xmin) * scale); };
  auto Y = [&](double y) { return num((ymax - y) * scale); };
  const double reach = 2 * (xmax - xmin + ymax - ymin);
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
                  "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<line x1=\"" + X(xmin) + "\" y1=\"" + Y(0) + "\" x2=\"" + X(xmax) + "\" y2=\"" + Y(0) +
       "\" stroke=\"#ccc\" stroke-width=\"0.5\"/>\n";
  s += "<line x1=\"" + X(0) + "\" y1=\"" + Y(ymin) + "\" x2=\"" + X(0) + "\" y2=\"" + Y(ymax) +
       "\" stroke=\"#ccc\" stroke-width=\"0.5\"/>\n";
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const char* color = colors[k % 4];
    for (const auto& cc : curves[k].cells) {
      const Cell2& c = cc.cell;
      const double ax = c.a[0].get_d(), ay = c.a[1].get_d();
      double bx = ax, by = ay, lx = ax, ly = ay;
      if (c.kind == Cell2::Kind::Point) {
        s += "<circle cx=\"" + X(ax) + "\" cy=\"" + Y(ay) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
      } else {
        if (c.kind == Cell2::Kind::Segment) {
          bx = c.b[0].get_d();
          by = c.b[1].get_d();
        } else {
          const double dx = c.dir[0].get_d(), dy = c.dir[1].get_d();
          const double len = std::max(std::abs(dx), std::abs(dy));
          bx = ax + reach * dx / len;
          by = ay + reach * dy / len;
          if (c.kind == Cell2::Kind::Line) {
            lx = ax - reach * dx / len;
            ly = ay - reach * dy / len;
          }
        }
        const double sx = c.kind == Cell2::Kind::Line ? lx : ax, sy = c.kind == Cell2::Kind::Line ? ly : ay;
        s += "<line x1=\"" + X(sx) + "\" y1=\"" + Y(sy) + "\" x2=\"" + X(bx) + "\" y2=\"" + Y(by) + "\" stroke=\"" +
             color + "\" stroke-width=\"" + num(1.5 * static_cast<double>(std::max(1L, cc.weight))) + "\"/>\n";
      }
      if (labels) {
        double tx = ax, ty = ay;
        if (c.kind == Cell2::Kind::Segment) {
          tx = (ax + bx) / 2;
          ty = (ay + by) / 2;
        } else if (c.dim() == 1) {
          const double dx = c.dir[0].get_d(), dy = c.dir[1].get_d();
          const double len = std::max(std::abs(dx), std::abs(dy));
          tx = ax + 0.6 * pad * dx / len;
          ty = ay + 0.6 * pad * dy / len;
        }
        s += "<text x=\"" + num((tx - xmin) * scale + 4) + "\" y=\"" + num((ymax - ty) * scale - 4) +
             "\" font-size=\"10\" fill=\"" + color + "\">" + escape(cc.condition.to_string(unit_names()) + " = 0") +
             "</text>\n";
      }
    }
  }
  for (const auto& p : points)
    s += "<circle cx=\"" + X(p[0].get_d()) + "\" cy=\"" + Y(p[1].get_d()) +
         "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  return s + "</svg>\n";
}

}  // namespace tropext
