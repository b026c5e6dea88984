/* SPDX-License-Identifier: Apache-2.0 */
#include "dense.hpp"

#include "error.hpp"

#include <algorithm>

namespace tropext::dense {

namespace {

// Integers beyond this are not factored; the solver reports instead of stalling.
const Integer kFactorLimit("100000000000000000");

struct GInt {
  Integer re, im;
};

Integer norm(const GInt& z) { return z.re * z.re + z.im * z.im; }

GInt gmul(const GInt& a, const GInt& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

// a / b when b divides a in Z[i].
bool gint_divides(const GInt& b, const GInt& a, GInt* q) {
  const Integer n = norm(b);
  Integer re = a.re * b.re + a.im * b.im;
  Integer im = a.im * b.re - a.re * b.im;
  if (re % n != 0 || im % n != 0) return false;
  if (q) *q = {re / n, im / n};
  return true;
}

std::vector<Integer> prime_factors(Integer n) {
  if (n < 0) n = -n;
  if (n > kFactorLimit) throw UnsupportedError("base solve incomplete: coefficient too large to factor (" + n.get_str() + ")");
  std::vector<Integer> out;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<Integer> divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  std::vector<Integer> out{1};
  for (const auto& p : prime_factors(n)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    const std::size_t m = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

std::vector<GInt> gaussian_primes_over(const Integer& p) {
  if (p == 2) return {{1, 1}};
  if (p % 4 == 3) return {{p, 0}};
  for (Integer a = 1; a * a < p; ++a) {
    Integer b2 = p - a * a;
    Integer b = sqrt(b2);
    if (b * b == b2) return {{a, b}, {a, -b}};
  }
  throw DomainError("no two-square decomposition of " + p.get_str());
}

// Divisors of z up to unit factors.
std::vector<GInt> gaussian_divisors(GInt z) {
  std::vector<GInt> out{{1, 0}};
  for (const auto& p : prime_factors(norm(z))) {
    for (const auto& pi : gaussian_primes_over(p)) {
      int e = 0;
      GInt q;
      while (gint_divides(pi, z, &q)) {
        z = q;
        ++e;
      }
      const std::size_t m = out.size();
      GInt pk{1, 0};
      for (int k = 1; k <= e; ++k) {
        pk = gmul(pk, pi);
        for (std::size_t i = 0; i < m; ++i) out.push_back(gmul(out[i], pk));
      }
    }
  }
  return out;
}

template <class T>
bool is_zero_coef(const T& c) {
  if constexpr (std::is_same_v<T, Rational>) return c == 0;
  else return gauss_is_zero(c);
}

// Synthetic division by (x - r); returns the quotient, remainder must vanish.
QPoly deflate(const QPoly& p, const Rational& r) {
  QPoly q(p.size() - 1);
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    acc = acc * r + p[i];
    q[i - 1] = acc;
  }
  return q;
}

GPoly deflate(const GPoly& p, const Gaussian& r) {
  GPoly q(p.size() - 1);
  Gaussian acc{0, 0};
  for (std::size_t i = p.size(); i-- > 1;) {
    acc = gadd(gauss_mul(acc, r), p[i]);
    q[i - 1] = acc;
  }
  return q;
}

QPoly qmod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

int sign_changes(const std::vector<int>& s) {
  int last = 0, n = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++n;
    last = v;
  }
  return n;
}

}  // namespace

Gaussian gadd(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
Gaussian gsub(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
Gaussian gdiv(const Gaussian& a, const Gaussian& b) { return gauss_mul(a, gauss_inv(b)); }

std::optional<Gaussian> gsqrt(const Gaussian& z) {
  if (z.im == 0) {
    if (z.re >= 0) {
      if (!is_perfect_square(z.re)) return std::nullopt;
      return Gaussian{exact_sqrt(z.re), 0};
    }
    if (!is_perfect_square(-z.re)) return std::nullopt;
    return Gaussian{0, exact_sqrt(-z.re)};
  }
  Rational n2 = z.re * z.re + z.im * z.im;
  if (!is_perfect_square(n2)) return std::nullopt;
  Rational r = exact_sqrt(n2);
  Rational x2 = (r + z.re) / 2, y2 = (r - z.re) / 2;
  if (!is_perfect_square(x2) || !is_perfect_square(y2)) return std::nullopt;
  Rational x = exact_sqrt(x2), y = exact_sqrt(y2);
  if (z.im < 0) y = -y;
  return Gaussian{x, y};
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim(GPoly& p) {
  while (!p.empty() && gauss_is_zero(p.back())) p.pop_back();
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Gaussian eval(const GPoly& p, const Gaussian& x) {
  Gaussian acc{0, 0};
  for (std::size_t i = p.size(); i-- > 0;) acc = gadd(gauss_mul(acc, x), p[i]);
  return acc;
}

std::vector<Rational> rational_roots(QPoly p) {
  trim(p);
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  p.erase(p.begin(), p.begin() + static_cast<long>(low));
  std::vector<Rational> out;
  if (p.size() <= 1) return out;
  if (p.size() == 2) return {Rational(-p[0] / p[1])};
  if (p.size() == 3) {
    const Rational disc = p[1] * p[1] - 4 * p[2] * p[0];
    if (disc < 0 || !is_perfect_square(disc)) return out;
    const Rational s = exact_sqrt(disc);
    out.push_back((-p[1] - s) / (2 * p[2]));
    if (s != 0) out.push_back((-p[1] + s) / (2 * p[2]));
    std::sort(out.begin(), out.end());
    return out;
  }
  Integer l = 1;
  for (const auto& c : p) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> z;
  for (const auto& c : p) z.push_back(Integer(c * l));
  for (const auto& u : divisors(z.front())) {
    for (const auto& v : divisors(z.back())) {
      for (int s : {1, -1}) {
        Rational r(u * s, v);
        r.canonicalize();
        if (std::find(out.begin(), out.end(), r) != out.end()) continue;
        if (eval(p, r) == 0) out.push_back(r);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Gaussian> gaussian_roots(GPoly p) {
  trim(p);
  std::size_t low = 0;
  while (low < p.size() && gauss_is_zero(p[low])) ++low;
  p.erase(p.begin(), p.begin() + static_cast<long>(low));
  std::vector<Gaussian> out;
  auto add = [&](const Gaussian& r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  if (p.size() <= 1) return out;
  if (p.size() == 2) {
    add(gdiv(Gaussian{-p[0].re, -p[0].im}, p[1]));
    return out;
  }
  if (p.size() == 3) {
    Gaussian disc = gsub(gauss_mul(p[1], p[1]), gauss_mul(Gaussian{4, 0}, gauss_mul(p[2], p[0])));
    auto s = gsqrt(disc);
    if (!s) return out;
    Gaussian two_a = gauss_mul(Gaussian{2, 0}, p[2]);
    Gaussian mb{-p[1].re, -p[1].im};
    add(gdiv(gadd(mb, *s), two_a));
    add(gdiv(gsub(mb, *s), two_a));
    return out;
  }
  Integer l = 1;
  for (const auto& c : p) l = lcm(lcm(l, Integer(c.re.get_den())), Integer(c.im.get_den()));
  std::vector<GInt> z;
  for (const auto& c : p) z.push_back({Integer(c.re * l), Integer(c.im * l)});
  const auto nums = gaussian_divisors(z.front());
  const auto dens = gaussian_divisors(z.back());
  const GInt units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  GPoly work = p;
  for (const auto& u : nums) {
    for (const auto& unit : units) {
      GInt num = gmul(u, unit);
      for (const auto& v : dens) {
        Gaussian r = gdiv(Gaussian{Rational(num.re), Rational(num.im)}, Gaussian{Rational(v.re), Rational(v.im)});
        if (std::find(out.begin(), out.end(), r) != out.end()) continue;
        if (gauss_is_zero(eval(work, r))) {
          out.push_back(r);
          while (work.size() > 1 && gauss_is_zero(eval(work, r))) work = deflate(work, r);
        }
      }
    }
  }
  return out;
}

int sturm_count(QPoly p, bool negative) {
  trim(p);
  if (p.empty()) throw DomainError("Sturm sequence of the zero polynomial");
  if (negative)
    for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
  while (p.size() > 1 && p[0] == 0) p.erase(p.begin());
  if (p.size() <= 1) return 0;
  std::vector<QPoly> seq{p};
  QPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  seq.push_back(d);
  for (;;) {
    QPoly r = qmod(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(r);
  }
  std::vector<int> at0, atinf;
  for (const auto& s : seq) {
    at0.push_back(sgn(s[0]));
    atinf.push_back(sgn(s.back()));
  }
  return sign_changes(at0) - sign_changes(atinf);
}

}  // namespace tropext::dense
