/* SPDX-License-Identifier: Apache-2.0 */
#include "elem.hpp"

#include "error.hpp"

namespace tropext {

bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
bool operator==(const Direction& a, const Direction& b) { return a.x == b.x && a.y == b.y; }

int compare_units(const Unit& a, const Unit& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  return std::visit(
      [&](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, Zero>) {
          return 0;
        } else if constexpr (std::is_same_v<T, Rational>) {
          return cmp(x, y) < 0 ? -1 : (cmp(x, y) > 0 ? 1 : 0);
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          if (int c = cmp(x.re, y.re)) return c < 0 ? -1 : 1;
          int c = cmp(x.im, y.im);
          return c < 0 ? -1 : (c > 0 ? 1 : 0);
        } else if constexpr (std::is_same_v<T, Finite>) {
          return x.idx < y.idx ? -1 : (x.idx > y.idx ? 1 : 0);
        } else {
          if (int c = cmp(x.x, y.x)) return c < 0 ? -1 : 1;
          int c = cmp(x.y, y.y);
          return c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
      },
      a);
}

int compare_elems(const Elem& a, const Elem& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero() ? 0 : (a.is_zero() ? -1 : 1);
  if (a.level && b.level) {
    auto c = *a.level <=> *b.level;
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return compare_units(a.unit, b.unit);
}

bool operator==(const Elem& a, const Elem& b) { return compare_elems(a, b) == 0; }

Gaussian gauss_mul(const Gaussian& a, const Gaussian& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Gaussian gauss_inv(const Gaussian& a) {
  Rational n = a.re * a.re + a.im * a.im;
  if (n == 0) throw DomainError("no inverse of zero");
  return {a.re / n, -a.im / n};
}

}  // namespace tropext
