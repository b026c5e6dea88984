/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "ordgroup.hpp"
#include "rational.hpp"

#include <cstdint>
#include <optional>
#include <variant>

namespace tropext {

struct Zero {};

struct Gaussian {
  Rational re, im;
};

/// Index into a finite hyperfield table; index 0 is zero and never stored here.
struct Finite {
  std::uint32_t idx = 1;
};

/// A ray in the plane through a primitive integer vector.
struct Direction {
  Integer x, y;
};

using Unit = std::variant<Zero, Rational, Gaussian, Finite, Direction>;

bool operator==(const Gaussian& a, const Gaussian& b);
bool operator==(const Direction& a, const Direction& b);
inline bool operator==(const Finite& a, const Finite& b) { return a.idx == b.idx; }
inline bool operator==(const Zero&, const Zero&) { return true; }

/// Structural total order on units, used for canonical sorting only.
int compare_units(const Unit& a, const Unit& b);
inline bool unit_is_zero(const Unit& u) { return std::holds_alternative<Zero>(u); }

/// Element of a hyperfield. For extensions a nonzero element carries a level.
struct Elem {
  Unit unit = Zero{};
  std::optional<GroupElem> level;

  static Elem zero() { return Elem{}; }
  bool is_zero() const { return unit_is_zero(unit); }
};

bool operator==(const Elem& a, const Elem& b);
int compare_elems(const Elem& a, const Elem& b);

struct ElemLess {
  bool operator()(const Elem& a, const Elem& b) const { return compare_elems(a, b) < 0; }
};

Gaussian gauss_mul(const Gaussian& a, const Gaussian& b);
Gaussian gauss_inv(const Gaussian& a);
inline bool gauss_is_zero(const Gaussian& a) { return a.re == 0 && a.im == 0; }

}  // namespace tropext
