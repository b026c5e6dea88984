/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "poly.hpp"
#include "series.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropext {

using Vec2 = std::array<Rational, 2>;

/// Relatively open polyhedron of dimension <= 1 in Q^2.
struct Cell2 {
  enum class Kind { Point, Segment, Ray, Line };
  Kind kind = Kind::Point;
  Vec2 a;                      // the point, the first segment end, the apex, or the foot on a line
  Vec2 b;                      // second segment end
  std::array<Integer, 2> dir;  // primitive direction of rays and lines

  int dim() const { return kind == Kind::Point ? 0 : 1; }
  bool contains(const Vec2& x) const;
  /// "gY = 0, gX > 0" style description in the coordinates gX, gY.
  std::string constraints() const;
  std::string to_string() const;
  friend bool operator==(const Cell2& x, const Cell2& y);
};

std::optional<Cell2> intersect(const Cell2& x, const Cell2& y);

/// One cell of a fine plane curve: the locus where the minimum of level + <j, g> is attained
/// exactly on J, with the initial form sum_{j in J} c_j x^j over the base field.
struct CurveCell {
  Cell2 cell;
  std::vector<Exponent> J;
  HPoly condition;
  /// Lattice length of the dual edge; 0 on vertices.
  long weight = 0;
  /// Whether the condition has a solution in the torus over the base field (unknown on some vertices).
  std::optional<bool> solvable;
};

struct FineCurve {
  HPoly source;
  std::vector<CurveCell> cells;
};

/// Fine hypersurface of p over F x| Q in two variables. A monomial gives the empty curve.
FineCurve fine_hypersurface(const HPoly& p);

/// Classical tropical curve: cells with their weights.
struct TropCurve {
  std::vector<std::pair<Cell2, long>> cells;
};
TropCurve trop_project(const FineCurve& c);

/// Names for base-condition variables.
const std::vector<std::string>& unit_names();

struct FinePoint {
  std::array<Elem, 2> coords;
  std::string to_string(const Hyperfield& h) const;
  friend bool operator==(const FinePoint& x, const FinePoint& y) { return x.coords == y.coords; }
};
bool operator<(const FinePoint& x, const FinePoint& y);

/// Positive-dimensional piece of an intersection: levels range over `piece`, base units satisfy
/// `conditions`.
struct FineComponent {
  Cell2 piece;
  std::vector<HPoly> conditions;
  /// Base unit forced on a coordinate by the conditions, if any.
  std::array<std::optional<Unit>, 2> fixed;
  std::string to_string(const Hyperfield& base) const;
};

struct FineIntersection {
  std::vector<FinePoint> points;
  std::vector<FineComponent> components;
  bool degenerate() const { return !components.empty(); }
};

/// Torus solutions of {b1 = 0, b2 = 0} over a base field: isolated points and curves.
struct BaseSolutions {
  std::vector<std::array<Unit, 2>> points;
  std::vector<std::vector<HPoly>> families;
};
/// Supports binomial and linear-substitution shapes; throws UnsupportedError otherwise.
BaseSolutions solve_base_system(const HPoly& b1, const HPoly& b2);

/// Membership through the cell decomposition: some cell contains the levels and its condition
/// vanishes at the units.
bool on_curve(const FineCurve& c, const FinePoint& x);

FineIntersection fine_intersect(const FineCurve& c1, const FineCurve& c2);

/// Source of c with every base coefficient multiplied by a seeded generic unit.
HPoly perturb_units(const HPoly& p, std::uint64_t seed);

/// Projected stable intersection. Perturbs only base units of c2 when the fine intersection is
/// not a finite set of points.
std::vector<Vec2> stable_intersect(const FineCurve& c1, const FineCurve& c2, std::uint64_t seed);

/// fval images of the exact series solutions of {p, q} (linear pair, or <p(X), Y - c X^k>).
std::vector<FinePoint> oracle_intersect_series(const SeriesPoly& p, const SeriesPoly& q,
                                               const GroupElem& rel_precision = GroupElem(Rational(8)));

struct MixedCell {
  Vec2 point;
  std::vector<Exponent> J1, J2;
  long mixed_volume = 0;
  std::vector<FinePoint> solutions;
};

struct HomotopyStart {
  std::vector<MixedCell> cells;
  long total_mixed_volume = 0;
  /// Mixed volume of the two Newton polygons.
  long bkk = 0;
  std::vector<FinePoint> solutions() const;
};

/// Start solutions of a square system over the series field from its fine tropical curves.
/// Throws DomainError "lift not generic, reseed" when the fine curves meet non-transversally.
HomotopyStart homotopy_start(const SeriesPoly& p, const SeriesPoly& q);

/// Multiplies every coefficient of p by t^w with w random of denominator <= 7, |w| <= 4.
SeriesPoly random_lift(const HPoly& p, std::uint64_t seed);

/// Doubled area of the convex hull of the given lattice points.
Integer hull_area2(const std::vector<Exponent>& pts);
long mixed_volume(const std::vector<Exponent>& a, const std::vector<Exponent>& b);

/// SVG drawing of the tropical skeletons, with optional base-condition labels and marked points.
std::string render_svg(const std::vector<FineCurve>& curves, const std::vector<Vec2>& points, bool labels);

}  // namespace tropext
