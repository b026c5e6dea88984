/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "elem.hpp"

#include <functional>
#include <vector>

namespace tropext {

/// Primitive representative of the ray through (x, y). Throws DomainError on (0, 0).
Direction make_direction(const Integer& x, const Integer& y);
/// Phase of a nonzero Gaussian rational.
Direction direction_of(const Gaussian& z);

Direction dir_mul(const Direction& a, const Direction& b);
Direction dir_inv(const Direction& a);
Direction dir_neg(const Direction& a);
Integer cross(const Direction& a, const Direction& b);
Integer dot(const Direction& a, const Direction& b);
/// Counterclockwise angle order starting from the positive x-axis.
bool angle_less(const Direction& a, const Direction& b);

/// Open arc counterclockwise from `from` to `to`, or the single point `from` when `is_point`.
/// Produced by decomposition, so arcs always span strictly less than a half turn.
struct ArcPiece {
  Direction from, to;
  bool is_point = false;
};

/// Exact subset of the unit circle plus zero, in canonical form: sorted critical
/// directions, a membership flag per critical direction and per open gap after it.
class ArcSet {
 public:
  static ArcSet empty();
  static ArcSet zero_only();
  static ArcSet full(bool with_zero);
  static ArcSet point(const Direction& d);
  static ArcSet open_arc(const Direction& from, const Direction& to);
  static ArcSet closed_arc(const Direction& from, const Direction& to);
  /// Builds the set whose membership is `pred` on candidates and on one interior
  /// direction of each gap between them. `pred` must be constant on each gap.
  static ArcSet from_predicate(std::vector<Direction> candidates,
                               const std::function<bool(const Direction&)>& pred, bool with_zero);

  bool contains(const Direction& d) const;
  bool has_zero() const { return zero_; }
  bool is_full() const { return full_; }
  bool no_directions() const { return crit_.empty() && !full_; }
  bool is_empty() const { return no_directions() && !zero_; }

  const std::vector<Direction>& critical() const { return crit_; }
  const std::vector<bool>& point_in() const { return pt_in_; }
  const std::vector<bool>& gap_in() const { return gap_in_; }

  ArcSet with_zero(bool z) const;
  ArcSet unite(const ArcSet& o) const;
  ArcSet intersect(const ArcSet& o) const;
  ArcSet rotated(const Direction& by) const;
  bool subset_of(const ArcSet& o) const;
  std::vector<ArcPiece> pieces() const;

  friend bool operator==(const ArcSet& a, const ArcSet& b);

 private:
  void canonicalize();

  std::vector<Direction> crit_;
  std::vector<bool> pt_in_, gap_in_;
  bool full_ = false;
  bool zero_ = false;
};

/// A direction strictly inside the open counterclockwise arc from u to v (u == v means the full turn minus u).
Direction gap_representative(const Direction& u, const Direction& v);

/// Relative interior of the cone generated by the given directions, as phases (zero if it contains the origin).
ArcSet cone_relint(std::vector<Direction> gens);

/// Hypersum of two subsets of the phase hyperfield; `tropical` selects closed-arc (Phi) addition.
ArcSet arc_hyperadd(const ArcSet& a, const ArcSet& b, bool tropical);

}  // namespace tropext
