/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "arcs.hpp"
#include "elem.hpp"
#include "finite_table.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tropext {

enum class BaseKind { Rationals, Gaussian, Finite, Phase, TropicalPhase };

struct FiniteSet {
  Mask mask;
};

/// Sorted, duplicate-free subset of Q or Q(i); may contain Zero.
struct ScalarSet {
  std::vector<Unit> elems;
};

using BaseSet = std::variant<FiniteSet, ScalarSet, ArcSet>;

/// Result of a hypersum. For extensions, `base` holds the units at `level`
/// (zero stripped) and `tail` adds every element above `level` together with zero.
/// An extended set without a level is exactly {0}.
struct SetValue {
  BaseSet base;
  bool extended = false;
  std::optional<GroupElem> level;
  bool tail = false;
};

bool operator==(const SetValue& a, const SetValue& b);

/// Immutable descriptor of a hyperfield: a base kind, optionally extended by Q^rank.
class Hyperfield {
 public:
  static Hyperfield rationals();
  static Hyperfield gaussian();
  static Hyperfield krasner();
  static Hyperfield sign();
  static Hyperfield weak_sign();
  static Hyperfield phase();
  static Hyperfield tropical_phase();
  static Hyperfield finite_field(std::uint32_t q);
  static Hyperfield quotient(std::uint32_t q, std::vector<std::uint32_t> subgroup);
  static Hyperfield finite(std::shared_ptr<const FiniteTable> table);

  /// H x| Q^rank; extending an extension adds to its rank (nesting flattens).
  Hyperfield extend(std::size_t rank) const;
  Hyperfield base() const;

  BaseKind base_kind() const { return kind_; }
  bool is_extension() const { return rank_ > 0; }
  std::size_t rank() const { return rank_; }
  const FiniteTable* table() const { return table_.get(); }
  std::shared_ptr<const FiniteTable> table_ptr() const { return table_; }
  /// True for Q, Q(i) and GF(q) without extension.
  bool is_field() const { return !is_extension() && base_is_field(); }
  bool base_is_field() const;
  bool is_finite() const { return !is_extension() && kind_ == BaseKind::Finite; }
  std::string key() const;

  Elem zero() const { return Elem::zero(); }
  Elem one() const;
  Elem make(Unit u) const;
  Elem make(Unit u, GroupElem level) const;
  bool valid(const Elem& a) const;

  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem neg(const Elem& a) const;
  Elem pow(const Elem& a, long n) const;

  SetValue singleton(const Elem& a) const;
  SetValue add(const Elem& a, const Elem& b) const { return hyperadd(singleton(a), singleton(b)); }
  SetValue hyperadd(const SetValue& a, const SetValue& b) const;
  /// Left fold of hyperadd over singletons. Throws DomainError on an empty list.
  SetValue nary_sum(const std::vector<Elem>& terms) const;
  bool contains(const SetValue& s, const Elem& a) const;
  bool contains_zero(const SetValue& s) const;
  SetValue scale(const SetValue& s, const Elem& a) const;
  bool subset(const SetValue& a, const SetValue& b) const;
  bool singleton_value(const SetValue& s, Elem* out) const;
  /// The finitely many elements of `s` that are not interior to a tail:
  /// every element for finite sets, the base units at the level plus zero for extensions.
  std::vector<Elem> boundary(const SetValue& s) const;

  std::vector<Elem> elements() const;
  /// Finite list of members of s: all of it when finite, otherwise boundary
  /// elements, one direction per arc piece and one element above a tail level.
  std::vector<Elem> representatives(const SetValue& s) const;
  bool is_stringent() const;

  // Unit-level operations of the base.
  Unit unit_one() const;
  Unit unit_mul(const Unit& a, const Unit& b) const;
  Unit unit_inv(const Unit& a) const;
  Unit unit_neg(const Unit& a) const;
  /// Single-valued sum of a field base.
  Unit field_add(const Unit& a, const Unit& b) const;

  BaseSet base_singleton(const Unit& u) const;
  BaseSet base_add(const BaseSet& a, const BaseSet& b) const;
  bool base_contains(const BaseSet& s, const Unit& u) const;
  bool base_has_zero(const BaseSet& s) const;
  bool base_has_nonzero(const BaseSet& s) const;
  BaseSet base_strip_zero(const BaseSet& s) const;
  BaseSet base_unite(const BaseSet& a, const BaseSet& b) const;
  BaseSet base_scale(const BaseSet& s, const Unit& u) const;
  bool base_subset(const BaseSet& a, const BaseSet& b) const;
  BaseSet base_empty() const;
  /// Nonzero units of a finitely representable base set; throws UnsupportedError for arcs.
  std::vector<Unit> base_units(const BaseSet& s) const;

  std::string format(const Elem& a) const;
  std::string format_unit(const Unit& u) const;
  std::string format(const SetValue& s) const;

  friend bool operator==(const Hyperfield& a, const Hyperfield& b) { return a.key() == b.key(); }

 private:
  Hyperfield(BaseKind kind, std::shared_ptr<const FiniteTable> table, std::size_t rank)
      : kind_(kind), table_(std::move(table)), rank_(rank) {}

  BaseKind kind_;
  std::shared_ptr<const FiniteTable> table_;
  std::size_t rank_ = 0;
};

/// Hypersum of two extension sets (the four cases of the tropical extension).
SetValue ext_hyperadd(const Hyperfield& h, const SetValue& a, const SetValue& b);
bool ext_subset(const Hyperfield& h, const SetValue& a, const SetValue& b);

/// "T", "TR", "TC", "T^k".
Hyperfield realize(const std::string& name);

}  // namespace tropext
