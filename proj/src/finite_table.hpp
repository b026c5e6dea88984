/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <bitset>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tropext {

inline constexpr std::size_t kMaxFinite = 256;
using Mask = std::bitset<kMaxFinite>;

enum class FiniteFlavor { Krasner, Sign, WeakSign, Field, Quotient };

/// Multiplication, negation and hypersum tables of a finite hyperfield.
/// Index 0 is zero and index 1 is one. Sign-like tables use index 2 for -1.
/// Field elements of GF(p^k) are encoded as sum a_i p^i over the coefficients
/// of a polynomial in a fixed root of the lexicographically first monic irreducible.
class FiniteTable {
 public:
  FiniteFlavor flavor() const { return flavor_; }
  const std::string& key() const { return key_; }
  std::uint32_t size() const { return n_; }
  const std::string& name(std::uint32_t i) const { return names_[i]; }
  std::optional<std::uint32_t> index_of(const std::string& name) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * n_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  const Mask& sum(std::uint32_t a, std::uint32_t b) const { return sum_[a * n_ + b]; }
  /// Single-valued sum; only for the Field flavor.
  std::uint32_t field_add(std::uint32_t a, std::uint32_t b) const { return add_[a * n_ + b]; }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t field_order() const { return q_; }
  /// Quotients: coset index of a field element, and the underlying field table.
  std::uint32_t coset_of(std::uint32_t field_elem) const { return coset_of_[field_elem]; }
  std::uint32_t representative(std::uint32_t coset) const { return rep_[coset]; }
  const std::vector<std::uint32_t>& subgroup() const { return subgroup_; }
  std::shared_ptr<const FiniteTable> field() const { return field_; }

  static std::shared_ptr<const FiniteTable> krasner();
  static std::shared_ptr<const FiniteTable> sign();
  static std::shared_ptr<const FiniteTable> weak_sign();
  /// GF(q) for a prime power q <= 256.
  static std::shared_ptr<const FiniteTable> field_of_order(std::uint32_t q);
  /// GF(q)/U. Throws DomainError unless U is a multiplicative subgroup of the units.
  static std::shared_ptr<const FiniteTable> quotient(std::uint32_t q, std::vector<std::uint32_t> subgroup);

 private:
  FiniteTable() = default;
  static std::shared_ptr<FiniteTable> sign_like(bool weak);

  FiniteFlavor flavor_ = FiniteFlavor::Krasner;
  std::string key_;
  std::uint32_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> mul_, neg_, inv_, add_;
  std::vector<Mask> sum_;
  std::uint32_t p_ = 0, q_ = 0;
  std::vector<std::uint32_t> coset_of_, rep_, subgroup_;
  std::shared_ptr<const FiniteTable> field_;
};

}  // namespace tropext
