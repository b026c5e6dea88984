/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace tropext {

/// Largest rank accepted by parsers and descriptors unless overridden.
inline constexpr std::size_t kDefaultMaxRank = 3;

/// Element of Q^k, ordered lexicographically. Rank 1 is plain Q.
class GroupElem {
 public:
  GroupElem() : coords_(1) {}
  explicit GroupElem(Rational q) : coords_{std::move(q)} {}
  explicit GroupElem(std::vector<Rational> coords);

  static GroupElem zero(std::size_t rank);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  friend GroupElem operator+(const GroupElem& a, const GroupElem& b);
  friend GroupElem operator-(const GroupElem& a, const GroupElem& b);
  GroupElem operator-() const;
  GroupElem& operator+=(const GroupElem& b) { return *this = *this + b; }

  /// Exact n-fold multiple; n may be negative or zero.
  GroupElem scaled(const Integer& n) const;
  /// Unique h with n*h = *this. Throws DomainError for n = 0.
  GroupElem divided(const Integer& n) const;
  /// Multiplication by a rational scalar (Q^k is a Q-vector space).
  GroupElem times(const Rational& q) const;

  /// Lexicographic comparison. Throws DomainError on rank mismatch.
  friend std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem& a, const GroupElem& b);

  /// "3/2" for rank 1, "(1,0)" otherwise.
  std::string to_string() const;
  /// Array of "p/q" strings.
  std::vector<std::string> to_strings() const;

 private:
  std::vector<Rational> coords_;
};

enum class Order { LT, EQ, GT };

GroupElem group_add(const GroupElem& a, const GroupElem& b);
Order lex_compare(const GroupElem& a, const GroupElem& b);
GroupElem scalar_mul(const Integer& n, const GroupElem& a);
GroupElem group_div(const GroupElem& a, const Integer& n);

}  // namespace tropext
