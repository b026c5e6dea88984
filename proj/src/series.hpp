/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "hyperfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropext {

/// Truncated Hahn series with exponents in Q^rank over Q, Q(i) or GF(q).
/// Terms at exponents >= precision are unknown; no precision means exact.
class Series {
 public:
  Series(Hyperfield field, std::size_t rank = 1);

  static Series constant(const Hyperfield& field, const Unit& c, std::size_t rank = 1);
  static Series monomial(const Hyperfield& field, const Unit& c, const GroupElem& exponent);
  /// O(t^p) with no known terms.
  static Series unknown(const Hyperfield& field, const GroupElem& precision);

  const Hyperfield& field() const { return field_; }
  std::size_t rank() const { return rank_; }
  const std::map<GroupElem, Unit>& terms() const { return terms_; }
  const std::optional<GroupElem>& precision() const { return prec_; }

  bool is_zero() const { return terms_.empty() && !prec_; }
  /// Nonzero with a known leading term, or exactly zero.
  bool determinate() const { return !terms_.empty() || !prec_; }
  /// Leading coefficient and exponent. Throws DomainError for zero and PrecisionError when unknown.
  std::pair<Unit, GroupElem> leading_term() const;
  /// Lower bound for the exponents of nonzero terms; nullopt for exact zero.
  std::optional<GroupElem> lower_bound() const;

  void set_term(const GroupElem& e, const Unit& c);
  /// Lowers the precision to p (dropping known terms at or above p).
  Series truncated(const GroupElem& p) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const;
  Series scaled(const Unit& c) const;
  /// Inverse with absolute precision at most `requested`. Throws DomainError for zero
  /// and PrecisionError ("insufficient precision") for an unknown leading term.
  Series inv(const GroupElem& requested) const;

  std::string to_string() const;
  friend bool operator==(const Series& a, const Series& b);

 private:
  void normalize();

  Hyperfield field_;
  std::size_t rank_;
  std::map<GroupElem, Unit> terms_;
  std::optional<GroupElem> prec_;
};

using Exponent = std::vector<long>;

/// Polynomial with series coefficients, used on the field side of the harnesses.
class SeriesPoly {
 public:
  SeriesPoly(Hyperfield field, std::size_t nvars, std::size_t rank = 1)
      : field_(std::move(field)), nvars_(nvars), rank_(rank) {}

  static SeriesPoly variable(const Hyperfield& field, std::size_t nvars, std::size_t i, std::size_t rank = 1);
  static SeriesPoly constant(const Series& c, std::size_t nvars);

  const Hyperfield& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  const std::map<Exponent, Series>& coeffs() const { return coeffs_; }
  /// Adds c to the coefficient of X^e.
  void add_term(const Exponent& e, const Series& c);
  Series coeff(const Exponent& e) const;
  long degree() const;

  friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  SeriesPoly scaled(const Series& c) const;

  Series eval(const std::vector<Series>& point) const;
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Hyperfield field_;
  std::size_t nvars_;
  std::size_t rank_;
  std::map<Exponent, Series> coeffs_;
};

/// prod_i (X - roots[i]) in one variable.
SeriesPoly product_of_linear_factors(const std::vector<Series>& roots);

}  // namespace tropext
