/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "hom.hpp"
#include "hyperfield.hpp"
#include "series.hpp"

#include <map>
#include <string>
#include <vector>

namespace tropext {

/// Polynomial over a hyperfield: plain coefficient data, no ring structure.
/// Terms are kept in lexicographic exponent order; zero coefficients are never stored.
class HPoly {
 public:
  HPoly(Hyperfield h, std::size_t nvars, bool laurent = false);

  static HPoly constant(const Hyperfield& h, std::size_t nvars, const Elem& c);
  static HPoly monomial(const Hyperfield& h, const Exponent& e, const Elem& c, bool laurent = false);

  const Hyperfield& hyperfield() const { return h_; }
  std::size_t nvars() const { return nvars_; }
  bool laurent() const { return laurent_; }
  const std::map<Exponent, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximal total degree; -1 for the zero polynomial.
  long degree() const;
  bool is_homogeneous() const;
  Elem coeff(const Exponent& e) const;

  /// Replaces the coefficient of X^e (a zero coefficient removes the term).
  void set_term(const Exponent& e, const Elem& c);

  /// Default names: X, Y, Z for up to three variables, else X1..Xn.
  static std::vector<std::string> default_names(std::size_t nvars);
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const HPoly& a, const HPoly& b);

 private:
  Hyperfield h_;
  std::size_t nvars_;
  bool laurent_;
  std::map<Exponent, Elem> terms_;
};

/// c * a^d for one monomial. Throws DomainError for 0^k with k < 0.
Elem monomial_value(const Hyperfield& h, const Elem& c, const Exponent& d, const std::vector<Elem>& a);
/// Hypersum of the monomial values, folded in exponent order.
SetValue eval(const HPoly& p, const std::vector<Elem>& a);
bool is_root(const HPoly& p, const std::vector<Elem>& a);
/// Conjunction of is_root; true for an empty system.
bool prevariety_member(const std::vector<HPoly>& system, const std::vector<Elem>& a);

/// Coefficientwise image f_*(p).
HPoly pushforward(const Hom& f, const HPoly& p);
HPoly pushforward(const Hom& f, const SeriesPoly& p);

/// Pads every monomial with a new leading variable X0 up to the degree of p.
HPoly homogenize(const HPoly& p);
/// Multiplies by X^(-e) with e_i = min(0, min_d d_i), giving a polynomial.
HPoly affinize(const HPoly& p);

/// Point of P^n(H), scaled so that its first nonzero coordinate is one.
class ProjPoint {
 public:
  static ProjPoint canonicalize(const Hyperfield& h, std::vector<Elem> coords);
  const std::vector<Elem>& coords() const { return coords_; }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Elem> coords_;
};

/// Root test for a homogeneous polynomial at a projective point.
bool proj_is_root(const HPoly& p, const ProjPoint& a);

}  // namespace tropext
