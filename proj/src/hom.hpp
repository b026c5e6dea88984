/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "hyperfield.hpp"
#include "sample.hpp"
#include "series.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tropext {

enum class HomKind { Identity, Trivial, Val, SVal, FVal, PhVal, Sign, Phase, Quotient, Extended, Composite };

/// A hyperfield homomorphism. Val/SVal/FVal/PhVal have a series source, described by
/// its coefficient field and exponent rank; every other kind maps hyperfield elements.
class Hom {
 public:
  static Hom identity(const Hyperfield& h);
  /// omega: h -> K, every nonzero element to 1.
  static Hom trivial(const Hyperfield& h);
  /// Series over `coeffs` with exponents in Q^rank -> K x| Q^rank.
  static Hom val(const Hyperfield& coeffs, std::size_t rank = 1);
  /// Q-series -> S x| Q^rank.
  static Hom sval(std::size_t rank = 1);
  /// Series over `coeffs` -> coeffs x| Q^rank.
  static Hom fval(const Hyperfield& coeffs, std::size_t rank = 1);
  /// Q(i)-series -> P x| Q^rank.
  static Hom phval(std::size_t rank = 1);
  /// sgn: Q -> S, or Q -> W when `weak`.
  static Hom sign(bool weak = false);
  /// ph: Q(i) -> P, or Q(i) -> Phi when `tropical`.
  static Hom phase(bool tropical = false);
  /// GF(q) or GF(q)/U1 onto GF(q)/U2 (requires U1 inside U2).
  static Hom quotient(const Hyperfield& from, const Hyperfield& to);
  /// (c, g) -> (f(c), g) between the rank-k extensions.
  static Hom extended(const Hom& inner, std::size_t rank = 1);
  /// first, then second.
  static Hom compose(const Hom& first, const Hom& second);

  HomKind kind() const { return kind_; }
  bool series_source() const { return series_source_; }
  /// Source hyperfield, or the coefficient field for series sources.
  const Hyperfield& source() const { return source_; }
  std::size_t source_rank() const { return source_rank_; }
  const Hyperfield& target() const { return target_; }
  std::string name() const;

  Elem apply(const Elem& a) const;
  /// Throws PrecisionError when the leading term is not determined.
  Elem apply(const Series& a) const;
  /// Image of a coefficient unit for the series homs; undefined for other kinds.
  Unit apply_unit(const Unit& u) const;

 private:
  Hom(HomKind kind, Hyperfield source, Hyperfield target)
      : kind_(kind), source_(std::move(source)), target_(std::move(target)) {}

  HomKind kind_;
  Hyperfield source_;
  Hyperfield target_;
  bool series_source_ = false;
  std::size_t source_rank_ = 0;
  std::vector<std::shared_ptr<const Hom>> parts_;
};

struct HomViolation {
  std::string law;
  std::string instance;
};

struct HomReport {
  std::string hom;
  std::size_t trials = 0;
  std::vector<HomViolation> violations;
  /// Set when the sum-lifting condition was evaluated (finite targets of field sources).
  bool lifts_checked = false;
  /// True when every source element was enumerated, making a missing lift definitive.
  bool lifts_exhaustive = false;
  /// Triples (alpha, beta, gamma) with gamma in alpha + beta but no a in f^-1(alpha),
  /// b in f^-1(beta) found with f(a + b) = gamma.
  std::vector<std::string> missing_lifts;

  bool laws_hold() const { return violations.empty(); }
  bool passed() const { return violations.empty() && missing_lifts.empty(); }
};

/// Samples pairs from the source and checks f(0) = 0, f(1) = 1, multiplicativity,
/// f(-a) = -f(a) and f(a + b) inside f(a) + f(b). With `check_lifts`, also tests whether
/// every gamma in alpha + beta is the image of a sum of preimages.
HomReport hom_check(const Hom& f, std::size_t trials, std::uint64_t seed, bool check_lifts = false);

/// Random exact series with a few terms from small pools (exponents p/q, |p| <= 6, q <= den_bound).
Series random_series(Rng& rng, const Hyperfield& coeffs, std::size_t rank = 1, int max_terms = 4, int den_bound = 2);

}  // namespace tropext
