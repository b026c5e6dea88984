/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "hom.hpp"
#include "poly.hpp"
#include "series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropext {

inline constexpr int kDefaultMaxMultDegree = 8;

/// Candidate root level h of a univariate polynomial over an extension and the
/// exponents J where min(val c_j + j*h) is attained (|J| >= 2).
struct NewtonCell {
  GroupElem level;
  std::vector<long> J;
};

/// Cells sorted by level. Throws DomainError unless p is univariate over an extension.
std::vector<NewtonCell> newton_cells(const HPoly& p);

/// Nonzero x in the base with 0 in sum_j c_j x^j.
struct BaseRoots {
  bool enumerable = true;
  std::vector<Unit> units;
  std::string description;
};

/// Terms are (exponent, nonzero unit) pairs over the non-extended hyperfield `base`.
BaseRoots base_roots(const Hyperfield& base, const std::vector<std::pair<long, Unit>>& terms);

struct RootRecord {
  Elem root;
  int multiplicity = 0;
  std::optional<NewtonCell> cell;
};

/// All roots with multiplicities. Over extensions the roots are listed cell by cell
/// from the left of the Newton polygon (decreasing level); a zero root comes last.
/// Throws UnsupportedError when the root set is not finite (phase bases).
std::vector<RootRecord> roots_univariate(const HPoly& p, int max_degree = kDefaultMaxMultDegree);

/// Multiplicity by the recursive division definition; 0 when a is not a root.
int multiplicity(const HPoly& p, const Elem& a, int max_degree = kDefaultMaxMultDegree);

struct MultBoundReport {
  std::string hyperfield;
  bool applicable = true;
  std::string note;
  std::size_t polys = 0;
  std::vector<std::string> violations;
  bool passed() const { return applicable && violations.empty(); }
};

/// Checks sum of multiplicities <= degree on random polynomials (or on every polynomial
/// of degree <= max_degree when `exhaustive` and h is finite).
MultBoundReport mult_bound_check(const Hyperfield& h, std::size_t trials, int max_degree, std::uint64_t seed,
                                 bool exhaustive = false);

enum class RacStatus { Lift, Counterexample, NotFound };

struct RacResult {
  RacStatus status = RacStatus::NotFound;
  std::string detail;
  std::optional<Elem> lift;
  std::optional<Series> series_lift;
};

/// Looks for alpha with f(alpha) = beta and alpha a root of p. Finite fibres are searched
/// exhaustively; sgn is decided over the real closure by Sturm counts.
RacResult rac_check_instance(const Hom& f, const HPoly& p, const Elem& beta);
/// Series sources: searches `corpus` for a lift.
RacResult rac_check_instance(const Hom& f, const SeriesPoly& p, const Elem& beta, const std::vector<Series>& corpus);

struct HarnessCase {
  std::string instance;
  std::string expected;
  std::string got;
  bool ok = false;
};

struct HarnessSummary {
  std::string name;
  std::size_t trials = 0;
  std::vector<HarnessCase> failures;
  bool passed() const { return failures.empty(); }
};

/// p = prod (X - roots[i]); compares the roots of f_*(p) with the images f(roots[i]) as
/// multisets. For phase targets only the inclusion f(roots) in V(f_*(p)) is decidable.
HarnessCase kapranov_check(const Hom& f, const std::vector<Series>& roots);
/// Random exact roots: up to `max_factors` factors, exponents p/q < 8 with q <= den_bound.
HarnessSummary kapranov_harness(const Hom& f, std::size_t trials, std::uint64_t seed, int max_factors = 5,
                                int den_bound = 4);

/// Solution of a linear system L1 = L2 = 0 in X, Y; throws DomainError when not isolated.
std::pair<Series, Series> solve_linear_2x2(const SeriesPoly& l1, const SeriesPoly& l2, const GroupElem& rel_precision);

/// Exact solutions of <L1, L2> (linear in X, Y) or of <p(X), Y - c X^k>; the roots of p are
/// computed when p is linear and must be supplied otherwise.
std::vector<std::pair<Series, Series>> solve_series_system(const std::vector<SeriesPoly>& generators,
                                                           const std::vector<Series>& p_roots,
                                                           const GroupElem& rel_precision);

/// f(V(I)) against V(f_*(I)) for I = <L1, L2> linear in X, Y, or I = <p(X), Y - c X^k> with p linear
/// or with the roots of p given in `p_roots`.
HarnessCase fundamental_check(const Hom& f, const std::vector<SeriesPoly>& generators,
                              const std::vector<Series>& p_roots = {}, const GroupElem& rel_precision = GroupElem(8));
HarnessSummary fundamental_harness(const Hom& f, std::size_t trials, std::uint64_t seed);

}  // namespace tropext
