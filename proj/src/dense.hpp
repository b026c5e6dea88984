/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "elem.hpp"

#include <vector>

namespace tropext::dense {

/// Dense univariate polynomials, index = degree.
using QPoly = std::vector<Rational>;
using GPoly = std::vector<Gaussian>;

Gaussian gadd(const Gaussian& a, const Gaussian& b);
Gaussian gsub(const Gaussian& a, const Gaussian& b);
Gaussian gdiv(const Gaussian& a, const Gaussian& b);
/// Square root in Q(i) when one exists.
std::optional<Gaussian> gsqrt(const Gaussian& z);

void trim(QPoly& p);
void trim(GPoly& p);
Rational eval(const QPoly& p, const Rational& x);
Gaussian eval(const GPoly& p, const Gaussian& x);

/// Distinct nonzero rational roots (complete: rational root theorem).
std::vector<Rational> rational_roots(QPoly p);
/// Distinct nonzero roots in Q(i) (complete: rational root theorem over Z[i]).
std::vector<Gaussian> gaussian_roots(GPoly p);

/// Number of distinct real roots in (0, inf) or, with `negative`, in (-inf, 0).
int sturm_count(QPoly p, bool negative);

}  // namespace tropext::dense
