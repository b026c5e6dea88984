/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "hyperfield.hpp"
#include "poly.hpp"
#include "series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tropext {

/// Replaces the Unicode operators (minus, boxplus, odot, semidirect product) with ASCII.
std::string normalize_text(std::string_view text);

/// "Q", "Qi", "K", "S", "W", "P", "Phi", "GF9", "GF7/{1,2,4}", "T", "TR", "TC", "T^2",
/// "Q⋊Q", "S⋊Q^2", "Q><Q" and nested "Q⋊Q⋊Q".
Hyperfield parse_hyperfield(std::string_view key);

/// Element literal of h: "3/2", "1-2i", "dir(1,-1)", "(-1, 3/2)", "inf".
Elem parse_elem(const Hyperfield& h, std::string_view text);

/// "3*t^(1/2) - t + O(t^2)" over Q, Q(i) or GF(q).
Series parse_series(std::string_view text, const Hyperfield& coeffs = Hyperfield::rationals(), std::size_t rank = 1);

/// Polynomial over h in variables X, Y, Z or X1..Xn (or the given names). With nvars = 0
/// the count is inferred from the highest variable used. Negative powers make it Laurent.
HPoly parse_poly(const Hyperfield& h, std::string_view text, std::size_t nvars = 0,
                 const std::vector<std::string>& names = {});

/// Polynomial with series coefficients, e.g. "t*X + (1+t^2)*Y + 1".
SeriesPoly parse_series_poly(std::string_view text, const Hyperfield& coeffs = Hyperfield::rationals(),
                             std::size_t nvars = 0, std::size_t rank = 1, const std::vector<std::string>& names = {});

}  // namespace tropext
