/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "hyperfield.hpp"

#include <cstdint>
#include <random>

namespace tropext {

using Rng = std::mt19937_64;

/// Small-height random rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(Rng& rng, int num_bound, int den_bound);
Rational random_nonzero_rational(Rng& rng, int num_bound, int den_bound);
/// Random nonzero base unit of h (small pools, as in ElemSampler).
Unit random_unit(Rng& rng, const Hyperfield& h);

/// Seeded element source. Values are drawn from small pools so that equal
/// levels, antipodal phases and cancellations occur often.
class ElemSampler {
 public:
  ElemSampler(Hyperfield h, std::uint64_t seed) : h_(std::move(h)), rng_(seed) {}

  Elem next();
  Elem next_nonzero();
  Unit next_unit();
  GroupElem next_level();
  Rng& rng() { return rng_; }

 private:
  Hyperfield h_;
  Rng rng_;
};

}  // namespace tropext
