/* SPDX-License-Identifier: Apache-2.0 */
#include "sample.hpp"

namespace tropext {

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  return make_rational(num(rng), den(rng));
}

Rational random_nonzero_rational(Rng& rng, int num_bound, int den_bound) {
  for (;;) {
    Rational q = random_rational(rng, num_bound, den_bound);
    if (q != 0) return q;
  }
}

Unit random_unit(Rng& rng_, const Hyperfield& h_) {
  switch (h_.base_kind()) {
    case BaseKind::Rationals: return random_nonzero_rational(rng_, 3, 2);
    case BaseKind::Gaussian:
      for (;;) {
        Gaussian g{random_rational(rng_, 2, 2), random_rational(rng_, 2, 2)};
        if (!gauss_is_zero(g)) return g;
      }
    case BaseKind::Finite: {
      std::uniform_int_distribution<std::uint32_t> d(1, h_.table()->size() - 1);
      return Finite{d(rng_)};
    }
    default: {
      std::uniform_int_distribution<int> c(-3, 3);
      for (;;) {
        int x = c(rng_), y = c(rng_);
        if (x != 0 || y != 0) return make_direction(x, y);
      }
    }
  }
}

Unit ElemSampler::next_unit() { return random_unit(rng_, h_); }

GroupElem ElemSampler::next_level() {
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < h_.rank(); ++i) coords.push_back(random_rational(rng_, 2, 2));
  return GroupElem(std::move(coords));
}

Elem ElemSampler::next_nonzero() {
  Unit u = next_unit();
  if (h_.is_extension()) return Elem{std::move(u), next_level()};
  return Elem{std::move(u), std::nullopt};
}

Elem ElemSampler::next() {
  std::uniform_int_distribution<int> d(0, 7);
  if (d(rng_) == 0) return Elem::zero();
  return next_nonzero();
}

}  // namespace tropext
