/* SPDX-License-Identifier: Apache-2.0 */
#include "error.hpp"
#include "hyperfield.hpp"

namespace tropext {

SetValue ext_hyperadd(const Hyperfield& h, const SetValue& a, const SetValue& b) {
  if (!a.level) return b;
  if (!b.level) return a;
  auto c = *a.level <=> *b.level;
  if (c < 0) return a;
  if (c > 0) return b;

  BaseSet sum = h.base_add(a.base, b.base);
  SetValue out;
  out.extended = true;
  out.level = a.level;
  out.tail = h.base_has_zero(sum) || (a.tail && b.tail);
  BaseSet base = h.base_strip_zero(sum);
  if (b.tail) base = h.base_unite(base, a.base);
  if (a.tail) base = h.base_unite(base, b.base);
  out.base = std::move(base);
  return out;
}

bool ext_subset(const Hyperfield& h, const SetValue& a, const SetValue& b) {
  if (!a.level) return h.contains_zero(b);
  if (!b.level) return false;
  auto c = *a.level <=> *b.level;
  if (a.tail && !(b.tail && c >= 0)) return false;
  if (h.base_has_nonzero(a.base)) {
    if (c == 0) return h.base_subset(a.base, b.base);
    return c > 0 && b.tail;
  }
  return true;
}

Hyperfield realize(const std::string& name) {
  if (name == "T") return Hyperfield::krasner().extend(1);
  if (name == "TR") return Hyperfield::sign().extend(1);
  if (name == "TC") return Hyperfield::tropical_phase().extend(1);
  if (name.rfind("T^", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(name.substr(2));
    } catch (...) {
      k = 0;
    }
    if (k >= 1 && k <= kDefaultMaxRank) return Hyperfield::krasner().extend(k);
  }
  throw DomainError("unknown tropical realization '" + name + "'");
}

}  // namespace tropext
