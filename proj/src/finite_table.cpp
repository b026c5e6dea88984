/* SPDX-License-Identifier: Apache-2.0 */
#include "finite_table.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace tropext {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(p, k);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = 1;
  while ((lead_inv * m.back()) % p != 1) ++lead_inv;
  while (a.size() > dm) {
    std::uint32_t c = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - (c * m[i]) % p) % p;
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t e, std::uint32_t p, std::uint32_t k) {
  Poly a(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    a[i] = e % p;
    e /= p;
  }
  return a;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t e = 0;
  for (std::size_t i = a.size(); i-- > 0;) e = e * p + a[i];
  return e;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t e = 0; e < count; ++e) {
      Poly g = decode(e, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly first_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint32_t e = 0; e < count; ++e) {
    Poly f = decode(e, p, k);
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

}  // namespace

std::optional<std::uint32_t> FiniteTable::index_of(const std::string& name) const {
  for (std::uint32_t i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::shared_ptr<const FiniteTable> FiniteTable::krasner() {
  static const std::shared_ptr<const FiniteTable> k = [] {
    auto t = std::shared_ptr<FiniteTable>(new FiniteTable());
    t->flavor_ = FiniteFlavor::Krasner;
    t->key_ = "K";
    t->n_ = 2;
    t->names_ = {"0", "1"};
    t->mul_ = {0, 0, 0, 1};
    t->neg_ = {0, 1};
    t->inv_ = {0, 1};
    t->sum_.resize(4);
    t->sum_[0].set(0);
    t->sum_[1].set(1);
    t->sum_[2].set(1);
    t->sum_[3].set(0).set(1);
    return t;
  }();
  return k;
}

std::shared_ptr<FiniteTable> FiniteTable::sign_like(bool weak) {
  auto t = std::shared_ptr<FiniteTable>(new FiniteTable());
  t->flavor_ = weak ? FiniteFlavor::WeakSign : FiniteFlavor::Sign;
  t->key_ = weak ? "W" : "S";
  t->n_ = 3;
  t->names_ = {"0", "1", "-1"};
  const int val[3] = {0, 1, -1};
  auto idx = [](int v) -> std::uint32_t { return v == 0 ? 0 : (v > 0 ? 1 : 2); };
  t->mul_.resize(9);
  t->sum_.resize(9);
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      t->mul_[a * 3 + b] = idx(val[a] * val[b]);
      Mask m;
      if (a == 0) m.set(b);
      else if (b == 0) m.set(a);
      else if (a != b) m.set(0).set(1).set(2);
      else if (weak) m.set(1).set(2);
      else m.set(a);
      t->sum_[a * 3 + b] = m;
    }
  }
  t->neg_ = {0, 2, 1};
  t->inv_ = {0, 1, 2};
  return t;
}

std::shared_ptr<const FiniteTable> FiniteTable::sign() {
  static const std::shared_ptr<const FiniteTable> s = sign_like(false);
  return s;
}

std::shared_ptr<const FiniteTable> FiniteTable::weak_sign() {
  static const std::shared_ptr<const FiniteTable> w = sign_like(true);
  return w;
}

std::shared_ptr<const FiniteTable> FiniteTable::field_of_order(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const FiniteTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return it->second;

  auto pk = prime_power(q);
  if (!pk || q > kMaxFinite) throw DomainError("GF(" + std::to_string(q) + ") is not a supported prime power field");
  const auto [p, k] = *pk;
  Poly modulus = k > 1 ? first_irreducible(p, k) : Poly{0, 1};

  auto t = std::shared_ptr<FiniteTable>(new FiniteTable());
  t->flavor_ = FiniteFlavor::Field;
  t->key_ = "GF" + std::to_string(q);
  t->n_ = q;
  t->p_ = p;
  t->q_ = q;
  for (std::uint32_t e = 0; e < q; ++e) t->names_.push_back(std::to_string(e));
  t->add_.resize(q * q);
  t->mul_.resize(q * q);
  t->sum_.resize(q * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly pa = decode(a, p, k);
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly pb = decode(b, p, k);
      Poly s(k);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
      t->add_[a * q + b] = encode(s, p);
      Poly prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      Poly r = k > 1 ? poly_mod(prod, modulus, p) : Poly{prod[0] % p};
      r.resize(k, 0);
      t->mul_[a * q + b] = encode(r, p);
      t->sum_[a * q + b].set(t->add_[a * q + b]);
    }
  }
  t->neg_.resize(q);
  t->inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if (t->add_[a * q + b] == 0) t->neg_[a] = b;
      if (t->mul_[a * q + b] == 1) t->inv_[a] = b;
    }
  }
  cache[q] = t;
  return t;
}

std::shared_ptr<const FiniteTable> FiniteTable::quotient(std::uint32_t q, std::vector<std::uint32_t> subgroup) {
  auto field = field_of_order(q);
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  std::set<std::uint32_t> members(subgroup.begin(), subgroup.end());
  if (members.empty() || !members.count(1)) throw DomainError("subgroup must contain 1");
  for (auto u : subgroup) {
    if (u == 0 || u >= q) throw DomainError("subgroup element " + std::to_string(u) + " is not a unit of GF(" + std::to_string(q) + ")");
    for (auto v : subgroup)
      if (!members.count(field->mul(u, v)))
        throw DomainError("U not multiplicatively closed: " + std::to_string(u) + "*" + std::to_string(v));
  }

  auto t = std::shared_ptr<FiniteTable>(new FiniteTable());
  t->flavor_ = FiniteFlavor::Quotient;
  t->field_ = field;
  t->p_ = field->characteristic();
  t->q_ = q;
  t->subgroup_ = subgroup;
  std::string key = "GF" + std::to_string(q) + "/{";
  for (std::size_t i = 0; i < subgroup.size(); ++i) key += (i ? "," : "") + std::to_string(subgroup[i]);
  t->key_ = key + "}";

  t->coset_of_.assign(q, 0);
  t->rep_ = {0};
  std::vector<bool> seen(q, false);
  seen[0] = true;
  for (std::uint32_t a = 1; a < q; ++a) {
    if (seen[a]) continue;
    auto c = static_cast<std::uint32_t>(t->rep_.size());
    t->rep_.push_back(a);
    for (auto u : subgroup) {
      std::uint32_t x = field->mul(a, u);
      seen[x] = true;
      t->coset_of_[x] = c;
    }
  }
  const auto n = static_cast<std::uint32_t>(t->rep_.size());
  t->n_ = n;
  for (auto r : t->rep_) t->names_.push_back(std::to_string(r));
  t->mul_.resize(n * n);
  t->sum_.resize(n * n);
  t->neg_.resize(n);
  t->inv_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t ra = t->rep_[a];
    t->neg_[a] = t->coset_of_[field->neg(ra)];
    t->inv_[a] = a == 0 ? 0 : t->coset_of_[field->inv(ra)];
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t rb = t->rep_[b];
      t->mul_[a * n + b] = t->coset_of_[field->mul(ra, rb)];
      Mask m;
      if (a == 0 || b == 0) {
        m.set(a == 0 ? b : a);
      } else {
        for (auto u : subgroup)
          for (auto v : subgroup) m.set(t->coset_of_[field->field_add(field->mul(ra, u), field->mul(rb, v))]);
      }
      t->sum_[a * n + b] = m;
    }
  }
  return t;
}

}  // namespace tropext
