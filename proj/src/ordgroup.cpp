/* SPDX-License-Identifier: Apache-2.0 */
#include "ordgroup.hpp"

#include "error.hpp"

namespace tropext {

namespace {

void require_same_rank(const GroupElem& a, const GroupElem& b) {
  if (a.rank() != b.rank())
    throw DomainError("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}

}  // namespace

GroupElem::GroupElem(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("group element needs rank >= 1");
  for (auto& c : coords_) c.canonicalize();
}

GroupElem GroupElem::zero(std::size_t rank) { return GroupElem(std::vector<Rational>(rank)); }

bool GroupElem::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

GroupElem operator+(const GroupElem& a, const GroupElem& b) {
  require_same_rank(a, b);
  std::vector<Rational> out(a.rank());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return GroupElem(std::move(out));
}

GroupElem operator-(const GroupElem& a, const GroupElem& b) { return a + (-b); }

GroupElem GroupElem::operator-() const {
  std::vector<Rational> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coords_[i];
  return GroupElem(std::move(out));
}

GroupElem GroupElem::scaled(const Integer& n) const { return times(Rational(n)); }

GroupElem GroupElem::divided(const Integer& n) const {
  if (n == 0) throw DomainError("division of a group element by zero");
  return times(make_rational(1, n));
}

GroupElem GroupElem::times(const Rational& q) const {
  std::vector<Rational> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i] * q;
  return GroupElem(std::move(out));
}

std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool operator==(const GroupElem& a, const GroupElem& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::string GroupElem::to_string() const {
  if (rank() == 1) return tropext::to_string(coords_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) s += ",";
    s += tropext::to_string(coords_[i]);
  }
  return s + ")";
}

std::vector<std::string> GroupElem::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coords_) out.push_back(tropext::to_string(c));
  return out;
}

GroupElem group_add(const GroupElem& a, const GroupElem& b) { return a + b; }

Order lex_compare(const GroupElem& a, const GroupElem& b) {
  auto c = a <=> b;
  if (c < 0) return Order::LT;
  if (c > 0) return Order::GT;
  return Order::EQ;
}

GroupElem scalar_mul(const Integer& n, const GroupElem& a) { return a.scaled(n); }
GroupElem group_div(const GroupElem& a, const Integer& n) { return a.divided(n); }

}  // namespace tropext
