/* SPDX-License-Identifier: Apache-2.0 */
#include "arcs.hpp"

#include "error.hpp"

#include <algorithm>

namespace tropext {

Direction make_direction(const Integer& x, const Integer& y) {
  if (x == 0 && y == 0) throw DomainError("dir(0,0) is not a phase");
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Direction{x / g, y / g};
}

Direction direction_of(const Gaussian& z) {
  if (gauss_is_zero(z)) throw DomainError("phase of zero");
  Integer l;
  mpz_lcm(l.get_mpz_t(), z.re.get_den_mpz_t(), z.im.get_den_mpz_t());
  Rational re = z.re * l, im = z.im * l;
  return make_direction(re.get_num(), im.get_num());
}

Direction dir_mul(const Direction& a, const Direction& b) {
  return make_direction(a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x);
}

Direction dir_inv(const Direction& a) { return Direction{a.x, -a.y}; }
Direction dir_neg(const Direction& a) { return Direction{-a.x, -a.y}; }
Integer cross(const Direction& a, const Direction& b) { return a.x * b.y - a.y * b.x; }
Integer dot(const Direction& a, const Direction& b) { return a.x * b.x + a.y * b.y; }

namespace {

int half(const Direction& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

Direction rot90(const Direction& d) { return Direction{-d.y, d.x}; }

void sort_unique(std::vector<Direction>& v) {
  std::sort(v.begin(), v.end(), angle_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void split_gap(const Direction& u, const Direction& v, std::vector<ArcPiece>& out) {
  if (!(u == v) && sgn(cross(u, v)) > 0) {
    out.push_back({u, v, false});
    return;
  }
  Direction w = rot90(u);
  out.push_back({u, w, false});
  out.push_back({w, w, true});
  split_gap(w, v, out);
}

}  // namespace

bool angle_less(const Direction& a, const Direction& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

Direction gap_representative(const Direction& u, const Direction& v) {
  if (u == v) return dir_neg(u);
  if (sgn(cross(u, v)) > 0) return make_direction(u.x + v.x, u.y + v.y);
  return rot90(u);
}

ArcSet ArcSet::empty() { return ArcSet{}; }

ArcSet ArcSet::zero_only() {
  ArcSet s;
  s.zero_ = true;
  return s;
}

ArcSet ArcSet::full(bool with_zero) {
  ArcSet s;
  s.full_ = true;
  s.zero_ = with_zero;
  return s;
}

ArcSet ArcSet::point(const Direction& d) {
  ArcSet s;
  s.crit_ = {d};
  s.pt_in_ = {true};
  s.gap_in_ = {false};
  return s;
}

ArcSet ArcSet::open_arc(const Direction& from, const Direction& to) {
  if (from == to) throw DomainError("degenerate arc");
  return from_predicate(
      {from, to},
      [&](const Direction& d) {
        if (d == from || d == to) return false;
        // d lies in the ccw open arc (from, to) iff it comes strictly after `from`
        // and strictly before `to` when angles are measured starting at `from`.
        auto rel = [&](const Direction& x) { return dir_mul(x, dir_inv(from)); };
        return angle_less(rel(d), rel(to));
      },
      false);
}

ArcSet ArcSet::closed_arc(const Direction& from, const Direction& to) {
  return open_arc(from, to).unite(point(from)).unite(point(to));
}

ArcSet ArcSet::from_predicate(std::vector<Direction> candidates,
                              const std::function<bool(const Direction&)>& pred, bool with_zero) {
  sort_unique(candidates);
  ArcSet s;
  s.zero_ = with_zero;
  if (candidates.empty()) {
    s.full_ = pred(Direction{1, 0});
    return s;
  }
  const std::size_t m = candidates.size();
  s.pt_in_.resize(m);
  s.gap_in_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    s.pt_in_[i] = pred(candidates[i]);
    s.gap_in_[i] = pred(gap_representative(candidates[i], candidates[(i + 1) % m]));
  }
  s.crit_ = std::move(candidates);
  s.canonicalize();
  return s;
}

void ArcSet::canonicalize() {
  if (full_) {
    crit_.clear();
    pt_in_.clear();
    gap_in_.clear();
    return;
  }
  bool changed = true;
  while (changed && !crit_.empty()) {
    changed = false;
    const std::size_t m = crit_.size();
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t prev = (i + m - 1) % m;
      if (pt_in_[i] == gap_in_[prev] && pt_in_[i] == gap_in_[i]) {
        if (m == 1) {
          full_ = pt_in_[0];
          crit_.clear();
          pt_in_.clear();
          gap_in_.clear();
        } else {
          crit_.erase(crit_.begin() + static_cast<long>(i));
          pt_in_.erase(pt_in_.begin() + static_cast<long>(i));
          gap_in_.erase(gap_in_.begin() + static_cast<long>(i));
        }
        changed = true;
        break;
      }
    }
  }
}

bool ArcSet::contains(const Direction& d) const {
  if (crit_.empty()) return full_;
  const std::size_t m = crit_.size();
  std::size_t gap = m - 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (crit_[i] == d) return pt_in_[i];
    if (angle_less(crit_[i], d)) gap = i;
  }
  return gap_in_[gap];
}

ArcSet ArcSet::with_zero(bool z) const {
  ArcSet s = *this;
  s.zero_ = z;
  return s;
}

ArcSet ArcSet::unite(const ArcSet& o) const {
  std::vector<Direction> cand = crit_;
  cand.insert(cand.end(), o.crit_.begin(), o.crit_.end());
  return from_predicate(
      std::move(cand), [&](const Direction& d) { return contains(d) || o.contains(d); }, zero_ || o.zero_);
}

ArcSet ArcSet::intersect(const ArcSet& o) const {
  std::vector<Direction> cand = crit_;
  cand.insert(cand.end(), o.crit_.begin(), o.crit_.end());
  return from_predicate(
      std::move(cand), [&](const Direction& d) { return contains(d) && o.contains(d); }, zero_ && o.zero_);
}

ArcSet ArcSet::rotated(const Direction& by) const {
  std::vector<Direction> cand;
  for (const auto& c : crit_) cand.push_back(dir_mul(c, by));
  Direction back = dir_inv(by);
  return from_predicate(
      std::move(cand), [&](const Direction& d) { return contains(dir_mul(d, back)); }, zero_);
}

bool ArcSet::subset_of(const ArcSet& o) const { return unite(o) == o; }

std::vector<ArcPiece> ArcSet::pieces() const {
  std::vector<ArcPiece> out;
  if (full_) {
    Direction e{1, 0};
    out.push_back({e, e, true});
    split_gap(e, e, out);
    return out;
  }
  const std::size_t m = crit_.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (pt_in_[i]) out.push_back({crit_[i], crit_[i], true});
    if (gap_in_[i]) split_gap(crit_[i], crit_[(i + 1) % m], out);
  }
  return out;
}

bool operator==(const ArcSet& a, const ArcSet& b) {
  return a.full_ == b.full_ && a.zero_ == b.zero_ && a.crit_ == b.crit_ && a.pt_in_ == b.pt_in_ &&
         a.gap_in_ == b.gap_in_;
}

ArcSet cone_relint(std::vector<Direction> gens) {
  sort_unique(gens);
  const std::size_t m = gens.size();
  if (m == 0) return ArcSet::zero_only();
  if (m == 1) return ArcSet::point(gens[0]);
  for (std::size_t i = 0; i < m; ++i) {
    const Direction& u = gens[i];
    const Direction& v = gens[(i + 1) % m];
    if (sgn(cross(u, v)) < 0) return ArcSet::open_arc(v, u);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Direction& u = gens[i];
    const Direction& v = gens[(i + 1) % m];
    if (sgn(cross(u, v)) == 0) {
      if (m == 2) return ArcSet::point(u).unite(ArcSet::point(v)).with_zero(true);
      return ArcSet::open_arc(v, u);
    }
  }
  return ArcSet::full(true);
}

namespace {

std::vector<Direction> generators(const ArcPiece& p) {
  if (p.is_point) return {p.from};
  return {p.from, p.to};
}

ArcSet piece_set(const ArcPiece& p) {
  return p.is_point ? ArcSet::point(p.from) : ArcSet::open_arc(p.from, p.to);
}

ArcSet piece_sum(const ArcPiece& a, const ArcPiece& b, bool tropical) {
  auto gens = generators(a);
  auto gb = generators(b);
  gens.insert(gens.end(), gb.begin(), gb.end());
  ArcSet s = cone_relint(std::move(gens));
  if (!tropical) return s;
  if (s.has_zero()) return ArcSet::full(true);
  return s.unite(piece_set(a)).unite(piece_set(b));
}

}  // namespace

ArcSet arc_hyperadd(const ArcSet& a, const ArcSet& b, bool tropical) {
  ArcSet out = ArcSet::empty();
  if (a.has_zero()) out = out.unite(b);
  if (b.has_zero()) out = out.unite(a);
  auto pa = a.pieces();
  auto pb = b.pieces();
  for (const auto& x : pa) {
    for (const auto& y : pb) {
      out = out.unite(piece_sum(x, y, tropical));
      if (out.is_full() && out.has_zero()) return out;
    }
  }
  return out;
}

}  // namespace tropext
