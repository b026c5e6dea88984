/* SPDX-License-Identifier: Apache-2.0 */
#include "json_io.hpp"

namespace tropext::json_io {

namespace {

const char* kind_name(Cell2::Kind k) {
  switch (k) {
    case Cell2::Kind::Point: return "point";
    case Cell2::Kind::Segment: return "segment";
    case Cell2::Kind::Ray: return "ray";
    case Cell2::Kind::Line: return "line";
  }
  return "?";
}

json exponent(const Exponent& e) {
  json out = json::array();
  for (long x : e) out.push_back(x);
  return out;
}

json level_json(const std::optional<GroupElem>& g) {
  if (!g) return nullptr;
  return g->rank() == 1 ? to_json((*g)[0]) : to_json(*g);
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const GroupElem& g) {
  json out = json::array();
  for (const auto& s : g.to_strings()) out.push_back(s);
  return out;
}

json to_json(const Vec2& v) { return json::array({to_json(v[0]), to_json(v[1])}); }

json to_json(const Cell2& c) {
  json out{{"kind", kind_name(c.kind)}};
  out["a"] = to_json(c.a);
  if (c.kind == Cell2::Kind::Segment) out["b"] = to_json(c.b);
  if (c.kind == Cell2::Kind::Ray || c.kind == Cell2::Kind::Line)
    out["direction"] = json::array({to_string(c.dir[0]), to_string(c.dir[1])});
  out["constraints"] = c.constraints();
  return out;
}

json to_json(const Series& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(json::array({level_json(e), s.field().format_unit(c)}));
  return json{{"text", s.to_string()}, {"terms", terms}, {"precision", level_json(s.precision())}};
}

json to_json(const HPoly& p) {
  return json{{"hyperfield", p.hyperfield().key()}, {"nvars", p.nvars()}, {"text", p.to_string()}};
}

json to_json(const SeriesPoly& p) {
  return json{{"coefficients", p.field().key()}, {"nvars", p.nvars()}, {"text", p.to_string()}};
}

json to_json(const NewtonCell& c) {
  return json{{"level", level_json(c.level)}, {"J", c.J}};
}

json to_json(const Hyperfield& h, const RootRecord& r) {
  json out{{"root", h.format(r.root)}, {"multiplicity", r.multiplicity}};
  if (r.cell) out["cell"] = to_json(*r.cell);
  return out;
}

json to_json(const Hyperfield& base, const FinePoint& x) {
  json out = json::array();
  for (const auto& c : x.coords) out.push_back(json::array({base.format_unit(c.unit), level_json(c.level)}));
  return out;
}

json to_json(const Hyperfield& base, const FineComponent& c) {
  json conds = json::array();
  for (const auto& b : c.conditions) conds.push_back(b.to_string(unit_names()));
  json fixed = json::array();
  for (const auto& u : c.fixed) fixed.push_back(u ? json(base.format_unit(*u)) : json(nullptr));
  return json{{"piece", to_json(c.piece)}, {"conditions", conds}, {"fixed", fixed}, {"text", c.to_string(base)}};
}

json to_json(const FineCurve& c) {
  json cells = json::array();
  for (const auto& cc : c.cells) {
    json J = json::array();
    for (const auto& j : cc.J) J.push_back(exponent(j));
    cells.push_back(json{{"cell", to_json(cc.cell)},
                         {"J", J},
                         {"condition", cc.condition.to_string(unit_names())},
                         {"weight", cc.weight},
                         {"solvable", cc.solvable ? json(*cc.solvable) : json(nullptr)}});
  }
  return json{{"source", to_json(c.source)}, {"cells", cells}};
}

json to_json(const TropCurve& c) {
  json cells = json::array();
  for (const auto& [cell, w] : c.cells) cells.push_back(json{{"cell", to_json(cell)}, {"weight", w}});
  return cells;
}

json to_json(const Hyperfield& base, const FineIntersection& fi) {
  json points = json::array(), comps = json::array();
  for (const auto& p : fi.points) points.push_back(to_json(base, p));
  for (const auto& c : fi.components) comps.push_back(to_json(base, c));
  return json{{"points", points}, {"components", comps}};
}

json to_json(const Hyperfield& base, const HomotopyStart& hs) {
  json cells = json::array(), sols = json::array();
  for (const auto& c : hs.cells) {
    json J1 = json::array(), J2 = json::array(), cs = json::array();
    for (const auto& j : c.J1) J1.push_back(exponent(j));
    for (const auto& j : c.J2) J2.push_back(exponent(j));
    for (const auto& s : c.solutions) cs.push_back(to_json(base, s));
    cells.push_back(json{{"point", to_json(c.point)},
                         {"J1", J1},
                         {"J2", J2},
                         {"mixed_volume", c.mixed_volume},
                         {"solutions", cs}});
  }
  for (const auto& s : hs.solutions()) sols.push_back(to_json(base, s));
  return json{{"cells", cells},
              {"solutions", sols},
              {"total_mixed_volume", hs.total_mixed_volume},
              {"bkk", hs.bkk}};
}

json to_json(const AxiomReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back(json{{"axiom", x.axiom}, {"instance", x.instance}});
  return json{{"hyperfield", r.hyperfield},
              {"exhaustive", r.exhaustive},
              {"triples", r.triples},
              {"stringent", r.stringent},
              {"violations", v},
              {"passed", r.passed()}};
}

json to_json(const MultBoundReport& r) {
  return json{{"hyperfield", r.hyperfield},
              {"applicable", r.applicable},
              {"note", r.note},
              {"polynomials", r.polys},
              {"violations", r.violations},
              {"passed", r.passed()}};
}

json to_json(const HomReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back(json{{"law", x.law}, {"instance", x.instance}});
  return json{{"hom", r.hom},
              {"trials", r.trials},
              {"violations", v},
              {"lifts_checked", r.lifts_checked},
              {"lifts_exhaustive", r.lifts_exhaustive},
              {"missing_lifts", r.missing_lifts},
              {"passed", r.passed()}};
}

json to_json(const HarnessCase& c) {
  return json{{"instance", c.instance}, {"expected", c.expected}, {"got", c.got}, {"ok", c.ok}};
}

json to_json(const HarnessSummary& s) {
  json f = json::array();
  for (const auto& c : s.failures) f.push_back(to_json(c));
  return json{{"name", s.name}, {"trials", s.trials}, {"failures", f}, {"passed", s.passed()}};
}

json to_json(const Hyperfield& h, const RacResult& r) {
  const char* status = r.status == RacStatus::Lift             ? "lift"
                       : r.status == RacStatus::Counterexample ? "counterexample"
                                                               : "not_found";
  json out{{"status", status}, {"detail", r.detail}};
  if (r.lift) out["lift"] = h.format(*r.lift);
  if (r.series_lift) out["series_lift"] = to_json(*r.series_lift);
  return out;
}

}  // namespace tropext::json_io
