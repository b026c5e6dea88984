/* SPDX-License-Identifier: Apache-2.0 */
#include "commands.hpp"

#include "error.hpp"
#include "parse.hpp"


namespace tropext {

using json_io::json;
using json_io::to_json;

namespace {

struct Options {
  std::optional<Hyperfield> h;
  Hyperfield coeffs = Hyperfield::rationals();
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  GroupElem precision = GroupElem(Rational(8));
  json request;
};

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<T>();
}

std::string need_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) throw DomainError(std::string("missing string field \"") + key + "\"");
  return it->get<std::string>();
}

// One input: {"poly": text, "hyperfield"?}, {"series_poly": text, "coeffs"?} or {"text": text}.
// Bare text is a polynomial over the request hyperfield when one is given, a series polynomial otherwise.
struct Input {
  std::optional<HPoly> poly;
  std::optional<SeriesPoly> series;
};

Input read_input(const Options& o, const json& in, std::size_t nvars) {
  if (in.is_string()) return read_input(o, json{{"text", in}}, nvars);
  if (!in.is_object()) throw DomainError("inputs must be strings or objects");
  Input out;
  const std::size_t n = get_or<std::size_t>(in, "nvars", nvars);
  if (in.contains("poly")) {
    const Hyperfield h = in.contains("hyperfield") ? parse_hyperfield(need_string(in, "hyperfield"))
                         : o.h                     ? *o.h
                                                   : throw DomainError("a polynomial input needs a hyperfield");
    out.poly = parse_poly(h, need_string(in, "poly"), n);
  } else if (in.contains("series_poly")) {
    const Hyperfield k = in.contains("coeffs") ? parse_hyperfield(need_string(in, "coeffs")) : o.coeffs;
    out.series = parse_series_poly(need_string(in, "series_poly"), k, n);
  } else if (o.h) {
    out.poly = parse_poly(*o.h, need_string(in, "text"), n);
  } else {
    out.series = parse_series_poly(need_string(in, "text"), o.coeffs, n);
  }
  return out;
}

std::vector<Input> read_inputs(const Options& o, std::size_t count, std::size_t nvars) {
  const json inputs = get_or<json>(o.request, "inputs", json::array());
  if (inputs.size() != count)
    throw DomainError("expected " + std::to_string(count) + " input(s), got " + std::to_string(inputs.size()));
  std::vector<Input> out;
  for (const auto& in : inputs) out.push_back(read_input(o, in, nvars));
  return out;
}

const Hyperfield& need_hyperfield(const Options& o) {
  if (!o.h) throw DomainError("this command needs --hyperfield");
  return *o.h;
}

Hom make_hom(const Options& o, const std::string& name) {
  if (name.size() > 2 && name.ends_with("^G")) {
    Options inner = o;
    if (o.h) inner.h = o.h->base();
    const std::size_t rank = o.h && o.h->is_extension() ? o.h->rank() : 1;
    return Hom::extended(make_hom(inner, name.substr(0, name.size() - 2)), rank);
  }
  if (name == "val") return Hom::val(o.coeffs);
  if (name == "sval") return Hom::sval();
  if (name == "fval") return Hom::fval(o.coeffs);
  if (name == "phval") return Hom::phval();
  if (name == "sgn") return Hom::sign(false);
  if (name == "wsgn") return Hom::sign(true);
  if (name == "ph") return Hom::phase(false);
  if (name == "tph") return Hom::phase(true);
  if (name == "omega") return Hom::trivial(need_hyperfield(o));
  if (name == "id") return Hom::identity(need_hyperfield(o));
  if (name.starts_with("quot:")) return Hom::quotient(need_hyperfield(o), parse_hyperfield(name.substr(5)));
  throw DomainError("unknown homomorphism \"" + name + "\"");
}

// Polynomial over F x| Q: series inputs are pushed forward along fval.
HPoly as_fine(const Input& in) {
  if (in.poly) return *in.poly;
  return pushforward(Hom::fval(in.series->field(), in.series->rank()), *in.series);
}

// Polynomials over a base field get a seeded random lift.
SeriesPoly as_series(const Input& in, std::uint64_t seed) {
  return in.series ? *in.series : random_lift(*in.poly, seed);
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

json cmd_eval(const Options& o, json& resp) {
  const Input in = read_inputs(o, 1, 0)[0];
  const json at = get_or<json>(o.request, "at", json::array());
  if (in.series) {
    std::vector<Series> pt;
    for (const auto& a : at) pt.push_back(parse_series(a.get<std::string>(), in.series->field(), in.series->rank()));
    const Series v = in.series->eval(pt);
    resp["text"] = v.to_string();
    return json{{"value", to_json(v)}};
  }
  const Hyperfield& h = in.poly->hyperfield();
  std::vector<Elem> pt;
  for (const auto& a : at) pt.push_back(parse_elem(h, a.get<std::string>()));
  const SetValue v = eval(*in.poly, pt);
  const bool root = h.contains_zero(v);
  resp["text"] = h.format(v) + (root ? "  (root)" : "");
  return json{{"value", h.format(v)}, {"is_root", root}};
}

json cmd_roots(const Options& o, json& resp) {
  const Input in = read_inputs(o, 1, 1)[0];
  const HPoly p = in.poly ? *in.poly : as_fine(in);
  const Hyperfield& h = p.hyperfield();
  json roots = json::array();
  std::vector<std::string> multiset;
  for (const auto& r : roots_univariate(p)) {
    roots.push_back(to_json(h, r));
    for (int i = 0; i < r.multiplicity; ++i) multiset.push_back(h.format(r.root));
  }
  resp["text"] = "[" + join(multiset, ",") + "]";
  return json{{"poly", to_json(p)}, {"roots", roots}, {"multiset", multiset}};
}

json cmd_pushforward(const Options& o, json& resp) {
  const Hom f = make_hom(o, get_or<std::string>(o.request, "hom", "fval"));
  const Input in = read_inputs(o, 1, 0)[0];
  const HPoly img = in.series ? pushforward(f, *in.series) : pushforward(f, *in.poly);
  resp["text"] = img.to_string();
  return json{{"hom", f.name()}, {"target", f.target().key()}, {"image", to_json(img)}};
}

json cmd_tropicalize(const Options& o, json& resp) {
  const Input in = read_inputs(o, 1, 0)[0];
  if (!in.series) throw DomainError("tropicalize takes a series polynomial");
  const SeriesPoly& p = *in.series;
  const Hyperfield& k = p.field();
  json images = json::object();
  std::vector<std::string> text;
  auto add = [&](const Hom& f) {
    const HPoly img = pushforward(f, p);
    images[f.name()] = to_json(img);
    text.push_back(f.name() + ": " + img.to_string());
  };
  add(Hom::val(k, p.rank()));
  add(Hom::fval(k, p.rank()));
  if (k.key() == "Q") add(Hom::sval(p.rank()));
  if (k.key() == "Qi") add(Hom::phval(p.rank()));
  json out{{"series_poly", to_json(p)}, {"images", images}};
  if (p.nvars() == 1) {
    json cells = json::array();
    for (const auto& c : newton_cells(pushforward(Hom::val(k, p.rank()), p))) cells.push_back(to_json(c));
    out["newton_cells"] = cells;
  } else if (p.nvars() == 2 && p.rank() == 1) {
    out["curve"] = to_json(trop_project(fine_hypersurface(pushforward(Hom::fval(k), p))));
  }
  resp["text"] = join(text, "\n");
  return out;
}

json cmd_fine_curve(const Options& o, json& resp) {
  const FineCurve c = fine_hypersurface(as_fine(read_inputs(o, 1, 2)[0]));
  std::vector<std::string> text;
  for (const auto& cc : c.cells)
    text.push_back(cc.cell.to_string() + " : " + cc.condition.to_string(unit_names()) + " = 0");
  resp["text"] = join(text, "\n");
  resp["svg"] = render_svg({c}, {}, true);
  return to_json(c);
}

json cmd_intersect(const Options& o, json& resp) {
  const auto in = read_inputs(o, 2, 2);
  const FineCurve c1 = fine_hypersurface(as_fine(in[0])), c2 = fine_hypersurface(as_fine(in[1]));
  const Hyperfield base = c1.source.hyperfield().base();
  const FineIntersection fi = fine_intersect(c1, c2);
  json out = to_json(base, fi);
  std::vector<std::string> text;
  for (const auto& p : fi.points) text.push_back(p.to_string(c1.source.hyperfield()));
  for (const auto& c : fi.components) text.push_back(c.to_string(base));
  std::vector<Vec2> projected;
  if (get_or<bool>(o.request, "stable", false)) {
    projected = stable_intersect(c1, c2, o.seed);
    json pj = json::array();
    std::vector<std::string> pt;
    for (const auto& v : projected) {
      pj.push_back(to_json(v));
      pt.push_back("(" + to_string(v[0]) + "," + to_string(v[1]) + ")");
    }
    out["projected"] = pj;
    text.push_back("stable: {" + join(pt, ", ") + "}");
  }
  if (in[0].series && in[1].series && get_or<bool>(o.request, "oracle", false)) {
    json oracle = json::array();
    for (const auto& [x, y] : solve_series_system({*in[0].series, *in[1].series}, {}, o.precision))
      oracle.push_back(json::array({to_json(x), to_json(y)}));
    out["oracle"] = oracle;
  }
  resp["text"] = join(text, "\n");
  resp["svg"] = render_svg({c1, c2}, projected, false);
  return out;
}

json cmd_homotopy(const Options& o, json& resp) {
  const auto in = read_inputs(o, 2, 2);
  const SeriesPoly p = as_series(in[0], o.seed), q = as_series(in[1], o.seed + 1);
  const HomotopyStart hs = homotopy_start(p, q);
  json out = to_json(p.field(), hs);
  out["system"] = json::array({to_json(p), to_json(q)});
  std::vector<std::string> sols;
  const Hyperfield ext = p.field().extend(1);
  for (const auto& s : hs.solutions()) sols.push_back(s.to_string(ext));
  resp["text"] = "mixed volume " + std::to_string(hs.total_mixed_volume) + ", bkk " + std::to_string(hs.bkk) +
                 "\n" + join(sols, "\n");
  resp["ok"] = hs.total_mixed_volume == hs.bkk;
  return out;
}

json cmd_axioms(const Options& o, json& resp) {
  const AxiomReport r = check_axioms(need_hyperfield(o), get_or<bool>(o.request, "exhaustive", false),
                                     get_or<std::size_t>(o.request, "samples", 1000), o.seed);
  resp["ok"] = r.passed();
  resp["text"] = r.hyperfield + ": " + std::to_string(r.triples) + " triples, " +
                 std::to_string(r.violations.size()) + " violations" + (r.stringent ? ", stringent" : "");
  return to_json(r);
}

json cmd_verify(const Options& o, json& resp) {
  const std::string suite = need_string(o.request, "suite");
  if (suite == "axioms") return cmd_axioms(o, resp);
  auto summary = [&](const HarnessSummary& s) {
    resp["ok"] = s.passed();
    resp["text"] = s.name + ": " + std::to_string(s.trials) + " trials, " + std::to_string(s.failures.size()) +
                   " failures";
    return to_json(s);
  };
  if (suite == "kapranov")
    return summary(kapranov_harness(make_hom(o, get_or<std::string>(o.request, "hom", "val")), o.trials, o.seed));
  if (suite == "fundamental")
    return summary(fundamental_harness(make_hom(o, get_or<std::string>(o.request, "hom", "fval")), o.trials, o.seed));
  if (suite == "multiplicity") {
    const MultBoundReport r = mult_bound_check(need_hyperfield(o), o.trials, get_or<int>(o.request, "max_degree", 6),
                                               o.seed, get_or<bool>(o.request, "exhaustive", false));
    resp["ok"] = r.passed();
    resp["text"] = r.hyperfield + ": " + std::to_string(r.polys) + " polynomials, " +
                   std::to_string(r.violations.size()) + " violations" + (r.applicable ? "" : " (" + r.note + ")");
    return to_json(r);
  }
  if (suite == "hom") {
    const HomReport r = hom_check(make_hom(o, need_string(o.request, "hom")), o.trials, o.seed,
                                  get_or<bool>(o.request, "lifts", false));
    resp["ok"] = r.passed();
    resp["text"] = r.hom + ": " + std::to_string(r.violations.size()) + " violations, " +
                   std::to_string(r.missing_lifts.size()) + " missing lifts";
    return to_json(r);
  }
  if (suite == "rac") {
    const Hom f = make_hom(o, need_string(o.request, "hom"));
    const Input in = read_inputs(o, 1, 1)[0];
    const json at = get_or<json>(o.request, "at", json::array());
    if (at.size() != 1) throw DomainError("rac needs one --at value in the target");
    const Elem beta = parse_elem(f.target(), at[0].get<std::string>());
    const RacResult r = in.series ? rac_check_instance(f, *in.series, beta, {}) : rac_check_instance(f, *in.poly, beta);
    resp["ok"] = r.status == RacStatus::Lift;
    resp["text"] = r.detail;
    return to_json(f.source(), r);
  }
  throw DomainError("unknown verification suite \"" + suite + "\"");
}

}  // namespace

json run_command(const json& request) {
  Options o;
  o.request = request;
  if (auto key = get_or<std::string>(request, "hyperfield", ""); !key.empty()) o.h = parse_hyperfield(key);
  o.coeffs = parse_hyperfield(get_or<std::string>(request, "coeffs", "Q"));
  o.seed = get_or<std::uint64_t>(request, "seed", 0);
  o.trials = get_or<std::size_t>(request, "trials", 100);
  if (auto p = get_or<std::string>(request, "precision", ""); !p.empty()) o.precision = GroupElem(parse_rational(p));

  const std::string cmd = need_string(request, "command");
  json resp{{"schema_version", kSchemaVersion}, {"command", cmd}, {"ok", true}};
  json result;
  if (cmd == "eval") result = cmd_eval(o, resp);
  else if (cmd == "roots") result = cmd_roots(o, resp);
  else if (cmd == "pushforward") result = cmd_pushforward(o, resp);
  else if (cmd == "tropicalize") result = cmd_tropicalize(o, resp);
  else if (cmd == "fine-curve") result = cmd_fine_curve(o, resp);
  else if (cmd == "intersect") result = cmd_intersect(o, resp);
  else if (cmd == "homotopy-start") result = cmd_homotopy(o, resp);
  else if (cmd == "verify") result = cmd_verify(o, resp);
  else if (cmd == "axioms") result = cmd_axioms(o, resp);
  else throw DomainError("unknown command \"" + cmd + "\"");
  resp["result"] = std::move(result);
  return resp;
}

json error_object(const std::exception& e) {
  json err{{"kind", "internal"}, {"message", e.what()}};
  if (auto* te = dynamic_cast<const Error*>(&e)) err["kind"] = te->kind();
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) err["position"] = pe->position();
  if (dynamic_cast<const json::exception*>(&e)) err["kind"] = "request";
  return json{{"schema_version", kSchemaVersion}, {"error", err}};
}

}  // namespace tropext
