/* SPDX-License-Identifier: Apache-2.0 */
// Command-line front end over the extern-C batch interface.
#include <tropext/tropext.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string hyperfield;
  std::string coeffs = "Q";
  std::string precision;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string out;
  std::string format = "json";
  bool pretty = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--hyperfield", c.hyperfield, "Hyperfield key, e.g. S, GF7/{1,2,4}, T, Q⋊Q");
  cmd->add_option("--coeffs", c.coeffs, "Coefficient field of series inputs")->capture_default_str();
  cmd->add_option("--precision", c.precision, "Relative precision p/q for series solves");
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--trials", c.trials, "Trial count for harnesses")->capture_default_str();
  cmd->add_option("--out", c.out, "Write the selected output to this file instead of stdout");
  cmd->add_option("--format", c.format, "json, text or svg")
      ->check(CLI::IsMember({"json", "text", "svg"}))
      ->capture_default_str();
  cmd->add_flag("--pretty", c.pretty, "Indent JSON output");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A positional input is an expression, or a file holding an expression or a JSON input object.
json input_of(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  const std::string text = slurp(arg);
  json parsed = json::parse(text, nullptr, false);
  if (!parsed.is_discarded() && parsed.is_object()) return parsed;
  std::string trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  return trimmed;
}

std::string io_error(const std::string& message) {
  return json{{"schema_version", "1"}, {"error", {{"kind", "io"}, {"message", message}}}}.dump();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperfield, tropical extension and fine tropical geometry toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tropext_version());

  Common c;
  std::vector<std::string> inputs, at;
  std::string hom, suite, svg_path;
  bool stable = false, oracle = false, exhaustive = false, lifts = false;
  std::size_t samples = 1000;
  int max_degree = 6;

  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at a point (hypersum or series value)");
  eval->add_option("poly", inputs, "Polynomial")->required()->expected(1);
  eval->add_option("--at", at, "Coordinate literal; repeat once per variable");

  auto* roots = app.add_subcommand("roots", "Roots with multiplicities of a univariate polynomial");
  roots->add_option("poly", inputs, "Polynomial")->required()->expected(1);

  auto* push = app.add_subcommand("pushforward", "Push a polynomial forward along a homomorphism");
  push->add_option("poly", inputs, "Polynomial")->required()->expected(1);
  push->add_option("--hom", hom, "val, sval, fval, phval, sgn, wsgn, ph, tph, omega, id, quot:<key>, <name>^G")
      ->default_val("fval");

  auto* trop = app.add_subcommand("tropicalize", "Images of a series polynomial under the valuations");
  trop->add_option("series", inputs, "Series polynomial")->required()->expected(1);

  auto* fine = app.add_subcommand("fine-curve", "Fine tropical curve of a polynomial in X, Y");
  fine->add_option("poly", inputs, "Polynomial over F⋊Q, or series polynomial")->required()->expected(1);
  fine->add_option("--svg", svg_path, "Also write an SVG drawing here");

  auto* inter = app.add_subcommand("intersect", "Fine and stable intersection of two plane curves");
  inter->add_option("inputs", inputs, "Two polynomials or input files")->required()->expected(2);
  inter->add_flag("--stable", stable, "Also compute the projected stable intersection");
  inter->add_flag("--oracle", oracle, "Also solve the series system exactly");
  inter->add_option("--svg", svg_path, "Also write an SVG drawing here");

  auto* homo = app.add_subcommand("homotopy-start", "Start solutions of a square system from mixed cells");
  homo->add_option("inputs", inputs, "Two series polynomials, or polynomials over a field to lift")
      ->required()
      ->expected(2);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "kapranov, fundamental, axioms, multiplicity, hom, rac")
      ->required()
      ->check(CLI::IsMember({"kapranov", "fundamental", "axioms", "multiplicity", "hom", "rac"}));
  verify->add_option("inputs", inputs, "Inputs of the suite (rac: one polynomial)");
  verify->add_option("--hom", hom, "Homomorphism under test");
  verify->add_flag("--exhaustive", exhaustive, "Enumerate instead of sampling (finite hyperfields)");
  verify->add_option("--samples", samples, "Sampled triples for the axiom suite")->capture_default_str();
  verify->add_flag("--lifts", lifts, "Also check that sums lift (hom suite)");
  verify->add_option("--max-degree", max_degree, "Degree bound (multiplicity suite)")->capture_default_str();
  verify->add_option("--at", at, "Target element (rac suite)");

  auto* axioms = app.add_subcommand("axioms", "Check the hyperfield axioms");
  axioms->add_flag("--exhaustive", exhaustive, "Every triple of a finite hyperfield");
  axioms->add_option("--samples", samples, "Sampled triples otherwise")->capture_default_str();

  for (auto* cmd : {eval, roots, push, trop, fine, inter, homo, verify, axioms}) add_common(cmd, c);

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  json request{{"command", command}, {"coeffs", c.coeffs}, {"seed", c.seed}, {"trials", c.trials}};
  if (!c.hyperfield.empty()) request["hyperfield"] = c.hyperfield;
  if (!c.precision.empty()) request["precision"] = c.precision;
  if (!hom.empty()) request["hom"] = hom;
  if (!suite.empty()) request["suite"] = suite;
  if (!at.empty()) request["at"] = at;
  request["stable"] = stable;
  request["oracle"] = oracle;
  request["exhaustive"] = exhaustive;
  request["samples"] = samples;
  request["lifts"] = lifts;
  request["max_degree"] = max_degree;

  try {
    json in = json::array();
    for (const auto& arg : inputs) in.push_back(input_of(arg));
    request["inputs"] = in;
  } catch (const std::exception& e) {
    std::cout << io_error(e.what()) << "\n";
    return 2;
  }

  char* raw = nullptr;
  const tropext_status st = tropext_run(request.dump().c_str(), &raw);
  const json resp = json::parse(raw ? raw : "{}");
  tropext_string_free(raw);
  if (st != TROPEXT_OK && st != TROPEXT_CHECK_FAILED) {
    std::cout << resp.dump(c.pretty ? 2 : -1) << "\n";
    std::cerr << "error: " << tropext_last_error() << "\n";
    return 2;
  }

  try {
    if (!svg_path.empty() && resp.contains("svg")) write_file(svg_path, resp["svg"].get<std::string>());
    std::string output;
    if (c.format == "text") {
      output = resp.value("text", "") + "\n";
    } else if (c.format == "svg") {
      if (!resp.contains("svg")) throw std::runtime_error(command + " has no SVG output");
      output = resp["svg"].get<std::string>();
    } else {
      json body = resp;
      body.erase("svg");
      body.erase("text");
      output = body.dump(c.pretty ? 2 : -1) + "\n";
    }
    if (c.out.empty()) std::cout << output;
    else write_file(c.out, output);
  } catch (const std::exception& e) {
    std::cout << io_error(e.what()) << "\n";
    return 2;
  }
  return st == TROPEXT_OK ? 0 : 1;
}
