#include "pfb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pfb/asymptotic.hpp"
#include "pfb/errors.hpp"
#include "pfb/fibered.hpp"
#include "pfb/homology.hpp"
#include "pfb/sign_cells.hpp"

namespace pfb::cli {

namespace {

using json = nlohmann::json;

// Raised for malformed command lines; carries a schema hint.
struct UsageError : Error {
  UsageError(const std::string& what, std::string hint) : Error(what), hint(std::move(hint)) {}
  std::string hint;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'", "pass an existing file path");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(what + " is not valid JSON: " + e.what(), "see README for the " + what + " schema");
  }
}

// "--params" takes inline JSON or @file.
json params_arg(const std::string& raw) {
  if (raw.empty()) return json::object();
  if (raw.front() == '@') return parse_json(slurp(raw.substr(1)), "params file");
  return parse_json(raw, "params");
}

json file_arg(const std::string& path, const std::string& what) {
  return parse_json(slurp(path), what);
}

struct Options {
  std::string output;
  std::string format = "json";
  std::string params;
  std::string field = "q";
  double constant = 1.0;
  std::uint64_t kmax = 1;
  std::uint64_t resolution = 0;
  std::string file;
  std::vector<std::string> ids;
  std::optional<std::uint64_t> p;
  std::string delta;
};

struct Outcome {
  Outcome(json r = json::object(), int s = kExitOk) : report(std::move(r)), status(s) {}
  json report;
  int status = kExitOk;
  std::string csv;  // set by `table` when --format csv
};

AsymptoticBound asymptotic_of(const std::string& id, const json& params) {
  json doc = evaluate_bound(id, params);
  if (id == "quantifier_bound") doc = doc.at("engine");
  if (!doc.contains("factors"))
    throw UsageError("'" + id + "' is an exact bound", "compare takes two asymptotic ids");
  AsymptoticBound b;
  b.formula_id = doc.at("formula_id").get<std::string>();
  b.inputs = doc.at("inputs");
  b.unknown_constant = doc.at("unknown_constant").get<bool>();
  for (const auto& f : doc.at("factors")) {
    const auto& e = f.at("exponent");
    const Natural value(e.at("value").get<std::string>());
    b.factors.push_back({Natural(f.at("base").get<std::string>()),
                         e.at("class") == "exact" ? Exponent::exact(value) : Exponent::big_o(value)});
  }
  return b;
}

Outcome cmd_bound(const Options& o) {
  if (o.ids.size() != 1) throw UsageError("bound takes exactly one id", "pfb bound <id> --params <json|@file>");
  const json params = params_arg(o.params);
  json report = evaluate_bound(o.ids[0], params);
  if (report.contains("factors") || report.contains("engine")) {
    report["constant"] = o.constant;
    report["log2_value"] = asymptotic_of(o.ids[0], params).log2_value(o.constant);
  }
  return {report};
}

Outcome cmd_compare(const Options& o) {
  if (o.ids.size() != 2)
    throw UsageError("compare takes two ids", "pfb compare <id1> <id2> --params <json|@file> [--constant C]");
  const json params = params_arg(o.params);
  const json p1 = params.contains("first") ? params.at("first") : params;
  const json p2 = params.contains("second") ? params.at("second") : params;
  const auto a = asymptotic_of(o.ids[0], p1);
  const auto b = asymptotic_of(o.ids[1], p2);
  json report = compare(a, b, o.constant);
  report["first"] = a;
  report["second"] = b;
  return {report};
}

Outcome cmd_verify_ss(const Options& o) {
  const SimplicialMap f = file_arg(o.file, "map").get<SimplicialMap>();
  const SpectralReport rep = verify_spectral_inequality(f, o.kmax, parse_field(o.field));
  json report = rep;
  report["kmax"] = o.kmax;
  report["field"] = o.field;
  return {report, rep.ok ? kExitOk : kExitVerificationFailed};
}

Outcome cmd_verify_cells(const Options& o) {
  if (o.resolution == 0) throw UsageError("--resolution is required", "pfb verify-cells <system.json> --resolution R");
  const PolynomialSystem sys = file_arg(o.file, "polynomial system").get<PolynomialSystem>();
  const SignCellReport rep = enumerate_signs(sys, o.resolution);
  const BoundCheck check = check_against_bound(sys, rep);
  json report{{"report", rep}, {"check", check}};
  return {report, check.verdict == Verdict::Violated ? kExitVerificationFailed : kExitOk};
}

Outcome cmd_homology(const Options& o) {
  const SimplicialComplex K = file_arg(o.file, "complex").get<SimplicialComplex>();
  const Field field = parse_field(o.field);
  const ChainComplexRanks ranks = chain_ranks(K, field);
  const BettiVector b = ranks.betti();
  json report{{"betti", b},
              {"field", to_string(field)},
              {"chain_dims", ranks.dims},
              {"boundary_ranks", ranks.ranks},
              {"euler_characteristic", K.euler_characteristic()}};
  return {report};
}

Outcome cmd_diagonal(const Options& o) {
  DiagonalSample sample = file_arg(o.file, "diagonal sample").get<DiagonalSample>();
  if (o.p) sample.p = *o.p;
  if (!o.delta.empty()) sample.delta = parse_rational(o.delta);
  json report{{"components", expanded_diagonal_components(sample)},
              {"p", sample.p},
              {"delta", to_string(sample.delta)},
              {"points", sample.points.size()}};
  return {report};
}

Outcome cmd_table(const Options& o) {
  json t = table(params_arg(o.params));
  Outcome out{t};
  if (o.format == "csv") out.csv = table_to_csv(t);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic topological complexity bounds, with desk-scale verifiers", "pfb"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--output", o.output, "write the report to this path instead of stdout");
  app.add_option("--format", o.format, "json or csv (csv only for table)")->check(CLI::IsMember({"json", "csv"}));

  auto* bound = app.add_subcommand("bound", "evaluate a named bound");
  bound->add_option("id", o.ids, "bound id")->required()->expected(1);
  bound->add_option("--params", o.params, "JSON object or @file");
  bound->add_option("--constant", o.constant, "value for hidden O-constants");
  bound->add_flag("--asymptotic", "accepted for symmetry; the id decides the kind");

  auto* cmp = app.add_subcommand("compare", "order two asymptotic descriptors");
  cmp->add_option("ids", o.ids, "two asymptotic bound ids")->required()->expected(2);
  cmp->add_option("--params", o.params, "JSON object (shared, or {first, second}) or @file");
  cmp->add_option("--constant", o.constant, "value for hidden O-constants");

  auto* ss = app.add_subcommand("verify-ss", "check b_k(Y) <= sum b_q(W^p) for a simplicial surjection");
  ss->add_option("map", o.file, "map JSON file")->required();
  ss->add_option("--kmax", o.kmax, "largest degree k");
  ss->add_option("--field", o.field, "q or gf2");

  auto* cells = app.add_subcommand("verify-cells", "measure sign cells and compare with the bounds");
  cells->add_option("system", o.file, "polynomial system JSON file")->required();
  cells->add_option("--resolution", o.resolution, "grid intervals per axis");

  auto* hom = app.add_subcommand("homology", "Betti numbers of a simplicial complex");
  hom->add_option("complex", o.file, "complex JSON file")->required();
  hom->add_option("--field", o.field, "q or gf2");

  auto* diag = app.add_subcommand("diagonal", "components of an expanded diagonal of a sample");
  diag->add_option("sample", o.file, "sample JSON file")->required();
  diag->add_option("--p", o.p, "number of extra factors");
  diag->add_option("--delta", o.delta, "threshold for the sum of squared distances");

  auto* tab = app.add_subcommand("table", "sweep a bound or a comparison over a parameter grid");
  tab->add_option("--params", o.params, "sweep spec as JSON object or @file")->required();

  auto emit_error = [&](const std::string& message, const std::string& hint) {
    json report{{"error", message}};
    if (!hint.empty()) report["hint"] = hint;
    out << report.dump(2) << '\n';
    err << "pfb: " << message << '\n';
    return kExitInputError;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit_error(e.what(), "run `pfb --help` for usage");
  }

  Outcome result;
  try {
    if (o.format == "csv" && !tab->parsed())
      throw UsageError("--format csv is only available for table", "drop --format or use table");
    if (bound->parsed()) {
      result = cmd_bound(o);
    } else if (cmp->parsed()) {
      result = cmd_compare(o);
    } else if (ss->parsed()) {
      result = cmd_verify_ss(o);
    } else if (cells->parsed()) {
      result = cmd_verify_cells(o);
    } else if (hom->parsed()) {
      result = cmd_homology(o);
    } else if (diag->parsed()) {
      result = cmd_diagonal(o);
    } else {
      result = cmd_table(o);
    }
  } catch (const UsageError& e) {
    return emit_error(e.what(), e.hint);
  } catch (const NotSurjective& e) {
    return emit_error(e.what(), "the map must hit every simplex of the target");
  } catch (const Error& e) {
    return emit_error(e.what(), "");
  } catch (const json::exception& e) {
    return emit_error(std::string("malformed input: ") + e.what(), "see README for the input schemas");
  }

  const std::string text = result.csv.empty() ? result.report.dump(2) + "\n" : result.csv;
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output);
    if (!file) return emit_error("cannot write '" + o.output + "'", "");
    file << text;
  }
  return result.status;
}

}  // namespace pfb::cli
