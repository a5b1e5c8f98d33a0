// Copyright 2026 The wronsk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "wronsk/characterization.hpp"
#include "wronsk/conjecture_search.hpp"
#include "wronsk/curve_geometry.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/parser.hpp"
#include "wronsk/pole_analysis.hpp"
#include "wronsk/reduction.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk::cli {
namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> exprs;
  std::string from_json;
  bool json = false;
};

std::string read_all(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

/// Positional expressions, or the "functions" array of a JSON document.
std::vector<std::string> expressions(const Options& opt) {
  if (opt.from_json.empty()) {
    if (opt.exprs.empty()) throw UsageError("no expressions given");
    return opt.exprs;
  }
  if (!opt.exprs.empty()) throw UsageError("give expressions as arguments or through --from-json, not both");
  const json doc = json::parse(read_all(opt.from_json), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("functions") || !doc["functions"].is_array())
    throw UsageError("--from-json expects a document {\"functions\": [\"...\", ...]}");
  std::vector<std::string> out;
  for (const json& item : doc["functions"]) {
    if (!item.is_string()) throw UsageError("\"functions\" must hold strings");
    out.push_back(item.get<std::string>());
  }
  if (out.empty()) throw UsageError("\"functions\" is empty");
  return out;
}

[[noreturn]] void rethrow_in_argument(const ParseError& e, std::size_t index) {
  throw UsageError("expression " + std::to_string(index + 1) + ": " + e.diagnostic().to_string());
}

/// Laurent members when every expression is one; rational ones otherwise.
struct Family {
  std::vector<LaurentPoly> laurent;
  std::vector<RationalFunction> rational;
  bool is_laurent = true;
};

Family parse_family(const std::vector<std::string>& exprs) {
  Family out;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    try {
      out.laurent.push_back(parse_laurent(exprs[i]));
      out.rational.emplace_back(out.laurent.back());
      continue;
    } catch (const ParseError& e) {
      if (exprs[i].find('(') == std::string::npos) rethrow_in_argument(e, i);
    }
    try {
      out.rational.push_back(parse_rational(exprs[i]));
    } catch (const ParseError& e) {
      rethrow_in_argument(e, i);
    }
    if (auto as_laurent = out.rational.back().to_laurent())
      out.laurent.push_back(*as_laurent);
    else
      out.is_laurent = false;
  }
  return out;
}

std::vector<LaurentPoly> parse_laurent_family(const Options& opt, const char* command) {
  Family family = parse_family(expressions(opt));
  if (!family.is_laurent) throw UsageError(std::string(command) + " needs Laurent polynomials (poles only at 0)");
  return std::move(family.laurent);
}

Curve parse_curve_arguments(const Options& opt) {
  const std::vector<std::string> exprs = expressions(opt);
  if (exprs.size() == 1) {
    try {
      return Curve(parse_curve(exprs.front()));
    } catch (const ParseError& e) {
      throw UsageError(e.diagnostic().to_string());
    }
  }
  Family family = parse_family(exprs);
  if (!family.is_laurent) throw UsageError("curve components must be Laurent polynomials");
  return Curve(std::move(family.laurent));
}

std::string str(const Rational& q) { return q.to_string(); }

template <class T>
std::string tuple_text(const std::vector<T>& items) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ", " : "") << items[i];
  os << ')';
  return os.str();
}

json strings(const std::vector<LaurentPoly>& fs) {
  json out = json::array();
  for (const LaurentPoly& f : fs) out.push_back(to_string(f));
  return out;
}

json strings(const RationalVector& v) {
  json out = json::array();
  for (const Rational& q : v) out.push_back(str(q));
  return out;
}

json matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (const RationalVector& row : m) out.push_back(strings(row));
  return out;
}

json class_json(const WronskianClass& c) {
  return {{"class", to_string(c.tag)},
          {"value", c.value ? json(str(*c.value)) : json(nullptr)},
          {"result", to_string(c.result)}};
}

json rational_class_json(const RationalFunction& w) {
  const WronskianTag tag = classify_rational(w);
  return {{"class", to_string(tag)},
          {"value", tag == WronskianTag::NonzeroConstant ? json(str(w.scaled_numerator().coeff(0))) : json(nullptr)},
          {"result", to_string(w)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_wronskian(const Options& opt, std::ostream& out, bool classify_only) {
  const Family family = parse_family(expressions(opt));
  json j;
  std::string text;
  if (family.is_laurent) {
    const WronskianClass c = classify(family.laurent);
    j = class_json(c);
    text = classify_only ? to_string(c) : to_string(c.result);
  } else {
    const RationalFunction w = wronskian_rational(family.rational);
    j = rational_class_json(w);
    text = classify_only ? j["class"].get<std::string>() : to_string(w);
    if (classify_only && classify_rational(w) == WronskianTag::NonzeroConstant)
      text += ": " + j["value"].get<std::string>();
    else if (classify_only && classify_rational(w) == WronskianTag::NonConstant)
      text += ": " + to_string(w);
  }
  if (opt.json)
    emit(out, j);
  else
    out << text << '\n';
  return kExitOk;
}

json outcome_json(const ReductionOutcome& r) {
  return {{"reduced", strings(r.reduced)}, {"degrees", r.degrees}, {"transform", matrix_json(r.transform)},
          {"sign", r.sign}};
}

void print_outcome(std::ostream& out, const char* title, const ReductionOutcome& r) {
  out << title << '\n';
  for (std::size_t i = 0; i < r.reduced.size(); ++i) out << "  q" << i + 1 << " = " << r.reduced[i] << '\n';
  out << "  degrees " << tuple_text(r.degrees) << '\n';
  out << "  transform " << to_string(r.transform) << '\n';
  out << "  sign " << r.sign << '\n';
}

enum class Pass { Max, Min, Both };

int cmd_reduce(const Options& opt, Pass pass, std::ostream& out) {
  const std::vector<LaurentPoly> fs = parse_laurent_family(opt, "reduce");
  json j = json::object();
  std::optional<ReductionOutcome> max_pass, min_pass;
  if (pass == Pass::Max) max_pass = reduce_distinct_max(fs);
  if (pass == Pass::Min) min_pass = reduce_distinct_min(fs);
  if (pass == Pass::Both) {
    BothReductions both = reduce_both(fs);
    max_pass = std::move(both.max_pass);
    min_pass = std::move(both.min_pass);
  }
  if (opt.json) {
    if (max_pass) j["max"] = outcome_json(*max_pass);
    if (min_pass) j["min"] = outcome_json(*min_pass);
    emit(out, j);
    return kExitOk;
  }
  if (max_pass) print_outcome(out, "max-degree pass", *max_pass);
  if (min_pass) print_outcome(out, "min-degree pass", *min_pass);
  return kExitOk;
}

int cmd_characterize(const Options& opt, std::ostream& out) {
  const std::vector<LaurentPoly> fs = parse_laurent_family(opt, "characterize");
  bool polynomial = true;
  for (const LaurentPoly& f : fs) polynomial = polynomial && f.is_polynomial();

  RationalMatrix a;
  Rational det_a;
  std::vector<Exponent> r;
  try {
    if (polynomial) {
      PolyCharacterization ch = characterize_poly(fs);
      a = std::move(ch.matrix_a);
      det_a = ch.det_a;
      for (std::size_t i = 0; i < fs.size(); ++i) r.push_back(static_cast<Exponent>(i));
    } else {
      LaurentCharacterization ch = characterize_laurent(fs);
      a = std::move(ch.matrix_a);
      det_a = ch.det_a;
      r = std::move(ch.r);
    }
  } catch (const NotConstantWronskian& e) {
    if (opt.json) {
      json j = class_json(e.found());
      j.update({{"constant", false}, {"A", nullptr}, {"r", nullptr}});
      emit(out, j);
    } else {
      out << to_string(e.found()) << '\n';
    }
    return kExitNegative;
  }

  const WronskianClass c = classify(fs);
  if (opt.json) {
    json j = class_json(c);
    j.update({{"constant", true}, {"A", matrix_json(a)}, {"det_A", str(det_a)}, {"r", r}});
    emit(out, j);
  } else {
    out << to_string(c) << '\n'
        << "A = " << to_string(a) << '\n'
        << "det A = " << det_a << '\n'
        << "r = " << tuple_text(r) << '\n';
  }
  return kExitOk;
}

std::string equation_text(const Hyperplane& h) {
  // alpha . x - c = 0
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& coeff, const std::string& symbol) {
    if (coeff.is_zero()) return;
    const bool negative = coeff.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    const Rational magnitude = coeff.abs();
    if (symbol.empty())
      os << magnitude;
    else if (magnitude == Rational(1))
      os << symbol;
    else
      os << magnitude << '*' << symbol;
    first = false;
  };
  for (std::size_t i = 0; i < h.alpha.size(); ++i) term(h.alpha[i], "x" + std::to_string(i + 1));
  term(-h.c, "");
  os << " = 0";
  return os.str();
}

json hyperplane_json(const Hyperplane& h) {
  return {{"alpha", strings(h.alpha)}, {"c", str(h.c)}, {"equation", equation_text(h)}};
}

int cmd_hyperplane(const Options& opt, bool verbose, std::ostream& out) {
  const Curve curve = parse_curve_arguments(opt);
  const std::vector<Hyperplane> basis = hyperplane_basis(curve);
  if (opt.json) {
    json j = {{"contained", !basis.empty()}};
    j["hyperplane"] = basis.empty() ? json(nullptr) : hyperplane_json(basis.front());
    if (verbose) {
      j["basis"] = json::array();
      for (const Hyperplane& h : basis) j["basis"].push_back(hyperplane_json(h));
    }
    emit(out, j);
  } else if (basis.empty()) {
    out << "not contained in a hyperplane\n";
  } else {
    for (std::size_t i = 0; i < (verbose ? basis.size() : 1); ++i)
      out << equation_text(basis[i]) << "  (alpha = " << tuple_text(basis[i].alpha) << ", c = " << basis[i].c
          << ")\n";
  }
  return basis.empty() ? kExitNegative : kExitOk;
}

int cmd_rnc(const Options& opt, std::ostream& out) {
  const Curve curve = parse_curve_arguments(opt);
  const std::optional<AffineWitness> w = is_affine_rnc(curve);
  if (opt.json) {
    json j = {{"rnc", w.has_value()}};
    j["M"] = w ? matrix_json(w->m) : json(nullptr);
    j["b"] = w ? strings(w->b) : json(nullptr);
    emit(out, j);
  } else if (w) {
    out << "M = " << to_string(w->m) << '\n' << "b = " << tuple_text(w->b) << '\n';
  } else {
    out << "not an affine image of the rational normal curve\n";
  }
  return w ? kExitOk : kExitNegative;
}

int cmd_invariant(const Options& opt, std::ostream& out) {
  const VanishingReport r = vanishing_invariant_report(parse_curve_arguments(opt));
  if (opt.json) {
    emit(out, {{"numerator", to_string(r.numerator)},
               {"is_constant", r.is_constant},
               {"rational_roots", strings(r.rational_roots)},
               {"real_root_count", r.real_root_count},
               {"nonreal_root_count", r.nonreal_root_count}});
  } else {
    out << "numerator " << r.numerator << '\n'
        << "constant " << (r.is_constant ? "true" : "false") << '\n'
        << "rational roots " << tuple_text(r.rational_roots) << '\n'
        << "real roots " << r.real_root_count << '\n'
        << "non-real roots " << r.nonreal_root_count << '\n';
  }
  return kExitOk;
}

int cmd_check2(const Options& opt, std::ostream& out) {
  const Family family = parse_family(expressions(opt));
  if (family.rational.size() != 2) throw UsageError("check2 takes exactly two functions");
  const N2Verdict v = check_n2_impossibility(family.rational[0], family.rational[1]);
  const N2Witness& w = v.witness;
  if (opt.json) {
    json predictions = json::array();
    for (const PoleOrderPrediction& p : w.predictions)
      predictions.push_back({{"pole", str(p.pole)},
                             {"family_order", p.family_order},
                             {"residual_order", p.residual_order},
                             {"predicted", p.predicted},
                             {"observed", p.observed}});
    json prepared = json::array();
    for (const RationalFunction& f : w.prepared) prepared.push_back(to_string(f));
    json j = rational_class_json(v.wronskian);
    j.update({{"is_constant", v.is_constant},
              {"shift", str(w.shift)},
              {"K", w.k},
              {"L1", w.l1},
              {"beta1", str(w.beta1)},
              {"f", to_string(w.f)},
              {"prepared", prepared},
              {"witness_orders", {w.witness_order_origin, w.witness_order_beta1}},
              {"observed_orders", {w.observed_order_origin, w.observed_order_beta1}},
              {"witness_orders_match", w.witness_orders_match},
              {"predictions", predictions}});
    emit(out, j);
  } else {
    out << "W = " << v.wronskian << '\n'
        << "class " << to_string(classify_rational(v.wronskian)) << '\n'
        << "shift " << w.shift << ", K = " << w.k << ", L1 = " << w.l1 << ", beta1 = " << w.beta1
        << ", f = " << w.f << '\n'
        << "orders at (0, beta1): witness (" << w.witness_order_origin << ", " << w.witness_order_beta1
        << "), observed (" << w.observed_order_origin << ", " << w.observed_order_beta1 << ")\n";
    for (const PoleOrderPrediction& p : w.predictions)
      out << "  pole " << p.pole << ": K_P = " << p.family_order << ", ord r = " << p.residual_order
          << ", predicted " << p.predicted << ", observed " << p.observed << '\n';
  }
  return v.is_constant ? kExitNegative : kExitOk;
}

struct SearchOptions {
  std::size_t n = 3;
  std::uint64_t seed = 0;
  std::string out_path;
  SearchConfig config;
};

json report_json(const SearchReport& r, const SearchConfig& config) {
  json counterexamples = json::array();
  for (const auto& family : r.counterexamples) {
    json members = json::array();
    for (const RationalFunction& f : family) members.push_back(to_string(f));
    counterexamples.push_back(members);
  }
  return {{"seed", r.seed},
          {"n", r.n},
          {"trials", r.trials},
          {"class_counts", r.class_counts},
          {"counterexamples", counterexamples},
          {"rejected_draws", r.rejected_draws},
          {"config",
           {{"degree_bound", config.degree_bound},
            {"pole_count_bound", config.pole_count_bound},
            {"coeff_bound", config.coeff_bound}}}};
}

int cmd_search(const SearchOptions& s, bool as_json, std::ostream& out) {
  const SearchReport report = conjecture_search(s.n, s.config, s.seed);
  const json j = report_json(report, s.config);
  if (!s.out_path.empty()) {
    std::ofstream file(s.out_path);
    if (!file) throw UsageError("cannot write " + s.out_path);
    file << j.dump(2) << '\n';
  }
  if (as_json) {
    emit(out, j);
  } else {
    out << "n " << report.n << ", trials " << report.trials << ", seed " << report.seed << '\n';
    for (const auto& [tag, count] : report.class_counts) out << "  " << tag << ' ' << count << '\n';
    out << "counterexamples " << report.counterexamples.size() << '\n';
  }
  return report.counterexamples.empty() ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Wronskians of polynomial, Laurent polynomial and rational function families.", "wronsk"};
  app.require_subcommand(1, 1);
  Options opt;
  auto add_inputs = [&opt](CLI::App* sub) {
    sub->add_option("exprs", opt.exprs, "expressions in t (put -- before one starting with '-')");
    sub->add_option("--from-json", opt.from_json, "read {\"functions\": [...]} from a file, '-' for stdin");
    sub->add_flag("--json", opt.json, "emit JSON");
  };

  CLI::App* wronskian_cmd = app.add_subcommand("wronskian", "print the Wronskian");
  add_inputs(wronskian_cmd);
  CLI::App* classify_cmd = app.add_subcommand("classify", "identically-zero, nonzero-constant or non-constant");
  add_inputs(classify_cmd);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "make maximum and/or minimum degrees distinct");
  add_inputs(reduce_cmd);
  bool want_min = false, want_max = false, want_both = false;
  CLI::Option* min_flag = reduce_cmd->add_flag("--min", want_min, "minimum-degree pass only");
  CLI::Option* max_flag = reduce_cmd->add_flag("--max", want_max, "maximum-degree pass only (default)");
  CLI::Option* both_flag = reduce_cmd->add_flag("--both", want_both, "maximum pass, then minimum pass on its output");
  min_flag->excludes(max_flag)->excludes(both_flag);
  max_flag->excludes(both_flag);

  CLI::App* characterize_cmd = app.add_subcommand("characterize", "witness A (and r) of a constant Wronskian");
  add_inputs(characterize_cmd);

  CLI::App* geometry_cmd = app.add_subcommand("geometry", "curve geometry");
  geometry_cmd->require_subcommand(1, 1);
  CLI::App* hyperplane_cmd = geometry_cmd->add_subcommand("hyperplane", "hyperplane containing the curve");
  add_inputs(hyperplane_cmd);
  bool verbose = false;
  hyperplane_cmd->add_flag("--verbose", verbose, "list a basis of all containing hyperplanes");
  CLI::App* rnc_cmd = geometry_cmd->add_subcommand("rnc", "affine image of the rational normal curve?");
  add_inputs(rnc_cmd);
  CLI::App* invariant_cmd = geometry_cmd->add_subcommand("invariant", "curvature/torsion numerator and its zeros");
  add_inputs(invariant_cmd);

  CLI::App* rational_cmd = app.add_subcommand("rational", "rational functions with several poles");
  rational_cmd->require_subcommand(1, 1);
  CLI::App* check2_cmd = rational_cmd->add_subcommand("check2", "n = 2 impossibility witness for a pair");
  add_inputs(check2_cmd);
  CLI::App* search_cmd = rational_cmd->add_subcommand("search", "seeded search for n >= 3 counterexamples");
  SearchOptions search;
  search_cmd->add_option("--n", search.n, "family size")->capture_default_str();
  search_cmd->add_option("--trials", search.config.trials, "number of families")->capture_default_str();
  search_cmd->add_option("--seed", search.seed, "64-bit seed")->capture_default_str();
  search_cmd->add_option("--degree-bound", search.config.degree_bound, "polynomial degree and pole order bound")
      ->capture_default_str();
  search_cmd->add_option("--poles", search.config.pole_count_bound, "largest number of distinct poles")
      ->capture_default_str();
  search_cmd->add_option("--coeff-bound", search.config.coeff_bound, "coefficient magnitude bound")
      ->capture_default_str();
  search_cmd->add_option("--threads", search.config.threads, "workers (default WRONSK_THREADS or all cores)");
  search_cmd->add_option("--out", search.out_path, "also write the JSON report here");
  search_cmd->add_flag("--json", opt.json, "emit JSON");

  std::vector<const char*> argv{"wronsk"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "wronsk: " << e.what() << "\nrun 'wronsk --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*wronskian_cmd) return cmd_wronskian(opt, out, false);
    if (*classify_cmd) return cmd_wronskian(opt, out, true);
    if (*reduce_cmd) return cmd_reduce(opt, want_min ? Pass::Min : want_both ? Pass::Both : Pass::Max, out);
    if (*characterize_cmd) return cmd_characterize(opt, out);
    if (*hyperplane_cmd) return cmd_hyperplane(opt, verbose, out);
    if (*rnc_cmd) return cmd_rnc(opt, out);
    if (*invariant_cmd) return cmd_invariant(opt, out);
    if (*check2_cmd) return cmd_check2(opt, out);
    if (*search_cmd) return cmd_search(search, opt.json, out);
  } catch (const UsageError& e) {
    err << "wronsk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "wronsk: " << e.diagnostic().to_string() << '\n';
    return kExitUsage;
  } catch (const DivisionByZero& e) {
    err << "wronsk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotPolynomial& e) {
    err << "wronsk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidCurve& e) {
    err << "wronsk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidConfig& e) {
    err << "wronsk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    // Linear dependence, a vanishing invariant, too few poles and the like.
    err << "wronsk: " << e.what() << '\n';
    return kExitNegative;
  } catch (const std::exception& e) {
    err << "wronsk: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "wronsk: no command\n";
  return kExitUsage;
}

}  // namespace wronsk::cli
