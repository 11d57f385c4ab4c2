#include "cli.hpp"

#include "CLI11.hpp"
#include "darmonlab/json_io.hpp"
#include "darmonlab/local_symbols.hpp"
#include "darmonlab/verify.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace darmonlab::cli {

namespace {

// Splits on commas outside brackets, so "[1,2],3" gives two elements.
std::vector<std::string> split_elements(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void render_human(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        render_human(v, out, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        render_human(v, out, indent + 2);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

Json suite_json(const SuiteReport& r) {
  return Json{{"suite", r.name},         {"checked", r.checked}, {"passed", r.passed},
              {"inconclusive", r.inconclusive}, {"ok", r.ok()},  {"failures", r.failures},
              {"notes", r.notes}};
}

struct Args {
  std::string a, b, r, place, set, which = "main", exportfmt = "none", mode = "general",
                           suite = "all", weight = "1", params;
  bool all = false, upper = false, witness = false;
  std::vector<std::string> elements, places;
  std::vector<unsigned long> ns{1, 2, 10, 100};
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  Args in;
  CLI::App app{"Hilbert symbols, quaternion ramification sets, definable sets and formula budgets"};
  app.name("darmonlab");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", cfg.field, "Q, Q(sqrt,d) or poly:[c0,...,1]")->capture_default_str();
  app.add_option("--output", cfg.output, "json or human")
      ->check(CLI::IsMember({"json", "human"}))
      ->capture_default_str();
  app.add_option("--height", cfg.height, "search height bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed (DARMONLAB_SEED overrides)")->capture_default_str();
  app.add_option("--escalation", cfg.escalation, "precision escalation rounds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "quadratic Hilbert symbols (a,b)_v");
  hilbert_cmd->add_option("a", in.a)->required();
  hilbert_cmd->add_option("b", in.b)->required();
  auto* place_opt = hilbert_cmd->add_option("--place", in.place, "single place");
  hilbert_cmd->add_flag("--all", in.all, "every place where the symbol can be -1")
      ->excludes(place_opt);

  auto* delta_cmd = app.add_subcommand("delta", "ramification set of (a,b)");
  delta_cmd->add_option("a", in.a)->required();
  delta_cmd->add_option("b", in.b)->required();
  delta_cmd->add_flag("--upper", in.upper, "also the finite part with the 4-adic box");

  auto* member_cmd = app.add_subcommand("member", "membership in a definable set");
  member_cmd->add_option("--set", in.set)
      ->required()
      ->check(CLI::IsMember({"T", "J", "J4", "J42", "Ksf", "sum4sq"}));
  member_cmd->add_option("elements", in.elements, "parameters followed by r")->required();
  member_cmd->add_flag("--witness", in.witness, "search for a witness up to --height");

  auto* prescribe_cmd = app.add_subcommand("prescribe", "realize a place set as Delta_{a,b}");
  prescribe_cmd->add_option("--places", in.places)->required();

  auto* darmon_cmd = app.add_subcommand("darmon", "membership in D_{K,S,n}");
  darmon_cmd->add_option("--n", in.weight, "weight: positive integer or inf")->required();
  auto* params_opt = darmon_cmd->add_option("--params", in.params, "a,b,c,d");
  darmon_cmd->add_option("--places", in.places)->excludes(params_opt);
  darmon_cmd->add_option("r", in.r)->required();

  auto* formula_cmd = app.add_subcommand("formula", "assemble a defining formula");
  formula_cmd->add_option("--which", in.which)->check(CLI::IsMember({"main", "empty"}));
  unsigned long formula_n = 1;
  formula_cmd->add_option("--n", formula_n)->required()->check(CLI::PositiveNumber);
  formula_cmd->add_option("--export", in.exportfmt)->check(CLI::IsMember({"none", "sexp", "json"}));
  formula_cmd->add_option("--mode", in.mode)->check(CLI::IsMember({"general", "real"}));

  auto* ledger_cmd = app.add_subcommand("ledger", "claimed-versus-computed budget rows");
  ledger_cmd->add_option("--n", in.ns, "weights for the assembled formulas");

  auto* verify_cmd = app.add_subcommand("verify", "randomized and exhaustive self-checks");
  verify_cmd->add_option("--suite", in.suite)
      ->check(CLI::IsMember({"reciprocity", "darmon-oracle", "budget", "rewrites", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }
  if (const char* env = std::getenv("DARMONLAB_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: DARMONLAB_SEED must be an unsigned integer\n";
      return 1;
    }
  }

  try {
    NumberField K = NumberField::parse(cfg.field);
    auto elem = [&](const std::string& s) { return parse_element(K, s); };
    Json result;
    int code = 0;

    if (hilbert_cmd->parsed()) {
      FieldElement a = elem(in.a), b = elem(in.b);
      if (!in.place.empty()) {
        Place v = parse_place(K, in.place);
        result = Json{{"field", K.spec()}, {"a", element_text(a)}, {"b", element_text(b)},
                      {"place", place_label(v, K)}, {"symbol", hilbert(a, b, v)}};
      } else {
        result = symbol_table_json(a, b);
      }
    } else if (delta_cmd->parsed()) {
      FieldElement a = elem(in.a), b = elem(in.b);
      result = Json{{"field", K.spec()}, {"a", element_text(a)}, {"b", element_text(b)},
                    {"delta", to_json(delta(a, b), K)}};
      if (in.upper) result["delta_upper"] = to_json(delta_upper(a, b), K);
    } else if (member_cmd->parsed()) {
      const std::map<std::string, std::size_t> arity{{"T", 3},   {"J", 3},   {"J4", 5},
                                                     {"J42", 5}, {"Ksf", 3}, {"sum4sq", 1}};
      if (in.elements.size() != arity.at(in.set))
        throw std::invalid_argument("--set " + in.set + " takes " +
                                    std::to_string(arity.at(in.set)) + " elements");
      std::vector<FieldElement> e;
      for (const auto& s : in.elements) e.push_back(elem(s));
      const FieldElement& r = e.back();
      bool member = false;
      if (in.set == "T") member = in_T(e[0], e[1], r);
      if (in.set == "J") member = in_J(e[0], e[1], r);
      if (in.set == "Ksf") member = in_Ksf(e[0], e[1], r);
      if (in.set == "J4") member = in_J4({e[0], e[1], e[2], e[3]}, r);
      if (in.set == "J42") member = in_J42({e[0], e[1], e[2], e[3]}, r);
      if (in.set == "sum4sq") member = is_sum_of_four_squares(r);
      result = Json{{"field", K.spec()}, {"set", in.set}, {"r", element_text(r)},
                    {"member", member}};
      if (in.witness && member && in.set == "sum4sq") {
        auto w = four_square_witness(r, cfg.height);
        if (!w) throw SearchExhausted("no four-square witness found", cfg.height);
        Json arr = Json::array();
        for (const auto& x : *w) arr.push_back(element_text(x));
        result["witness"] = arr;
      } else if (in.witness && in.set == "T") {
        OracleResult o = in_T_oracle(e[0], e[1], r, cfg.height);
        if (o.status == Tristate::Unknown)
          throw SearchExhausted("no T witness found", cfg.height);
        result["witness"] = to_json(o)["witness"];
      }
    } else if (prescribe_cmd->parsed()) {
      PlaceSet S;
      for (const auto& p : in.places) S.push_back(parse_place(K, p));
      result = to_json(realize_with_real(K, S), K);
      result["field"] = K.spec();
    } else if (darmon_cmd->parsed()) {
      Weight n = Weight::parse(in.weight);
      PlaceSet S;
      if (!in.params.empty()) {
        auto parts = split_elements(in.params);
        if (parts.size() != 4) throw std::invalid_argument("--params needs a,b,c,d");
        S = darmon_places(elem(parts[0]), elem(parts[1]), elem(parts[2]), elem(parts[3]));
      } else {
        for (const auto& p : in.places) S.push_back(parse_place(K, p));
      }
      FieldElement r = elem(in.r);
      result = Json{{"field", K.spec()}, {"n", n.to_string()},  {"places", to_json(S, K)},
                    {"r", element_text(r)}, {"member", in_darmon(r, S, n)}};
    } else if (formula_cmd->parsed()) {
      CombineMode mode = in.mode == "real" ? CombineMode::Real : CombineMode::General;
      if (mode == CombineMode::Real && K.real_place_count() == 0)
        throw std::invalid_argument("real mode needs a field with a real place");
      FormulaBuilder fb(K, mode);
      Formula f = in.which == "main" ? assemble_main(fb, formula_n) : assemble_empty(fb, formula_n);
      if (in.exportfmt == "sexp") {
        out << formula_sexpr(f) << "\n";
        return 0;
      }
      Budget b = in.which == "main" ? main_budget(K, formula_n) : empty_budget(K, formula_n);
      result = Json{{"field", K.spec()}, {"which", in.which}, {"n", formula_n},
                    {"mode", to_string(mode)}, {"budget", to_json(b)},
                    {"free_variables", Json::array()}};
      for (const auto& v : free_variables(f)) result["free_variables"].push_back(v.name);
      if (in.exportfmt == "json") result["formula"] = formula_json(f);
    } else if (ledger_cmd->parsed()) {
      result = to_json(budget_ledger(K, in.ns));
      result["field"] = K.spec();
    } else if (verify_cmd->parsed()) {
      std::vector<SuiteReport> reports;
      bool all = in.suite == "all";
      if (all || in.suite == "reciprocity") reports.push_back(verify_reciprocity(cfg.seed));
      if (all || in.suite == "darmon-oracle") reports.push_back(verify_darmon_oracle());
      if (all || in.suite == "budget") reports.push_back(verify_budget());
      if (all || in.suite == "rewrites") reports.push_back(verify_rewrites(cfg.seed));
      bool ok = true;
      result = Json{{"seed", cfg.seed}, {"suites", Json::array()}};
      for (const auto& r : reports) {
        ok = ok && r.ok();
        result["suites"].push_back(suite_json(r));
      }
      result["ok"] = ok;
      code = ok ? 0 : 1;
    }

    if (cfg.output == "json") out << result.dump(2) << "\n";
    else render_human(result, out, 0);
    return code;
  } catch (const SearchExhausted& e) {
    err << "search exhausted (bound " << e.bound() << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace darmonlab::cli
