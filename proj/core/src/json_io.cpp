#include "darmonlab/json_io.hpp"

#include "darmonlab/local_symbols.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace darmonlab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::size_t parse_index(const std::string& s, std::string_view text) {
  if (!all_digits(s)) throw std::invalid_argument("bad place: " + std::string(text));
  return std::stoul(s);
}

}  // namespace

std::string place_label(const Place& v, const NumberField& K) {
  if (K.degree() == 1) {
    if (v.is_finite()) return std::to_string(v.prime.p);
    if (v.is_real()) return "inf";
  }
  return v.to_string();
}

Place parse_place(const NumberField& K, std::string_view text) {
  std::string t = trim(text);
  std::string lower;
  for (char c : t) lower += char(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "inf" || lower == "oo" || lower == "infinity" || t == "∞") {
    if (K.real_place_count() != 1 || K.complex_place_count() != 0)
      throw std::invalid_argument("'" + t + "' needs a field with a single infinite place");
    return Place::real(0);
  }
  for (std::string kind : {"real", "complex"}) {
    if (lower.rfind(kind, 0) != 0) continue;
    std::string rest = lower.substr(kind.size());
    if (!rest.empty() && (rest.front() == '[' || rest.front() == ':')) rest.erase(0, 1);
    if (!rest.empty() && rest.back() == ']') rest.pop_back();
    std::size_t i = parse_index(rest, text);
    std::size_t count = kind == "real" ? K.real_place_count() : K.complex_place_count();
    if (i >= count) throw std::invalid_argument("no such place: " + t);
    return kind == "real" ? Place::real(i) : Place::complex(i);
  }
  if (!t.empty() && t.front() == '(') {
    std::string want = strip_spaces(t);
    std::size_t comma = want.find(',');
    std::string p = want.substr(1, comma == std::string::npos ? 0 : comma - 1);
    if (!all_digits(p)) throw std::invalid_argument("bad place: " + t);
    for (const auto& P : K.primes_above(Integer(p)))
      if (strip_spaces(P.to_string()) == want) return Place::finite(P);
    throw std::invalid_argument("no prime ideal matches " + t);
  }
  std::size_t colon = t.find(':');
  std::string p = t.substr(0, colon);
  if (!all_digits(p)) throw std::invalid_argument("bad place: " + t);
  auto primes = K.primes_above(Integer(p));
  if (primes.empty()) throw std::invalid_argument(p + " is not a prime");
  if (colon == std::string::npos) {
    if (primes.size() != 1)
      throw std::invalid_argument(p + " splits in K; write " + p + ":i to pick a prime");
    return Place::finite(primes[0]);
  }
  std::size_t i = parse_index(t.substr(colon + 1), text);
  if (i >= primes.size()) throw std::invalid_argument("no such place: " + t);
  return Place::finite(primes[i]);
}

std::string element_text(const FieldElement& x) {
  if (x.field().degree() == 1) return x.coords()[0].get_str();
  std::string out = "[";
  for (std::size_t i = 0; i < x.coords().size(); ++i)
    out += (i ? "," : "") + x.coords()[i].get_str();
  return out + "]";
}

Json to_json(const Place& v, const NumberField& K) {
  Json j;
  j["label"] = place_label(v, K);
  switch (v.kind) {
    case Place::Kind::Finite:
      j["kind"] = "finite";
      j["p"] = v.prime.p;
      j["ideal"] = v.prime.to_string();
      j["e"] = v.prime.ramification;
      j["f"] = v.prime.residue_degree;
      break;
    case Place::Kind::Real:
      j["kind"] = "real";
      j["index"] = v.index;
      break;
    case Place::Kind::Complex:
      j["kind"] = "complex";
      j["index"] = v.index;
      break;
  }
  return j;
}

Json to_json(const PlaceSet& S, const NumberField& K) {
  Json arr = Json::array();
  for (const auto& v : S) arr.push_back(to_json(v, K));
  return arr;
}

Json symbol_table_json(const FieldElement& a, const FieldElement& b) {
  const NumberField& K = a.field();
  Json symbols = Json::object();
  for (const auto& [v, s] : symbol_table(a, b)) symbols[place_label(v, K)] = s;
  return Json{{"field", K.spec()}, {"a", element_text(a)}, {"b", element_text(b)},
              {"symbols", symbols}};
}

Json to_json(Tristate t) { return to_string(t); }

Json to_json(const OracleResult& r) {
  Json w = Json::array();
  for (const auto& x : r.witness) w.push_back(element_text(x));
  return Json{{"status", to_string(r.status)}, {"witness", w}};
}

Json to_json(const PrescriptionResult& r, const NumberField& K) {
  return Json{{"a", element_text(r.a)},
              {"b", element_text(r.b)},
              {"delta", to_json(r.realized_delta, K)},
              {"delta_upper", to_json(r.realized_delta_upper, K)},
              {"search",
               {{"attempts", r.log.attempts},
                {"height_bound", r.log.height_bound},
                {"progression_bound", r.log.progression_bound}}}};
}

namespace {

Json shape_json(const QuantifierShape& s) {
  Json arr = Json::array();
  for (const auto& [k, c] : s) arr.push_back({{"quantifier", k == 'A' ? "forall" : "exists"},
                                              {"count", c}});
  return arr;
}

template <class T>
Json opt(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json to_json(const Budget& b) {
  return Json{{"name", b.name},
              {"shape", to_string(b.shape)},
              {"shape_blocks", shape_json(b.shape)},
              {"degree", b.degree},
              {"real_degree", opt(b.real_degree)},
              {"claimed_shape", b.claimed_shape.empty() ? Json(nullptr)
                                                        : Json(to_string(b.claimed_shape))},
              {"claimed_degree", opt(b.claimed_degree)},
              {"claimed_real_degree", opt(b.claimed_real_degree)},
              {"imported", b.imported},
              {"matches", b.matches()}};
}

Json to_json(const LedgerEntry& e) {
  return Json{{"label", e.label},     {"expression", e.expression}, {"computed", e.computed},
              {"claimed", e.claimed}, {"status", e.status},         {"note", e.note}};
}

Json to_json(const std::vector<LedgerEntry>& ledger) {
  Json rows = Json::array();
  std::map<std::string, long> counts;
  for (const auto& e : ledger) {
    rows.push_back(to_json(e));
    ++counts[e.status];
  }
  Json summary = Json::object();
  for (const auto& [k, c] : counts) summary[k] = c;
  return Json{{"rows", rows}, {"summary", summary}};
}

namespace {

using FKind = FormulaNode::Kind;
using Op = Instruction::Op;

const char* op_name(Op op) {
  switch (op) {
    case Op::Const: return "const";
    case Op::Var: return "var";
    case Op::Add: return "add";
    case Op::Mul: return "mul";
    case Op::Pow: return "pow";
  }
  return "";
}

std::map<std::uint32_t, std::string> variable_names(const Polynomial& p) {
  std::map<std::uint32_t, std::string> names;
  for (const auto& v : p.variables()) names[v.id] = v.name;
  return names;
}

std::optional<SparsePolynomial> try_expand(const Polynomial& p, std::size_t max_terms) {
  try {
    return p.expand({}, max_terms);
  } catch (const std::length_error&) {
    return std::nullopt;
  }
}

Json poly_json(const Polynomial& p, std::size_t max_terms) {
  auto names = variable_names(p);
  if (auto sp = try_expand(p, max_terms)) {
    Json terms = Json::array();
    for (const auto& [m, c] : *sp) {
      Json mono = Json::array();
      for (const auto& [id, e] : m) mono.push_back(Json::array({names.at(id), e}));
      terms.push_back({{"coeff", c.get_str()}, {"monomial", mono}});
    }
    return Json{{"format", "terms"}, {"degree", total_degree(*sp)}, {"terms", terms}};
  }
  Json steps = Json::array();
  for (const auto& ins : p.program()) {
    Json s{{"op", op_name(ins.op)}};
    switch (ins.op) {
      case Op::Const: s["value"] = ins.value.get_str(); break;
      case Op::Var: s["var"] = ins.var.name; break;
      case Op::Add:
      case Op::Mul: s["args"] = Json::array({ins.lhs, ins.rhs}); break;
      case Op::Pow: s["args"] = Json::array({ins.lhs}); s["exponent"] = ins.exponent; break;
    }
    steps.push_back(std::move(s));
  }
  return Json{{"format", "program"}, {"degree_bound", p.degree()}, {"steps", steps}};
}

std::string program_sexpr(const Polynomial& p) {
  std::string out = "(program";
  auto prog = p.program();
  for (std::size_t i = 0; i < prog.size(); ++i) {
    const auto& ins = prog[i];
    out += " (" + std::to_string(i) + " (" + op_name(ins.op);
    switch (ins.op) {
      case Op::Const: out += " " + ins.value.get_str(); break;
      case Op::Var: out += " " + ins.var.name; break;
      case Op::Add:
      case Op::Mul: out += " " + std::to_string(ins.lhs) + " " + std::to_string(ins.rhs); break;
      case Op::Pow: out += " " + std::to_string(ins.lhs) + " " + std::to_string(ins.exponent); break;
    }
    out += "))";
  }
  return out + ")";
}

}  // namespace

Json formula_json(const Formula& f, std::size_t max_terms) {
  switch (f->kind) {
    case FKind::Atom:
      return Json{{"type", f->rel == Relation::Eq ? "eq" : "neq"},
                  {"poly", poly_json(f->poly, max_terms)}};
    case FKind::Not:
      return Json{{"type", "not"}, {"body", formula_json(f->children[0], max_terms)}};
    case FKind::And:
    case FKind::Or: {
      Json parts = Json::array();
      for (const auto& c : f->children) parts.push_back(formula_json(c, max_terms));
      return Json{{"type", f->kind == FKind::And ? "and" : "or"}, {"parts", parts}};
    }
    case FKind::Forall:
    case FKind::Exists: {
      Json vars = Json::array();
      for (const auto& v : f->vars) vars.push_back(v.name);
      return Json{{"type", f->kind == FKind::Forall ? "forall" : "exists"},
                  {"vars", vars},
                  {"body", formula_json(f->children[0], max_terms)}};
    }
  }
  throw std::logic_error("unreachable");
}

std::string formula_sexpr(const Formula& f, std::size_t max_terms) {
  switch (f->kind) {
    case FKind::Atom: {
      std::string rel = f->rel == Relation::Eq ? "(eq " : "(neq ";
      if (auto sp = try_expand(f->poly, max_terms))
        return rel + to_sexpr(*sp, variable_names(f->poly)) + " 0)";
      return rel + program_sexpr(f->poly) + " 0)";
    }
    case FKind::Not:
      return "(not " + formula_sexpr(f->children[0], max_terms) + ")";
    case FKind::And:
    case FKind::Or: {
      std::string out = f->kind == FKind::And ? "(and" : "(or";
      for (const auto& c : f->children) out += " " + formula_sexpr(c, max_terms);
      return out + ")";
    }
    case FKind::Forall:
    case FKind::Exists: {
      std::string out = f->kind == FKind::Forall ? "(forall (" : "(exists (";
      for (std::size_t i = 0; i < f->vars.size(); ++i) out += (i ? " " : "") + f->vars[i].name;
      return out + ") " + formula_sexpr(f->children[0], max_terms) + ")";
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace darmonlab
