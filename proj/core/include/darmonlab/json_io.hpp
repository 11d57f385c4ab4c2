#pragma once
// JSON and text serialization of places, symbol tables, search results, budgets and formulas.
#include "darmonlab/darmon.hpp"
#include "darmonlab/definable_sets.hpp"
#include "darmonlab/formula_compiler.hpp"
#include "darmonlab/prescribe.hpp"
#include "json.hpp"

#include <string>
#include <string_view>

namespace darmonlab {

using Json = nlohmann::ordered_json;

/// "2" and "inf" over Q; "(p, g)", "real[i]" and "complex[i]" otherwise.
std::string place_label(const Place& v, const NumberField& K);
/// Accepts every label produced by place_label, plus "p" when a single prime lies above p,
/// "p:i" for the i-th prime above p, and "inf"/"oo" for the unique real place.
Place parse_place(const NumberField& K, std::string_view text);

/// "p/q" in degree 1 and "[c0,c1,...]" otherwise; parse_element reads both.
std::string element_text(const FieldElement& x);

Json to_json(const Place& v, const NumberField& K);
Json to_json(const PlaceSet& S, const NumberField& K);
Json symbol_table_json(const FieldElement& a, const FieldElement& b);
Json to_json(Tristate t);
Json to_json(const OracleResult& r);
Json to_json(const PrescriptionResult& r, const NumberField& K);
Json to_json(const Budget& b);
Json to_json(const LedgerEntry& e);
Json to_json(const std::vector<LedgerEntry>& ledger);

/// Polynomials are expanded when they have at most max_terms terms and are otherwise written
/// as a straight-line program.
Json formula_json(const Formula& f, std::size_t max_terms = 20000);
/// Prefix text form; oversized atoms use (program (step ...) ...) in place of (poly ...).
std::string formula_sexpr(const Formula& f, std::size_t max_terms = 20000);

}  // namespace darmonlab
