#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pwo/sparql/evaluator.hpp"

namespace pwo::sparql {

enum class ResultFormat { Text, Csv, Tsv, Json, Xml };

// Case-insensitive name lookup: text, csv, tsv, json, xml.
std::optional<ResultFormat> parse_format(std::string_view name);

// Serializes a solution table. Rows always appear in table order.
//   text — aligned columns; IRIs shown by local name, literals quoted
//   csv  — bare-name header; IRIs in full, literals as lexical form,
//          RFC 4180 quoting; unbound cells empty
//   tsv  — bare-name header; terms in N-Triples syntax; unbound cells empty
//   json — {head: {vars}, results: {bindings}} with typed term objects
//   xml  — the conventional sparql-results element tree
std::string render(const SolutionTable& table, ResultFormat format);

} // namespace pwo::sparql
