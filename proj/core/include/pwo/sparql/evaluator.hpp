#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwo/sparql/ast.hpp"

namespace pwo::sparql {

// A solution: partial mapping from variable name to term.
using Binding = std::map<std::string, rdf::Term>;

struct SolutionTable {
    std::vector<std::string> header;  // SELECT order
    // One row per solution, cells aligned with header; unbound → nullopt.
    std::vector<std::vector<std::optional<rdf::Term>>> rows;
};

// Evaluates a pattern group against `data`, extending `seed`. Deterministic:
// BGP patterns match left to right scanning graph insertion order; a union
// concatenates left-branch solutions then right-branch solutions; a sequence
// folds its parts conjunctively in order. Extensions that bind exactly the
// same terms (reached through distinct but match-equal stored triples)
// collapse into one solution.
std::vector<Binding> evaluate_group(const PatternGroup& group, const rdf::Graph& data,
                                    const Binding& seed);

// Full query evaluation: evaluate the WHERE tree from an empty seed and
// project onto the query header. Row order is preserved.
SolutionTable evaluate(const QueryAst& q, const rdf::Graph& data);

} // namespace pwo::sparql
