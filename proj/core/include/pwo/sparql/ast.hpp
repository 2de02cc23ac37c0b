#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pwo/rdf/graph.hpp"

namespace pwo::sparql {

struct Variable {
    std::string name;  // without the leading '?'

    bool operator==(const Variable&) const = default;
    auto operator<=>(const Variable&) const = default;
};

// A pattern position: a variable or a concrete term.
using PatternTerm = std::variant<Variable, rdf::Term>;

struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;  // variable or IRI term
    PatternTerm object;
};

struct PatternGroup;

struct UnionGroup {
    std::unique_ptr<PatternGroup> left;
    std::unique_ptr<PatternGroup> right;
};

// Exactly one of: a basic graph pattern, a union, or an ordered conjunctive
// sequence of subgroups. An empty BGP matches once with no bindings.
struct PatternGroup {
    std::variant<std::vector<TriplePattern>, UnionGroup, std::vector<PatternGroup>> node;

    bool is_bgp() const { return node.index() == 0; }
    bool is_union() const { return node.index() == 1; }
    bool is_sequence() const { return node.index() == 2; }

    const std::vector<TriplePattern>& bgp() const { return std::get<0>(node); }
    const UnionGroup& union_node() const { return std::get<1>(node); }
    const std::vector<PatternGroup>& sequence() const { return std::get<2>(node); }
};

struct QueryAst {
    rdf::PrefixMap prefixes;
    bool select_all = false;
    std::vector<Variable> projection;  // empty when select_all
    PatternGroup where;
};

// Projected header for a query: SELECT order, or for SELECT * every variable
// in first-mention order over the pattern tree.
std::vector<std::string> header_of(const QueryAst& q);

} // namespace pwo::sparql
