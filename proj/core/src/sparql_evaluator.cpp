#include "pwo/sparql/evaluator.hpp"

#include <set>

namespace pwo::sparql {

namespace {

using rdf::Term;
using rdf::Triple;

// Checks one pattern position against a concrete term, extending `b` when the
// position is an unbound variable. All comparisons are match_equal, so plain
// and string-typed literals interchange.
bool match_position(const PatternTerm& pattern, const Term& actual, Binding& b) {
    if (const auto* term = std::get_if<Term>(&pattern))
        return rdf::match_equal(*term, actual);
    const auto& var = std::get<Variable>(pattern);
    auto it = b.find(var.name);
    if (it != b.end()) return rdf::match_equal(it->second, actual);
    b.emplace(var.name, actual);
    return true;
}

std::vector<Binding> evaluate_bgp(const std::vector<TriplePattern>& patterns,
                                  const rdf::Graph& data, const Binding& seed) {
    std::vector<Binding> rows{seed};
    for (const TriplePattern& pattern : patterns) {
        std::vector<Binding> next;
        for (const Binding& row : rows) {
            std::set<Binding> seen;  // collapse extensions identical term-for-term
            for (const Triple& t : data.triples()) {
                Binding extended = row;
                if (!match_position(pattern.subject, t.subject(), extended)) continue;
                if (!match_position(pattern.predicate, Term(t.predicate()), extended)) continue;
                if (!match_position(pattern.object, t.object(), extended)) continue;
                if (seen.insert(extended).second) next.push_back(std::move(extended));
            }
        }
        rows = std::move(next);
    }
    return rows;
}

} // namespace

std::vector<Binding> evaluate_group(const PatternGroup& group, const rdf::Graph& data,
                                    const Binding& seed) {
    if (group.is_bgp()) return evaluate_bgp(group.bgp(), data, seed);
    if (group.is_union()) {
        std::vector<Binding> rows = evaluate_group(*group.union_node().left, data, seed);
        std::vector<Binding> right = evaluate_group(*group.union_node().right, data, seed);
        rows.insert(rows.end(), std::make_move_iterator(right.begin()),
                    std::make_move_iterator(right.end()));
        return rows;
    }
    std::vector<Binding> rows{seed};
    for (const PatternGroup& part : group.sequence()) {
        std::vector<Binding> next;
        for (const Binding& row : rows) {
            std::vector<Binding> extended = evaluate_group(part, data, row);
            next.insert(next.end(), std::make_move_iterator(extended.begin()),
                        std::make_move_iterator(extended.end()));
        }
        rows = std::move(next);
    }
    return rows;
}

SolutionTable evaluate(const QueryAst& q, const rdf::Graph& data) {
    std::vector<Binding> solutions = evaluate_group(q.where, data, Binding{});
    SolutionTable table;
    table.header = header_of(q);
    table.rows.reserve(solutions.size());
    for (const Binding& b : solutions) {
        std::vector<std::optional<Term>> row;
        row.reserve(table.header.size());
        for (const std::string& var : table.header) {
            auto it = b.find(var);
            if (it == b.end())
                row.push_back(std::nullopt);
            else
                row.push_back(it->second);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace pwo::sparql
