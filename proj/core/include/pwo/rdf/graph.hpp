#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pwo/rdf/term.hpp"

namespace pwo::rdf {

/// Prefix-to-namespace table. Prefix names are unique; entries keep their
/// registration order.
class PrefixMap {
public:
    /// Adds or replaces a binding. A replaced prefix keeps its position.
    void add(std::string prefix, Iri space);

    const Iri* find(std::string_view prefix) const;

    /// Expands prefix + local name; throws UnknownPrefix when unregistered.
    Iri expand(std::string_view prefix, std::string_view local) const;

    /// Compacts an IRI to "prefix:local" against the longest registered
    /// namespace (first registered wins ties). Empty result when none match.
    std::optional<std::string> compact(const Iri& iri) const;

    const std::vector<std::pair<std::string, Iri>>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

private:
    std::vector<std::pair<std::string, Iri>> entries_;
};

/// Duplicate-free triple collection with stable insertion order.
class Graph {
public:
    /// Inserts `t` unless already present. Returns true when the graph grew.
    bool insert(Triple t);

    bool contains(const Triple& t) const;

    const std::vector<Triple>& triples() const noexcept { return triples_; }
    std::size_t size() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }

    /// A match position: a concrete term or the wildcard (nullopt).
    using Pattern = std::optional<Term>;

    /// All triples agreeing with every non-wildcard position, in insertion
    /// order. Literal positions compare via match_equal.
    std::vector<Triple> match(const Pattern& subject, const Pattern& predicate,
                              const Pattern& object) const;

    PrefixMap& prefixes() noexcept { return prefixes_; }
    const PrefixMap& prefixes() const noexcept { return prefixes_; }

private:
    std::vector<Triple> triples_;
    std::unordered_multimap<std::size_t, std::size_t> index_;
    PrefixMap prefixes_;
};

} // namespace pwo::rdf
