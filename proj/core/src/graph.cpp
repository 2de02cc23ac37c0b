#include "pwo/rdf/graph.hpp"

namespace pwo::rdf {

void PrefixMap::add(std::string prefix, Iri space) {
    for (auto& entry : entries_) {
        if (entry.first == prefix) {
            entry.second = std::move(space);
            return;
        }
    }
    entries_.emplace_back(std::move(prefix), std::move(space));
}

const Iri* PrefixMap::find(std::string_view prefix) const {
    for (const auto& entry : entries_) {
        if (entry.first == prefix) return &entry.second;
    }
    return nullptr;
}

Iri PrefixMap::expand(std::string_view prefix, std::string_view local) const {
    const Iri* space = find(prefix);
    if (!space) throw UnknownPrefix(std::string(prefix));
    return Iri(space->value() + std::string(local));
}

std::optional<std::string> PrefixMap::compact(const Iri& iri) const {
    const std::pair<std::string, Iri>* best = nullptr;
    for (const auto& entry : entries_) {
        const std::string& space = entry.second.value();
        if (iri.value().size() > space.size() && iri.value().compare(0, space.size(), space) == 0) {
            if (!best || space.size() > best->second.value().size()) best = &entry;
        }
    }
    if (!best) return std::nullopt;
    return best->first + ":" + iri.value().substr(best->second.value().size());
}

bool Graph::insert(Triple t) {
    if (contains(t)) return false;
    std::size_t h = hash_value(t);
    index_.emplace(h, triples_.size());
    triples_.push_back(std::move(t));
    return true;
}

bool Graph::contains(const Triple& t) const {
    auto [lo, hi] = index_.equal_range(hash_value(t));
    for (auto it = lo; it != hi; ++it) {
        if (triples_[it->second] == t) return true;
    }
    return false;
}

std::vector<Triple> Graph::match(const Pattern& subject, const Pattern& predicate,
                                 const Pattern& object) const {
    std::vector<Triple> out;
    for (const Triple& t : triples_) {
        if (subject && !match_equal(*subject, t.subject())) continue;
        if (predicate && !match_equal(*predicate, Term(t.predicate()))) continue;
        if (object && !match_equal(*object, t.object())) continue;
        out.push_back(t);
    }
    return out;
}

} // namespace pwo::rdf
