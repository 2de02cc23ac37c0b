#include "pwo/federation/federation.hpp"

#include <future>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pwo/errors.hpp"

namespace pwo::federation {

namespace {

rdf::Term rename_blank(const rdf::Term& term, const std::string& standoff) {
    if (!term.is_blank()) return term;
    return rdf::BlankNode{standoff + term.blank().label()};
}

void merge_source(rdf::Graph& merged, const LoadedSource& source) {
    std::string standoff = "s" + std::to_string(source.id) + "_";
    for (const auto& t : source.graph.triples()) {
        merged.insert({rename_blank(t.subject(), standoff), t.predicate(),
                       rename_blank(t.object(), standoff)});
    }
    for (const auto& [prefix, space] : source.graph.prefixes().entries()) {
        if (merged.prefixes().find(prefix) == nullptr) merged.prefixes().add(prefix, space);
    }
}

} // namespace

LoadResult load_sources(const std::vector<SourceSpec>& specs, const LoadOptions& options) {
    if (specs.empty()) throw std::invalid_argument("no sources given");
    std::set<std::string> locations;
    for (const auto& spec : specs) {
        if (!locations.insert(spec.location).second) {
            throw std::invalid_argument("duplicate source location: " + spec.location);
        }
    }

    std::vector<std::future<std::string>> bodies;
    bodies.reserve(specs.size());
    for (const auto& spec : specs) {
        bodies.push_back(std::async(std::launch::async, [&spec, &options] {
            return fetch(spec, options.timeout);
        }));
    }

    LoadResult out;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& spec = specs[i];
        try {
            std::string body = bodies[i].get();
            auto parsed = rdfxml::parse_rdfxml(body, effective_base(spec));
            for (const auto& warning : parsed.diagnostics.warnings) {
                out.diagnostics.warnings.push_back(
                    {spec.id, "line " + std::to_string(warning.line) + ": " + warning.message});
            }
            out.dataset.per_source.push_back(
                {spec.id, spec.location, effective_base(spec), std::move(parsed.graph)});
            out.dataset.order.push_back(spec.id);
        } catch (const std::exception& e) {
            if (!options.partial) throw SourceLoadError(spec.id, spec.location, e.what());
            out.diagnostics.warnings.push_back({spec.id, std::string("skipped: ") + e.what()});
        }
    }

    for (const auto& source : out.dataset.per_source) {
        merge_source(out.dataset.merged, source);
    }
    return out;
}

} // namespace pwo::federation
