#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwo/rdf/graph.hpp"
#include "pwo/rdfxml/parser.hpp"

namespace pwo::federation {

struct SourceSpec {
    int id = 0;                             // ordinal position in the run, from 1
    std::string location;                   // local file path or http(s) URL
    std::optional<rdf::Iri> declared_base;  // parse base; defaults from location
};

// The base a source is parsed with: declared_base when given, else the
// location itself as an IRI, else file:// plus the absolute path.
rdf::Iri effective_base(const SourceSpec& src);

struct LoadedSource {
    int id = 0;
    std::string location;
    rdf::Iri base;
    rdf::Graph graph;  // as parsed; blank labels untouched
};

struct Dataset {
    rdf::Graph merged;  // union in source order then document order
    std::vector<LoadedSource> per_source;
    std::vector<int> order;
};

struct LoadOptions {
    std::chrono::milliseconds timeout{10000};
    bool partial = false;  // skip failed sources instead of failing the load
};

struct LoadDiagnostics {
    struct Entry {
        int source_id = 0;
        std::string message;
    };
    std::vector<Entry> warnings;
};

struct LoadResult {
    Dataset dataset;
    LoadDiagnostics diagnostics;
};

// Retrieves one source's bytes. Paths read the file; URLs issue a GET with
// Accept: application/rdf+xml, following at most 5 redirects. Throws
// NotFound, Timeout, TooManyRedirects, or TransportFailure.
std::string fetch(const SourceSpec& src, std::chrono::milliseconds timeout);

// Fetches all sources (concurrently), parses each with its effective base,
// and merges in source-list order with blank nodes renamed to
// s<id>_<label>. Per-source graphs are kept as parsed. A failing source
// aborts the load with SourceLoadError unless options.partial, in which case
// it is reported in the diagnostics and skipped.
LoadResult load_sources(const std::vector<SourceSpec>& specs, const LoadOptions& options = {});

// RFC 3986 percent-encoding; the unreserved set stays verbatim, everything
// else becomes uppercase %XX bytes.
std::string percent_encode(std::string_view text);
std::string percent_decode(std::string_view text);  // inverse; throws std::invalid_argument

// endpoint?query=ENC(query_text) with one &source=ENC(url) per source.
// Throws MalformedIri unless the endpoint is an http(s) URL.
std::string make_share_link(const std::string& endpoint, const std::string& query_text,
                            const std::vector<std::string>& source_urls);

} // namespace pwo::federation
