// pwo: command-line front end over the personal-web-ontology toolkit.
//
// Exit codes are a stable contract: 0 success, 1 validation errors,
// 2 input/transport/syntax failure. Standard output carries exactly the
// command payload; every diagnostic goes to standard error.

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pwo/errors.hpp"
#include "pwo/federation/federation.hpp"
#include "pwo/ontology/validation.hpp"
#include "pwo/ontology/vocabulary.hpp"
#include "pwo/rdf/graph.hpp"
#include "pwo/rdfxml/parser.hpp"
#include "pwo/rdfxml/serializer.hpp"
#include "pwo/sparql/evaluator.hpp"
#include "pwo/sparql/parser.hpp"
#include "pwo/sparql/render.hpp"

#include "CLI11.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationErrors = 1;
constexpr int kFailure = 2;

struct CliConfig {
    std::string format = "text";
    long long timeout_ms = 10000;
    bool strict = false;
    bool partial = false;
};

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pwo::NotFound(path);
    std::ostringstream text;
    text << in.rdbuf();
    return std::move(text).str();
}

std::vector<pwo::federation::SourceSpec> make_specs(const std::vector<std::string>& sources) {
    std::vector<pwo::federation::SourceSpec> specs;
    specs.reserve(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
        specs.push_back({static_cast<int>(i) + 1, sources[i], std::nullopt});
    }
    return specs;
}

pwo::federation::LoadResult load_all(const std::vector<std::string>& sources,
                                     const CliConfig& config) {
    pwo::federation::LoadOptions options;
    options.timeout = std::chrono::milliseconds(config.timeout_ms);
    options.partial = config.partial;
    auto result = pwo::federation::load_sources(make_specs(sources), options);
    for (const auto& entry : result.diagnostics.warnings) {
        std::cerr << "pwo: source " << entry.source_id << ": " << entry.message << "\n";
    }
    return result;
}

// The namespace a source's instance data lives under: taken from its first
// owl:Class declaration, falling back to the document base.
pwo::rdf::Iri ontology_base(const pwo::rdf::Graph& g, const pwo::rdf::Iri& fallback) {
    for (const auto& t : g.triples()) {
        if (t.predicate() == pwo::rdf::ns::rdf_type() && t.subject().is_iri() &&
            t.object().is_iri() && t.object().iri() == pwo::rdf::ns::owl_class()) {
            const std::string& value = t.subject().iri().value();
            auto hash = value.find('#');
            if (hash != std::string::npos) return pwo::rdf::Iri(value.substr(0, hash));
            return t.subject().iri();
        }
    }
    return fallback;
}

pwo::sparql::ResultFormat format_of(const CliConfig& config) {
    auto format = pwo::sparql::parse_format(config.format);
    if (!format) throw std::runtime_error("unknown result format: " + config.format);
    return *format;
}

int cmd_validate(const std::vector<std::string>& sources, const CliConfig& config) {
    auto loaded = load_all(sources, config);
    bool any_errors = false;
    bool first = true;
    for (const auto& source : loaded.dataset.per_source) {
        auto report = pwo::ontology::validate(source.graph,
                                              ontology_base(source.graph, source.base),
                                              config.strict);
        if (!first) std::cout << "\n";
        first = false;
        std::cout << "== " << source.location << " ==\n";
        for (const auto& finding : report.findings) {
            std::cout << (finding.severity == pwo::ontology::Severity::Error ? "ERROR"
                                                                             : "WARNING")
                      << " " << finding.code << " " << finding.subject << ": "
                      << finding.message << "\n";
        }
        std::cout << report.error_count() << (report.error_count() == 1 ? " error, " : " errors, ")
                  << report.warning_count()
                  << (report.warning_count() == 1 ? " warning" : " warnings") << "\n";
        any_errors = any_errors || report.has_errors();
    }
    return any_errors ? kValidationErrors : kOk;
}

int cmd_query(const std::string& query_file, const std::vector<std::string>& sources,
              const CliConfig& config) {
    auto format = format_of(config);
    auto ast = pwo::sparql::parse_query(read_text_file(query_file));
    auto loaded = load_all(sources, config);
    auto table = pwo::sparql::evaluate(ast, loaded.dataset.merged);
    std::cout << pwo::sparql::render(table, format);
    return kOk;
}

// One UNION branch per source, walking web -> scope -> subdomain -> document.
// With a domain filter the ?Scope variable is replaced by that individual,
// named inside each source's own namespace.
std::string contents_query(const pwo::federation::Dataset& dataset,
                           const std::optional<std::string>& domain_filter) {
    std::ostringstream query;
    std::vector<std::string> branches;
    for (std::size_t i = 0; i < dataset.per_source.size(); ++i) {
        const auto& source = dataset.per_source[i];
        auto vocab = pwo::ontology::vocabulary_for(ontology_base(source.graph, source.base));
        std::string prefix = "p" + std::to_string(i + 1);
        query << "PREFIX " << prefix << ": <" << vocab.ns() << ">\n";
        std::string scope = domain_filter ? prefix + ":" + *domain_filter : "?Scope";
        std::ostringstream branch;
        branch << "{ ?Web " << prefix << ":hasScope " << scope << " . " << scope << " "
               << prefix << ":hasSubDomain ?SubScope . ?SubScope " << prefix
               << ":consistof ?doc . ?doc " << prefix << ":docTitle ?DocTitle . ?doc "
               << prefix << ":docURI ?location }";
        branches.push_back(std::move(branch).str());
    }
    query << "SELECT ?Web ?Scope ?SubScope ?DocTitle ?location\nWHERE {\n";
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (i > 0) query << "  UNION\n";
        query << "  " << branches[i] << "\n";
    }
    query << "}\n";
    return std::move(query).str();
}

int cmd_contents(const std::vector<std::string>& sources,
                 const std::optional<std::string>& domain_filter, const CliConfig& config) {
    auto format = format_of(config);
    auto loaded = load_all(sources, config);
    if (loaded.dataset.per_source.empty()) throw std::runtime_error("no sources loaded");
    auto ast = pwo::sparql::parse_query(contents_query(loaded.dataset, domain_filter));
    auto table = pwo::sparql::evaluate(ast, loaded.dataset.merged);
    std::cout << pwo::sparql::render(table, format);
    return kOk;
}

int cmd_convert(const std::string& source, const std::string& to, const CliConfig& config) {
    pwo::federation::SourceSpec spec{1, source, std::nullopt};
    auto base = pwo::federation::effective_base(spec);
    auto body = pwo::federation::fetch(spec, std::chrono::milliseconds(config.timeout_ms));
    auto parsed = pwo::rdfxml::parse_rdfxml(body, base);
    for (const auto& warning : parsed.diagnostics.warnings) {
        std::cerr << "pwo: line " << warning.line << ": " << warning.message << "\n";
    }
    if (to == "rdfxml") {
        std::cout << pwo::rdfxml::serialize_rdfxml(parsed.graph, base);
    } else {
        std::cout << pwo::rdfxml::serialize_ntriples(parsed.graph);
    }
    return kOk;
}

int cmd_link(const std::string& endpoint, const std::string& query_file,
             const std::vector<std::string>& sources) {
    auto link = pwo::federation::make_share_link(endpoint, read_text_file(query_file), sources);
    std::cout << link << "\n";
    return kOk;
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        std::cerr << "pwo: " << e.what() << "\n";
        return kFailure;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Personal web ontology toolkit"};
    app.require_subcommand(1);

    CliConfig config;
    std::vector<std::string> sources;
    std::string query_file;
    std::string convert_to;
    std::string endpoint;
    std::optional<std::string> domain_filter;

    auto add_timeout = [&config](CLI::App* cmd) {
        cmd->add_option("--timeout-ms", config.timeout_ms, "Fetch timeout in milliseconds")
            ->check(CLI::PositiveNumber);
    };
    auto add_partial = [&config](CLI::App* cmd) {
        cmd->add_flag("--partial", config.partial, "Skip sources that fail to load");
    };
    auto add_format = [&config](CLI::App* cmd) {
        cmd->add_option("--format", config.format, "Result format")
            ->check(CLI::IsMember({"text", "csv", "tsv", "json", "xml"}, CLI::ignore_case));
    };

    auto* validate = app.add_subcommand("validate", "Check sources against the vocabulary");
    validate->add_option("sources", sources, "Ontology files or URLs")->required();
    validate->add_flag("--strict", config.strict, "Treat missing inverses as errors");
    add_partial(validate);
    add_timeout(validate);

    auto* query = app.add_subcommand("query", "Run a query over the merged sources");
    query->add_option("--query", query_file, "Query file")->required();
    query->add_option("sources", sources, "Ontology files or URLs")->required();
    add_format(query);
    add_partial(query);
    add_timeout(query);

    auto* contents = app.add_subcommand("contents", "List documents per web, scope, and subdomain");
    contents->add_option("sources", sources, "Ontology files or URLs")->required();
    contents->add_option("--domain", domain_filter, "Only documents under this domain individual");
    add_format(contents);
    add_partial(contents);
    add_timeout(contents);

    auto* convert = app.add_subcommand("convert", "Reserialize one source");
    convert->add_option("source", sources, "Ontology file or URL")->required()->expected(1);
    convert->add_option("--to", convert_to, "Target syntax")
        ->required()
        ->check(CLI::IsMember({"rdfxml", "ntriples"}));
    add_timeout(convert);

    auto* link = app.add_subcommand("link", "Build a share URL embedding a query");
    link->add_option("--endpoint", endpoint, "Query engine URL")->required();
    link->add_option("--query", query_file, "Query file")->required();
    link->add_option("sources", sources, "Source URLs to reference");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kFailure;
    }

    // The environment supplies the timeout only when the flag is absent.
    CLI::App* active = app.get_subcommands().front();
    if (auto* timeout_opt = active->get_option_no_throw("--timeout-ms");
        timeout_opt != nullptr && timeout_opt->count() == 0) {
        if (const char* env = std::getenv("PWO_TIMEOUT_MS")) {
            std::string_view text(env);
            long long parsed = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
            if (ec != std::errc() || end != text.data() + text.size() || parsed <= 0) {
                std::cerr << "pwo: PWO_TIMEOUT_MS must be a positive integer\n";
                return kFailure;
            }
            config.timeout_ms = parsed;
        }
    }

    if (*validate) return run_guarded([&] { return cmd_validate(sources, config); });
    if (*query) return run_guarded([&] { return cmd_query(query_file, sources, config); });
    if (*contents) return run_guarded([&] { return cmd_contents(sources, domain_filter, config); });
    if (*convert) return run_guarded([&] { return cmd_convert(sources.front(), convert_to, config); });
    if (*link) return run_guarded([&] { return cmd_link(endpoint, query_file, sources); });
    return kFailure;
}
