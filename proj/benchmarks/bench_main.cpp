// Micro-benchmarks over the fixture corpus: parsing, matching, the catalogue
// query, and N-Triples serialization.

#include <fstream>
#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "pwo/ontology/vocabulary.hpp"
#include "pwo/rdf/graph.hpp"
#include "pwo/rdfxml/parser.hpp"
#include "pwo/rdfxml/serializer.hpp"
#include "pwo/sparql/evaluator.hpp"
#include "pwo/sparql/parser.hpp"

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(PWO_FIXTURE_DIR) + "/" + name, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return std::move(text).str();
}

const pwo::rdf::Iri kBase{"http://widyagama.ac.id/istiadi/ist.owl"};

pwo::rdf::Graph corpus() {
    auto g = pwo::rdfxml::parse_rdfxml(read_fixture("ist.owl"), kBase).graph;
    auto more = pwo::rdfxml::parse_rdfxml(
        read_fixture("fqh.owl"), pwo::rdf::Iri{"http://widyagama.ac.id/faqih/fqh.owl"});
    for (const auto& t : more.graph.triples()) g.insert(t);
    return g;
}

void BM_Parse(benchmark::State& state) {
    std::string body = read_fixture("ist.owl");
    for (auto _ : state) {
        auto parsed = pwo::rdfxml::parse_rdfxml(body, kBase);
        benchmark::DoNotOptimize(parsed.graph.size());
    }
}
BENCHMARK(BM_Parse);

void BM_GraphMatch(benchmark::State& state) {
    auto g = corpus();
    pwo::rdf::Graph::Pattern type = pwo::rdf::Term(pwo::rdf::ns::rdf_type());
    for (auto _ : state) {
        std::size_t hits = 0;
        for (const auto& t : g.match(std::nullopt, type, std::nullopt)) {
            hits += t.object().is_iri();
        }
        benchmark::DoNotOptimize(hits);
    }
}
BENCHMARK(BM_GraphMatch);

void BM_EvaluateCanonicalQuery(benchmark::State& state) {
    auto g = corpus();
    auto query = pwo::sparql::parse_query(read_fixture("contents.rq"));
    for (auto _ : state) {
        auto table = pwo::sparql::evaluate(query, g);
        benchmark::DoNotOptimize(table.rows.size());
    }
}
BENCHMARK(BM_EvaluateCanonicalQuery);

void BM_SerializeNTriples(benchmark::State& state) {
    auto g = corpus();
    for (auto _ : state) {
        auto text = pwo::rdfxml::serialize_ntriples(g);
        benchmark::DoNotOptimize(text.size());
    }
}
BENCHMARK(BM_SerializeNTriples);

} // namespace

BENCHMARK_MAIN();
