#include <random>
#include <string>
#include <vector>

#include "pwo/errors.hpp"
#include "pwo/rdf/graph.hpp"
#include "pwo/rdf/isomorphism.hpp"
#include "pwo/rdf/term.hpp"
#include "pwo/rdfxml/parser.hpp"
#include "pwo/rdfxml/serializer.hpp"

#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/run_cli.hpp"

using namespace pwo;
using namespace pwo::rdf;
using pwo::rdfxml::parse_rdfxml;
using pwo::rdfxml::serialize_ntriples;
using pwo::rdfxml::serialize_rdfxml;

namespace {

const Iri kBase("http://example.org/doc.owl");

// Wraps body elements in an rdf:RDF envelope with the prefixes the tests use.
std::string doc(const std::string& body,
                const std::string& extra_decls = "",
                const std::string& prolog = "") {
    std::string out = "<?xml version=\"1.0\"?>\n";
    out += prolog;
    out += "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
           "         xmlns:ex=\"http://example.org/ns#\"" +
           extra_decls + ">\n";
    out += body;
    out += "</rdf:RDF>\n";
    return out;
}

Term ex(const std::string& local) { return Term(Iri("http://example.org/ns#" + local)); }
Term res(const std::string& frag) { return Term(Iri("http://example.org/doc.owl#" + frag)); }
Iri exp(const std::string& local) { return Iri("http://example.org/ns#" + local); }

} // namespace

TEST_CASE("a description with rdf:about and literal content yields one triple") {
    auto r = parse_rdfxml(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
                              "  <ex:name>Alice</ex:name>\n"
                              "</rdf:Description>\n"),
                          kBase);
    REQUIRE(r.graph.size() == 1);
    const Triple& t = r.graph.triples()[0];
    CHECK(t.subject() == Term(Iri("http://example.org/a")));
    CHECK(t.predicate() == exp("name"));
    CHECK(t.object() == Term(Literal::plain("Alice")));
    CHECK(r.diagnostics.warnings.empty());
}

TEST_CASE("rdf:ID resolves as a fragment of the base document") {
    auto r = parse_rdfxml(doc("<rdf:Description rdf:ID=\"thing\">\n"
                              "  <ex:name>x</ex:name>\n"
                              "</rdf:Description>\n"),
                          kBase);
    REQUIRE(r.graph.size() == 1);
    CHECK(r.graph.triples()[0].subject() == res("thing"));
}

TEST_CASE("a repeated rdf:ID is reported but still parsed") {
    auto r = parse_rdfxml(doc("<rdf:Description rdf:ID=\"same\"><ex:a>1</ex:a></rdf:Description>\n"
                              "<rdf:Description rdf:ID=\"same\"><ex:b>2</ex:b></rdf:Description>\n"),
                          kBase);
    CHECK(r.graph.size() == 2);
    REQUIRE(r.diagnostics.warnings.size() == 1);
    CHECK(r.diagnostics.warnings[0].message == "duplicate rdf:ID 'same'");
}

TEST_CASE("rdf:ID and rdf:about cannot be combined") {
    CHECK_THROWS_WITH_AS(
        parse_rdfxml(doc("<rdf:Description rdf:ID=\"a\" rdf:about=\"http://example.org/a\"/>\n"),
                     kBase),
        doctest::Contains("rdf:ID and rdf:about are mutually exclusive"), XmlSyntaxError);
}

TEST_CASE("a typed node element emits its type triple before its properties") {
    auto r = parse_rdfxml(doc("<ex:Widget rdf:about=\"http://example.org/w\">\n"
                              "  <ex:name>w</ex:name>\n"
                              "</ex:Widget>\n"),
                          kBase);
    REQUIRE(r.graph.size() == 2);
    CHECK(r.graph.triples()[0].predicate() == ns::rdf_type());
    CHECK(r.graph.triples()[0].object() == ex("Widget"));
    CHECK(r.graph.triples()[1].predicate() == exp("name"));
}

TEST_CASE("a node element without rdf:ID or rdf:about becomes a blank node") {
    auto r = parse_rdfxml(doc("<ex:Widget><ex:name>w</ex:name></ex:Widget>\n"), kBase);
    REQUIRE(r.graph.size() == 2);
    CHECK(r.graph.triples()[0].subject().is_blank());
    CHECK(r.graph.triples()[0].subject() == r.graph.triples()[1].subject());
}

TEST_CASE("rdf:datatype produces a typed literal") {
    auto r = parse_rdfxml(
        doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
            "  <ex:count rdf:datatype=\"http://www.w3.org/2001/XMLSchema#integer\">3</ex:count>\n"
            "</rdf:Description>\n"),
        kBase);
    REQUIRE(r.graph.size() == 1);
    const Literal& lit = r.graph.triples()[0].object().literal();
    CHECK(lit.lexical() == "3");
    REQUIRE(lit.datatype());
    CHECK(lit.datatype()->value() == "http://www.w3.org/2001/XMLSchema#integer");
}

TEST_CASE("xml:lang scopes to descendants and an empty value clears it") {
    auto r = parse_rdfxml(
        doc("<rdf:Description rdf:about=\"http://example.org/a\" xml:lang=\"en\">\n"
            "  <ex:a>inherited</ex:a>\n"
            "  <ex:b xml:lang=\"id\">overridden</ex:b>\n"
            "  <ex:c xml:lang=\"\">cleared</ex:c>\n"
            "</rdf:Description>\n"),
        kBase);
    REQUIRE(r.graph.size() == 3);
    auto lang_of = [&](std::size_t i) {
        const Literal& lit = r.graph.triples()[i].object().literal();
        return lit.lang() ? *lit.lang() : std::string();
    };
    CHECK(lang_of(0) == "en");
    CHECK(lang_of(1) == "id");
    CHECK(lang_of(2) == "");
    CHECK(!r.graph.triples()[2].object().literal().lang());
}

TEST_CASE("a nested node is linked by the arc triple before its own triples") {
    auto r = parse_rdfxml(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
                              "  <ex:part>\n"
                              "    <ex:Widget rdf:about=\"http://example.org/b\">\n"
                              "      <ex:name>b</ex:name>\n"
                              "    </ex:Widget>\n"
                              "  </ex:part>\n"
                              "</rdf:Description>\n"),
                          kBase);
    REQUIRE(r.graph.size() == 3);
    CHECK(r.graph.triples()[0].predicate() == exp("part"));
    CHECK(r.graph.triples()[0].object() == Term(Iri("http://example.org/b")));
    CHECK(r.graph.triples()[1].predicate() == ns::rdf_type());
    CHECK(r.graph.triples()[2].predicate() == exp("name"));
}

TEST_CASE("rdf:resource on an empty property element points at a node") {
    auto r = parse_rdfxml(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
                              "  <ex:part rdf:resource=\"#frag\"/>\n"
                              "</rdf:Description>\n"),
                          kBase);
    REQUIRE(r.graph.size() == 1);
    CHECK(r.graph.triples()[0].object() == res("frag"));
}

TEST_CASE("envelope prefixes are recorded in the parsed graph") {
    auto r = parse_rdfxml(doc(""), kBase);
    const Iri* ns_rdf = r.graph.prefixes().find("rdf");
    const Iri* ns_ex = r.graph.prefixes().find("ex");
    REQUIRE(ns_rdf);
    REQUIRE(ns_ex);
    CHECK(ns_ex->value() == "http://example.org/ns#");
}

TEST_CASE("DOCTYPE entities expand in attributes and text") {
    std::string prolog =
        "<!DOCTYPE rdf:RDF [\n"
        "  <!ENTITY xsd \"http://www.w3.org/2001/XMLSchema#\">\n"
        "  <!ENTITY app \"http://example.org/app#\">\n"
        "]>\n";
    auto r = parse_rdfxml(
        doc("<rdf:Description rdf:about=\"&app;a\">\n"
            "  <ex:count rdf:datatype=\"&xsd;integer\">4</ex:count>\n"
            "</rdf:Description>\n",
            "", prolog),
        kBase);
    REQUIRE(r.graph.size() == 1);
    CHECK(r.graph.triples()[0].subject() == Term(Iri("http://example.org/app#a")));
    CHECK(r.graph.triples()[0].object().literal().datatype()->value() ==
          "http://www.w3.org/2001/XMLSchema#integer");
}

TEST_CASE("the truncated &xsd:string attribute form lands in the schema namespace") {
    // Seen in the wild where the entity semicolon was dropped; only the
    // attribute-value form is tolerated.
    auto r = parse_rdfxml(
        doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
            "  <ex:name rdf:datatype=\"&xsd:string\">x</ex:name>\n"
            "</rdf:Description>\n"),
        kBase);
    REQUIRE(r.graph.size() == 1);
    CHECK(r.graph.triples()[0].object().literal().datatype()->value() ==
          "http://www.w3.org/2001/XMLSchema#string");
}

TEST_CASE("redeclaring an entity warns and keeps the first value") {
    std::string prolog =
        "<!DOCTYPE rdf:RDF [\n"
        "  <!ENTITY app \"http://example.org/app#\">\n"
        "  <!ENTITY app \"http://example.org/other#\">\n"
        "]>\n";
    auto r = parse_rdfxml(doc("<rdf:Description rdf:about=\"&app;a\"><ex:n>1</ex:n>"
                              "</rdf:Description>\n",
                              "", prolog),
                          kBase);
    REQUIRE(r.diagnostics.warnings.size() == 1);
    CHECK(r.diagnostics.warnings[0].message == "entity 'app' redeclared");
    CHECK(r.graph.triples()[0].subject() == Term(Iri("http://example.org/app#a")));
}

TEST_CASE("an undeclared entity is a syntax error") {
    CHECK_THROWS_WITH_AS(
        parse_rdfxml(doc("<rdf:Description rdf:about=\"&nope;a\"/>\n"), kBase),
        doctest::Contains("undeclared entity 'nope'"), XmlSyntaxError);
}

TEST_CASE("processing instructions are skipped with a warning") {
    auto r = parse_rdfxml(doc("<?xml-stylesheet href=\"x.css\"?>\n"
                              "<rdf:Description rdf:about=\"http://example.org/a\">"
                              "<ex:n>1</ex:n></rdf:Description>\n"),
                          kBase);
    CHECK(r.graph.size() == 1);
    REQUIRE(r.diagnostics.warnings.size() == 1);
    CHECK(r.diagnostics.warnings[0].message == "processing instruction 'xml-stylesheet' ignored");
}

TEST_CASE("warnings are ordered by the line they point at") {
    std::string prolog =
        "<!DOCTYPE rdf:RDF [\n"
        "  <!ENTITY a \"http://example.org/x#\">\n"
        "  <!ENTITY a \"http://example.org/y#\">\n"
        "]>\n";
    auto r = parse_rdfxml(doc("<rdf:Description rdf:ID=\"d\"><ex:n>1</ex:n></rdf:Description>\n"
                              "<rdf:Description rdf:ID=\"d\"><ex:n>2</ex:n></rdf:Description>\n"
                              "<?later stuff?>\n",
                              "", prolog),
                          kBase);
    REQUIRE(r.diagnostics.warnings.size() == 3);
    CHECK(r.diagnostics.warnings[0].message == "entity 'a' redeclared");
    CHECK(r.diagnostics.warnings[1].message == "duplicate rdf:ID 'd'");
    CHECK(r.diagnostics.warnings[2].message ==
          "processing instruction 'later' ignored");
    CHECK(r.diagnostics.warnings[0].line < r.diagnostics.warnings[1].line);
    CHECK(r.diagnostics.warnings[1].line < r.diagnostics.warnings[2].line);
}

TEST_CASE("constructs outside the subset are rejected by name") {
    auto reject = [&](const std::string& body, const std::string& needle) {
        CAPTURE(needle);
        CHECK_THROWS_WITH_AS(parse_rdfxml(doc(body), kBase), doctest::Contains(needle.c_str()),
                             UnsupportedConstruct);
    };
    reject("<rdf:Description rdf:about=\"http://example.org/a\" "
           "xml:base=\"http://example.org/\"/>\n",
           "xml:base");
    reject("<rdf:Bag/>\n", "rdf:Bag (containers)");
    reject("<rdf:Description rdf:about=\"http://example.org/a\"><rdf:li>x</rdf:li>"
           "</rdf:Description>\n",
           "rdf:li (containers)");
    reject("<rdf:Description rdf:about=\"http://example.org/a\"><rdf:_1>x</rdf:_1>"
           "</rdf:Description>\n",
           "rdf:_1 (containers)");
    reject("<rdf:Description rdf:nodeID=\"n\"/>\n", "rdf:nodeID");
    reject("<rdf:Description rdf:about=\"http://example.org/a\">"
           "<ex:p rdf:nodeID=\"n\"/></rdf:Description>\n",
           "rdf:nodeID");
    reject("<rdf:Description rdf:about=\"http://example.org/a\">"
           "<ex:p rdf:parseType=\"Literal\">x</ex:p></rdf:Description>\n",
           "rdf:parseType=\"Literal\"");
    reject("<rdf:Description rdf:about=\"http://example.org/a\">"
           "<ex:p rdf:parseType=\"Collection\"/></rdf:Description>\n",
           "rdf:parseType=\"Collection\"");
    reject("<rdf:Description rdf:about=\"http://example.org/a\">"
           "<ex:p rdf:ID=\"stmt\">x</ex:p></rdf:Description>\n",
           "rdf:ID on a property element (reification)");
    reject("<rdf:Description rdf:about=\"http://example.org/a\" ex:name=\"x\"/>\n",
           "property attribute 'ex:name'");
    reject("<rdf:Description rdf:about=\"http://example.org/a\">"
           "<ex:p ex:q=\"x\"/></rdf:Description>\n",
           "property attribute 'ex:q'");
    reject("<rdf:Description rdf:about=\"http://example.org/a\" xml:id=\"z\"/>\n", "xml:id");
}

TEST_CASE("malformed structure raises a syntax error naming the problem") {
    auto reject = [&](const std::string& text, const std::string& needle) {
        CAPTURE(needle);
        CHECK_THROWS_WITH_AS(parse_rdfxml(text, kBase), doctest::Contains(needle.c_str()),
                             XmlSyntaxError);
    };
    reject("<?xml version=\"1.0\"?>\n<ex:root xmlns:ex=\"http://example.org/ns#\"/>\n",
           "expected an rdf:RDF root element");
    reject(doc("<rdf:RDF/>\n"), "nested rdf:RDF element");
    reject(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
               "  <rdf:Description rdf:about=\"http://example.org/b\"/>\n"
               "</rdf:Description>\n"),
           "rdf:Description in a property position");
    reject(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
               "  <ex:p>text<ex:Widget/></ex:p>\n"
               "</rdf:Description>\n"),
           "mixed text and element content in property element");
    reject(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
               "  <ex:p rdf:resource=\"#b\">x</ex:p>\n"
               "</rdf:Description>\n"),
           "property element with rdf:resource must be empty");
    reject(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
               "  <ex:p rdf:resource=\"#b\" "
               "rdf:datatype=\"http://www.w3.org/2001/XMLSchema#string\"/>\n"
               "</rdf:Description>\n"),
           "rdf:resource and rdf:datatype are mutually exclusive");
    reject(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
               "  <ex:p><ex:A/><ex:B/></ex:p>\n"
               "</rdf:Description>\n"),
           "more than one node element inside a property element");
    reject(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
               "  <ex:p rdf:datatype=\"http://www.w3.org/2001/XMLSchema#string\">"
               "<ex:A/></ex:p>\n"
               "</rdf:Description>\n"),
           "rdf:datatype on a property element with node content");
    reject(doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
               "  <ex:p>x</ex:p>stray\n"
               "</rdf:Description>\n"),
           "text content between property elements");
    reject(doc("stray\n"), "text content inside rdf:RDF");
    reject("<?xml version=\"1.0\"?>\n"
           "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\" "
           "ex:v=\"1\" xmlns:ex=\"http://example.org/ns#\"/>\n",
           "unexpected attribute 'ex:v' on rdf:RDF");
    reject("<?xml version=\"1.0\"?>\n"
           "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">"
           "<thing/></rdf:RDF>\n",
           "element 'thing' has no namespace");
}

TEST_CASE("broken XML is reported by the tokenizer") {
    auto reject = [&](const std::string& text, const std::string& needle) {
        CAPTURE(needle);
        CHECK_THROWS_WITH_AS(parse_rdfxml(text, kBase), doctest::Contains(needle.c_str()),
                             XmlSyntaxError);
    };
    reject(doc("<ex:A><ex:p>x</ex:q></ex:A>\n"), "mismatched end tag");
    reject(doc("<ex:A rdf:about=\"http://example.org/a\" rdf:about=\"http://example.org/b\"/>\n"),
           "duplicate attribute 'rdf:about'");
    reject("<?xml version=\"1.0\"?>\n<zz:RDF/>\n", "unbound namespace prefix 'zz'");
    reject(doc("<ex:A><ex:p>a & b</ex:p></ex:A>\n"), "bare '&' must start an entity reference");
    reject("<?xml version=\"1.0\"?>\n", "no root element");
}

TEST_CASE("syntax errors carry the line of the offending construct") {
    std::string text = doc("<rdf:Description rdf:about=\"http://example.org/a\">\n"
                           "  <ex:p rdf:resource=\"#b\">x</ex:p>\n"
                           "</rdf:Description>\n");
    try {
        parse_rdfxml(text, kBase);
        FAIL("expected XmlSyntaxError");
    } catch (const XmlSyntaxError& e) {
        CHECK(e.line() == 5);
        CHECK(std::string(e.what()).find("line 5") != std::string::npos);
    }
}

TEST_CASE("an empty graph serializes to a self-closed envelope") {
    Graph g;
    std::string out = serialize_rdfxml(g, kBase);
    CHECK(out.find("<rdf:RDF") != std::string::npos);
    CHECK(out.find("/>") != std::string::npos);
    CHECK(parse_rdfxml(out, kBase).graph.size() == 0);
}

TEST_CASE("serialization reuses graph prefixes and falls back to generated ones") {
    Graph g;
    g.prefixes().add("app", Iri("http://example.org/app#"));
    g.insert(Triple(Term(Iri("http://example.org/app#a")),
                    Iri("http://example.org/app#p"),
                    Term(Iri("http://other.org/q#b"))));
    // A predicate with no registered prefix forces a generated one.
    g.insert(Triple(Term(Iri("http://example.org/app#a")),
                    Iri("http://other.org/q#p"),
                    Term(Iri("http://example.org/app#b"))));
    std::string out = serialize_rdfxml(g, kBase);
    CHECK(out.find("xmlns:app=\"http://example.org/app#\"") != std::string::npos);
    CHECK(out.find("xmlns:ns1=\"http://other.org/q#\"") != std::string::npos);
    CHECK(out.find("<app:p rdf:resource=\"http://other.org/q#b\"/>") != std::string::npos);
    CHECK(out.find("<ns1:p rdf:resource=\"http://example.org/app#b\"/>") != std::string::npos);
}

TEST_CASE("typed literals and language tags survive a round trip") {
    Graph g;
    Term s(Iri("http://example.org/app#a"));
    g.insert(Triple(s, Iri("http://example.org/app#d"),
                    Term(Literal::typed("2010-01-02", ns::xsd_date()))));
    g.insert(Triple(s, Iri("http://example.org/app#t"),
                    Term(Literal::tagged("hello", "en"))));
    g.insert(Triple(s, Iri("http://example.org/app#q"),
                    Term(Literal::plain("<&\">'"))));
    auto back = parse_rdfxml(serialize_rdfxml(g, kBase), kBase);
    CHECK(back.graph.size() == g.size());
    for (const Triple& t : g.triples()) CHECK(back.graph.contains(t));
}

TEST_CASE("a blank object used once nests; reuse or cycles are rejected") {
    Term a(Iri("http://example.org/app#a"));
    Term c(Iri("http://example.org/app#c"));
    Iri p("http://example.org/app#p");
    Term b1(BlankNode("b1"));
    Term b2(BlankNode("b2"));

    Graph nested;
    nested.insert(Triple(a, p, b1));
    nested.insert(Triple(b1, p, Term(Literal::plain("x"))));
    auto back = parse_rdfxml(serialize_rdfxml(nested, kBase), kBase);
    CHECK(testsupport::oracle_isomorphic(nested, back.graph));

    Graph shared;
    shared.insert(Triple(a, p, b1));
    shared.insert(Triple(c, p, b1));
    CHECK_THROWS_AS((void)serialize_rdfxml(shared, kBase), std::invalid_argument);

    Graph cycle;
    cycle.insert(Triple(b1, p, b2));
    cycle.insert(Triple(b2, p, b1));
    CHECK_THROWS_AS((void)serialize_rdfxml(cycle, kBase), std::invalid_argument);
}

TEST_CASE("fixture documents survive parse, serialize, reparse") {
    const char* names[] = {"ist.owl", "fqh.owl", "dedi.owl", "schema_listings.owl"};
    for (const char* name : names) {
        CAPTURE(name);
        std::string path = std::string(PWO_FIXTURE_DIR) + "/" + name;
        std::string text = testsupport::read_file_text(path);
        Iri base("http://example.org/fixture/" + std::string(name));
        auto first = parse_rdfxml(text, base);
        std::string emitted = serialize_rdfxml(first.graph, base);
        auto second = parse_rdfxml(emitted, base);
        CHECK(second.graph.size() == first.graph.size());
        for (const Triple& t : first.graph.triples()) CHECK(second.graph.contains(t));
    }
}

TEST_CASE("random graphs in the expressible subset round trip isomorphically") {
    std::mt19937 rng(20260822);
    for (int i = 0; i < 50; ++i) {
        CAPTURE(i);
        Graph g = testsupport::random_serializable_graph(rng);
        std::string text = serialize_rdfxml(g, kBase);
        auto back = parse_rdfxml(text, kBase);
        REQUIRE(testsupport::oracle_isomorphic(g, back.graph));
    }
}

TEST_CASE("ntriples output has one line per triple in graph order") {
    Graph g;
    Term s(Iri("http://example.org/app#a"));
    g.insert(Triple(s, Iri("http://example.org/app#p"), Term(Literal::plain("line\n\"q\""))));
    g.insert(Triple(s, Iri("http://example.org/app#p"), Term(BlankNode("b1"))));
    std::string out = serialize_ntriples(g);
    CHECK(out == "<http://example.org/app#a> <http://example.org/app#p> \"line\\n\\\"q\\\"\" .\n"
                 "<http://example.org/app#a> <http://example.org/app#p> _:b1 .\n");

    std::mt19937 rng(7);
    Graph r = testsupport::random_graph(rng);
    std::string text = serialize_ntriples(r);
    std::size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    CHECK(lines == r.size());
}
