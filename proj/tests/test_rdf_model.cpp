#include <random>
#include <string>
#include <vector>

#include "pwo/errors.hpp"
#include "pwo/rdf/graph.hpp"
#include "pwo/rdf/isomorphism.hpp"
#include "pwo/rdf/resolve.hpp"
#include "pwo/rdf/term.hpp"

#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pwo::rdf;

namespace {

Term iri(const std::string& s) { return Term(Iri(s)); }
Term blank(const std::string& s) { return Term(BlankNode(s)); }
Term plain(const std::string& s) { return Term(Literal::plain(s)); }

} // namespace

TEST_CASE("literal factories keep datatype and language apart") {
    auto p = Literal::plain("hello");
    CHECK(p.lexical() == "hello");
    CHECK(!p.datatype());
    CHECK(!p.lang());

    auto t = Literal::typed("5", Iri("http://www.w3.org/2001/XMLSchema#integer"));
    CHECK(t.datatype()->value() == "http://www.w3.org/2001/XMLSchema#integer");
    CHECK(!t.lang());

    auto g = Literal::tagged("hallo", "de");
    CHECK(g.lang() == "de");
    CHECK(!g.datatype());
}

TEST_CASE("iri rejects garbage") {
    CHECK_NOTHROW(Iri("http://example.org/a#b"));
    CHECK_NOTHROW(Iri("urn:isbn:12345"));
    CHECK_THROWS_AS(Iri("no-scheme-here"), pwo::MalformedIri);
    CHECK_THROWS_AS(Iri("http://exa mple.org/"), pwo::MalformedIri);
    CHECK_THROWS_AS(Iri(""), pwo::MalformedIri);
}

TEST_CASE("triple subjects cannot be literals") {
    CHECK_THROWS_AS(Triple(plain("x"), Iri("http://example.org/p"), plain("y")),
                    std::invalid_argument);
}

TEST_CASE("match_equal folds plain and xsd:string literals") {
    Term a = plain("x");
    Term b = Term(Literal::typed("x", ns::xsd_string()));
    CHECK(match_equal(a, b));
    CHECK(match_equal(b, a));
    CHECK(match_equal(a, a));

    CHECK(!match_equal(plain("x"), plain("y")));
    CHECK(!match_equal(a, Term(Literal::typed("x", Iri("http://www.w3.org/2001/XMLSchema#token")))));
    CHECK(!match_equal(a, Term(Literal::tagged("x", "en"))));
    CHECK(!match_equal(iri("http://example.org/x"), plain("x")));
    CHECK(match_equal(iri("http://example.org/x"), iri("http://example.org/x")));
    CHECK(!match_equal(blank("b1"), blank("b2")));
    CHECK(match_equal(blank("b1"), blank("b1")));
}

TEST_CASE("date lexical validation is calendar aware") {
    CHECK(is_valid_date_lexical("2010-02-11"));
    CHECK(is_valid_date_lexical("2012-02-29"));
    CHECK(is_valid_date_lexical("2000-02-29"));
    CHECK(is_valid_date_lexical("1999-12-31"));

    CHECK(!is_valid_date_lexical("2011-02-29"));
    CHECK(!is_valid_date_lexical("1900-02-29"));
    CHECK(!is_valid_date_lexical("2010-13-01"));
    CHECK(!is_valid_date_lexical("2010-00-10"));
    CHECK(!is_valid_date_lexical("2010-04-31"));
    CHECK(!is_valid_date_lexical("2010-2-11"));
    CHECK(!is_valid_date_lexical("2010-02-11T00:00:00"));
    CHECK(!is_valid_date_lexical(""));
    CHECK(!is_valid_date_lexical("yesterday"));
}

TEST_CASE("to_ntriples renders every term kind") {
    CHECK(to_ntriples(iri("http://example.org/a")) == "<http://example.org/a>");
    CHECK(to_ntriples(blank("b7")) == "_:b7");
    CHECK(to_ntriples(plain("hi")) == "\"hi\"");
    CHECK(to_ntriples(Term(Literal::typed("5", Iri("http://www.w3.org/2001/XMLSchema#integer")))) ==
          "\"5\"^^<http://www.w3.org/2001/XMLSchema#integer>");
    CHECK(to_ntriples(Term(Literal::tagged("hei", "no"))) == "\"hei\"@no");
    CHECK(to_ntriples(plain("a\"b\\c\nd\re\tf")) == "\"a\\\"b\\\\c\\nd\\re\\tf\"");
}

TEST_CASE("prefix map keeps registration order and overwrite position") {
    PrefixMap map;
    map.add("a", Iri("http://example.org/a#"));
    map.add("b", Iri("http://example.org/b#"));
    map.add("a", Iri("http://example.org/other#"));

    REQUIRE(map.entries().size() == 2);
    CHECK(map.entries()[0].first == "a");
    CHECK(map.entries()[0].second.value() == "http://example.org/other#");
    CHECK(map.entries()[1].first == "b");

    CHECK(map.find("b") != nullptr);
    CHECK(map.find("missing") == nullptr);
    CHECK(map.expand("b", "thing").value() == "http://example.org/b#thing");
    CHECK_THROWS_AS(map.expand("nope", "x"), pwo::UnknownPrefix);
}

TEST_CASE("prefix compaction picks the longest namespace, first registered on ties") {
    PrefixMap map;
    map.add("ex", Iri("http://example.org/"));
    map.add("deep", Iri("http://example.org/deep#"));
    map.add("dup", Iri("http://example.org/deep#"));

    CHECK(map.compact(Iri("http://example.org/deep#x")) == "deep:x");
    CHECK(map.compact(Iri("http://example.org/plain")) == "ex:plain");
    CHECK(!map.compact(Iri("http://elsewhere.net/x")).has_value());
}

TEST_CASE("graph deduplicates but keeps strictly distinct literals") {
    Graph g;
    Triple t(iri("http://example.org/s"), Iri("http://example.org/p"), plain("x"));
    CHECK(g.insert(t));
    CHECK(!g.insert(t));
    CHECK(g.size() == 1);
    CHECK(g.contains(t));

    Triple typed(iri("http://example.org/s"), Iri("http://example.org/p"),
                 Term(Literal::typed("x", ns::xsd_string())));
    CHECK(!g.contains(typed));
    CHECK(g.insert(typed));
    CHECK(g.size() == 2);
}

TEST_CASE("graph match uses value equality across the string literal forms") {
    Graph g;
    g.insert(Triple(iri("http://example.org/s"), Iri("http://example.org/p"), plain("x")));
    g.insert(Triple(iri("http://example.org/s"), Iri("http://example.org/p"),
                    Term(Literal::typed("x", ns::xsd_string()))));

    auto hits = g.match(std::nullopt, std::nullopt, plain("x"));
    CHECK(hits.size() == 2);
    hits = g.match(std::nullopt, std::nullopt, Term(Literal::typed("x", ns::xsd_string())));
    CHECK(hits.size() == 2);
    hits = g.match(iri("http://example.org/missing"), std::nullopt, std::nullopt);
    CHECK(hits.empty());
}

TEST_CASE("graph preserves insertion order") {
    Graph g;
    for (int i = 0; i < 10; ++i) {
        g.insert(Triple(iri("http://example.org/s" + std::to_string(i)),
                        Iri("http://example.org/p"), plain("v")));
    }
    for (int i = 0; i < 10; ++i) {
        CHECK(g.triples()[i].subject().iri().value() == "http://example.org/s" + std::to_string(i));
    }
}

TEST_CASE("graph match agrees with the linear-scan oracle on random graphs") {
    std::mt19937 rng(411);
    for (int round = 0; round < 50; ++round) {
        Graph g = testsupport::random_graph(rng);
        for (int probe = 0; probe < 8; ++probe) {
            auto pos = [&](int which) -> std::optional<Term> {
                if (testsupport::chance(rng, 0.5)) return std::nullopt;
                const auto& t = g.triples()[testsupport::pick(
                    rng, 0, static_cast<int>(g.size()) - 1)];
                if (which == 0) return t.subject();
                if (which == 1) return Term(t.predicate());
                return t.object();
            };
            auto s = pos(0);
            auto p = pos(1);
            auto o = pos(2);
            CHECK(g.match(s, p, o) == testsupport::oracle_match(g, s, p, o));
        }
    }
}

TEST_CASE("isomorphism handles ground graphs and blank renamings") {
    Graph a;
    a.insert(Triple(iri("http://example.org/s"), Iri("http://example.org/p"), blank("x")));
    a.insert(Triple(blank("x"), Iri("http://example.org/q"), plain("v")));

    Graph b;
    b.insert(Triple(blank("y"), Iri("http://example.org/q"), plain("v")));
    b.insert(Triple(iri("http://example.org/s"), Iri("http://example.org/p"), blank("y")));

    CHECK(isomorphic(a, b));
    CHECK(isomorphic(a, a));

    Graph c = b;
    c.insert(Triple(blank("y"), Iri("http://example.org/q"), plain("w")));
    CHECK(!isomorphic(a, c));

    Graph d;
    d.insert(Triple(iri("http://example.org/s"), Iri("http://example.org/p"), blank("x")));
    d.insert(Triple(blank("z"), Iri("http://example.org/q"), plain("v")));
    CHECK(!isomorphic(a, d));  // same shape counts, but the bijection fails
}

TEST_CASE("isomorphism distinguishes blank structure from label spelling") {
    // two blanks sharing one property value vs one blank carrying both
    Graph a;
    a.insert(Triple(blank("m"), Iri("http://example.org/p"), plain("1")));
    a.insert(Triple(blank("n"), Iri("http://example.org/p"), plain("2")));
    Graph b;
    b.insert(Triple(blank("k"), Iri("http://example.org/p"), plain("1")));
    b.insert(Triple(blank("k"), Iri("http://example.org/p"), plain("2")));
    CHECK(!isomorphic(a, b));
    CHECK(testsupport::oracle_isomorphic(a, b) == false);
}

TEST_CASE("isomorphism agrees with the exhaustive bijection oracle") {
    std::mt19937 rng(902);
    int positives = 0;
    for (int round = 0; round < 60; ++round) {
        Graph a = testsupport::random_graph(rng, 14);

        Graph b;
        std::map<std::string, std::string> rename;
        for (const auto& t : a.triples()) {
            auto mapped = [&](const Term& term) {
                if (!term.is_blank()) return term;
                auto [it, fresh] = rename.try_emplace(term.blank().label(),
                                                      "r" + std::to_string(rename.size()));
                (void)fresh;
                return Term(BlankNode(it->second));
            };
            b.insert(Triple(mapped(t.subject()), t.predicate(), mapped(t.object())));
        }
        if (testsupport::chance(rng, 0.5)) {
            // perturb: swap one object for a fresh literal
            auto victim = b.triples()[testsupport::pick(rng, 0, static_cast<int>(b.size()) - 1)];
            Graph c;
            for (const auto& t : b.triples()) {
                if (t == victim) {
                    c.insert(Triple(t.subject(), t.predicate(), plain("perturbed")));
                } else {
                    c.insert(t);
                }
            }
            b = std::move(c);
        }
        bool mine = isomorphic(a, b);
        bool expected = testsupport::oracle_isomorphic(a, b);
        CHECK(mine == expected);
        positives += mine;
    }
    CHECK(positives > 5);  // the generator must exercise both outcomes
    CHECK(positives < 60);
}

TEST_CASE("resolve_id replaces the base fragment") {
    Iri base("http://example.org/doc.owl");
    CHECK(resolve_id(base, "Web").value() == "http://example.org/doc.owl#Web");
    CHECK(resolve_id(Iri("http://example.org/doc.owl#old"), "New").value() ==
          "http://example.org/doc.owl#New");
    CHECK_THROWS_AS(resolve_id(base, "9bad"), pwo::MalformedIri);
    CHECK_THROWS_AS(resolve_id(base, ""), pwo::MalformedIri);
    CHECK_THROWS_AS(resolve_id(base, "has space"), pwo::MalformedIri);
}

TEST_CASE("resolve_reference covers the document reference forms") {
    Iri base("http://example.org/dir/doc.owl");
    CHECK(resolve_reference(base, "").value() == "http://example.org/dir/doc.owl");
    CHECK(resolve_reference(base, "#frag").value() == "http://example.org/dir/doc.owl#frag");
    CHECK(resolve_reference(base, "http://other.net/x").value() == "http://other.net/x");
    CHECK(resolve_reference(base, "other.owl").value() == "http://example.org/dir/other.owl");
    CHECK(resolve_reference(base, "../up.owl").value() == "http://example.org/up.owl");
    CHECK(resolve_reference(base, "/rooted.owl").value() == "http://example.org/rooted.owl");
    CHECK(resolve_reference(base, "sub/more.owl#f").value() ==
          "http://example.org/dir/sub/more.owl#f");
}
