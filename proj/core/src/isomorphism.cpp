#include "pwo/rdf/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace pwo::rdf {

namespace {

struct Split {
    std::set<Triple> ground;
    std::vector<Triple> blanked;   // triples with at least one blank node
    std::vector<std::string> labels; // distinct blank labels, first-appearance order
};

bool has_blank(const Triple& t) {
    return t.subject().is_blank() || t.object().is_blank();
}

Split split(const Graph& g) {
    Split s;
    auto note = [&s](const Term& term) {
        if (!term.is_blank()) return;
        const std::string& label = term.blank().label();
        if (std::find(s.labels.begin(), s.labels.end(), label) == s.labels.end())
            s.labels.push_back(label);
    };
    for (const Triple& t : g.triples()) {
        if (has_blank(t)) {
            s.blanked.push_back(t);
            note(t.subject());
            note(t.object());
        } else {
            s.ground.insert(t);
        }
    }
    return s;
}

Term rename(const Term& term, const std::map<std::string, std::string>& mapping) {
    if (!term.is_blank()) return term;
    return Term(BlankNode(mapping.at(term.blank().label())));
}

// Applies the current partial mapping to the blank-containing triples of `a`
// and checks the result against `b`'s blank triple multiset.
bool extend(std::size_t next, const Split& a, const Split& b,
            std::map<std::string, std::string>& mapping,
            std::set<std::string>& used) {
    if (next == a.labels.size()) {
        std::multiset<Triple> want(b.blanked.begin(), b.blanked.end());
        for (const Triple& t : a.blanked) {
            Triple mapped(rename(t.subject(), mapping), t.predicate(), rename(t.object(), mapping));
            auto it = want.find(mapped);
            if (it == want.end()) return false;
            want.erase(it);
        }
        return want.empty();
    }
    const std::string& from = a.labels[next];
    for (const std::string& to : b.labels) {
        if (used.count(to)) continue;
        mapping[from] = to;
        used.insert(to);
        if (extend(next + 1, a, b, mapping, used)) return true;
        mapping.erase(from);
        used.erase(to);
    }
    return false;
}

} // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return false;
    Split sa = split(a);
    Split sb = split(b);
    if (sa.ground != sb.ground) return false;
    if (sa.labels.size() != sb.labels.size()) return false;
    if (sa.blanked.size() != sb.blanked.size()) return false;
    std::map<std::string, std::string> mapping;
    std::set<std::string> used;
    return extend(0, sa, sb, mapping, used);
}

} // namespace pwo::rdf
