#include "pwo/sparql/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace pwo::sparql {

namespace {

using rdf::Iri;
using rdf::Literal;
using rdf::Term;

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    return out;
}

// SPARQL keywords this subset deliberately rejects.
const std::set<std::string>& unsupported_keywords() {
    static const std::set<std::string> kws = {
        "ASK", "BASE", "BIND", "CONSTRUCT", "DELETE", "DESCRIBE", "DISTINCT",
        "EXISTS", "FILTER", "FROM", "GRAPH", "GROUP", "HAVING", "INSERT",
        "LIMIT", "MINUS", "NOT", "OFFSET", "OPTIONAL", "ORDER", "REDUCED",
        "SERVICE", "VALUES"};
    return kws;
}

struct Token {
    enum class Kind {
        Word,     // bare identifier: keywords and `a`
        Var,      // ?name
        IriRef,   // <...>
        PName,    // prefix:local or prefix:
        String,   // "..."
        LangTag,  // @tag
        HatHat,   // ^^
        LBrace,
        RBrace,
        Dot,
        Star,
        End,
    };
    Kind kind = Kind::End;
    std::size_t pos = 0;
    std::string text;    // word text, var name, IRI body, or literal value
    std::string prefix;  // PName only
    std::string local;   // PName only
};

bool is_word_start(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}
bool is_word_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}
// Local parts additionally allow '-' and '.' interior characters.
bool is_local_char(char ch) { return is_word_char(ch) || ch == '-' || ch == '.'; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = std::move(current_);
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(std::size_t pos, std::string expected) {
        throw QuerySyntaxError(pos, std::move(expected));
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    void advance() {
        skip_space();
        current_ = Token{};
        current_.pos = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }
        char ch = text_[pos_];
        switch (ch) {
            case '{': ++pos_; current_.kind = Token::Kind::LBrace; return;
            case '}': ++pos_; current_.kind = Token::Kind::RBrace; return;
            case '.': ++pos_; current_.kind = Token::Kind::Dot; return;
            case '*': ++pos_; current_.kind = Token::Kind::Star; return;
            default: break;
        }
        if (ch == '^') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '^') {
                pos_ += 2;
                current_.kind = Token::Kind::HatHat;
                return;
            }
            fail(pos_, "'^^' datatype marker");
        }
        if (ch == '?' || ch == '$') {
            std::size_t start = ++pos_;
            if (pos_ >= text_.size() || !is_word_start(text_[pos_]))
                fail(current_.pos, "a variable name after '?'");
            while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
            current_.kind = Token::Kind::Var;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (ch == '<') {
            std::size_t start = ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '>') {
                if (text_[pos_] == '\n') fail(current_.pos, "'>' closing the IRI");
                ++pos_;
            }
            if (pos_ >= text_.size()) fail(current_.pos, "'>' closing the IRI");
            current_.kind = Token::Kind::IriRef;
            current_.text = std::string(text_.substr(start, pos_ - start));
            ++pos_;
            return;
        }
        if (ch == '"') {
            ++pos_;
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                char c = text_[pos_];
                if (c == '\n') fail(current_.pos, "closing '\"'");
                if (c == '\\') {
                    if (pos_ + 1 >= text_.size()) fail(current_.pos, "closing '\"'");
                    char esc = text_[++pos_];
                    switch (esc) {
                        case '"': value += '"'; break;
                        case '\\': value += '\\'; break;
                        case 'n': value += '\n'; break;
                        case 't': value += '\t'; break;
                        case 'r': value += '\r'; break;
                        default: fail(pos_ - 1, "a valid escape (\\\" \\\\ \\n \\t \\r)");
                    }
                    ++pos_;
                } else {
                    value += c;
                    ++pos_;
                }
            }
            if (pos_ >= text_.size()) fail(current_.pos, "closing '\"'");
            ++pos_;
            current_.kind = Token::Kind::String;
            current_.text = std::move(value);
            return;
        }
        if (ch == '@') {
            std::size_t start = ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'))
                ++pos_;
            if (pos_ == start) fail(current_.pos, "a language tag after '@'");
            current_.kind = Token::Kind::LangTag;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (is_word_start(ch)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == ':') {
                std::string prefix(text_.substr(start, pos_ - start));
                ++pos_;
                std::size_t local_start = pos_;
                while (pos_ < text_.size() && is_local_char(text_[pos_])) ++pos_;
                current_.kind = Token::Kind::PName;
                current_.prefix = std::move(prefix);
                current_.local = std::string(text_.substr(local_start, pos_ - local_start));
                return;
            }
            current_.kind = Token::Kind::Word;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (ch == ':') {
            // Empty-prefix PName.
            ++pos_;
            std::size_t local_start = pos_;
            while (pos_ < text_.size() && is_local_char(text_[pos_])) ++pos_;
            current_.kind = Token::Kind::PName;
            current_.local = std::string(text_.substr(local_start, pos_ - local_start));
            return;
        }
        fail(pos_, "a query token");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    QueryAst run() {
        QueryAst q;
        while (is_word("PREFIX")) {
            lexer_.take();
            Token name = expect(Token::Kind::PName, "a prefix name ending in ':'");
            if (!name.local.empty())
                throw QuerySyntaxError(name.pos, "a bare prefix name before the IRI");
            Token iri = expect(Token::Kind::IriRef, "the prefix IRI in angle brackets");
            q.prefixes.add(name.prefix, Iri(iri.text));
        }
        reject_unsupported_word();
        if (!is_word("SELECT"))
            throw QuerySyntaxError(lexer_.peek().pos, "SELECT");
        lexer_.take();
        reject_unsupported_word();
        if (lexer_.peek().kind == Token::Kind::Star) {
            lexer_.take();
            q.select_all = true;
        } else {
            while (lexer_.peek().kind == Token::Kind::Var)
                q.projection.push_back(Variable{lexer_.take().text});
            if (q.projection.empty())
                throw QuerySyntaxError(lexer_.peek().pos, "'*' or at least one ?variable");
        }
        reject_unsupported_word();
        if (!is_word("WHERE"))
            throw QuerySyntaxError(lexer_.peek().pos, "WHERE");
        lexer_.take();
        q.where = parse_group(q.prefixes);
        reject_unsupported_word();
        if (lexer_.peek().kind != Token::Kind::End)
            throw QuerySyntaxError(lexer_.peek().pos, "end of query");
        return q;
    }

private:
    bool is_word(std::string_view keyword) const {
        return lexer_.peek().kind == Token::Kind::Word && upper(lexer_.peek().text) == keyword;
    }

    void reject_unsupported_word() {
        if (lexer_.peek().kind != Token::Kind::Word) return;
        std::string kw = upper(lexer_.peek().text);
        if (unsupported_keywords().count(kw))
            throw QuerySyntaxError(lexer_.peek().pos, "supported syntax (unsupported keyword " + kw + ")");
    }

    Token expect(Token::Kind kind, std::string what) {
        if (lexer_.peek().kind != kind)
            throw QuerySyntaxError(lexer_.peek().pos, std::move(what));
        return lexer_.take();
    }

    // group := '{' (triples | group-or-union)* '}', collapsing single parts.
    PatternGroup parse_group(const rdf::PrefixMap& prefixes) {
        expect(Token::Kind::LBrace, "'{'");
        std::vector<PatternGroup> parts;
        bool last_was_bgp = false;
        while (true) {
            reject_unsupported_word();
            const Token& t = lexer_.peek();
            if (t.kind == Token::Kind::RBrace) {
                lexer_.take();
                break;
            }
            if (t.kind == Token::Kind::End)
                throw QuerySyntaxError(t.pos, "'}' closing the group");
            if (t.kind == Token::Kind::LBrace) {
                parts.push_back(parse_union_chain(prefixes));
                last_was_bgp = false;
                continue;
            }
            if (last_was_bgp)
                throw QuerySyntaxError(t.pos, "'.' between triple patterns");
            parts.push_back(PatternGroup{parse_triples(prefixes)});
            last_was_bgp = true;
        }
        if (parts.empty()) return PatternGroup{std::vector<TriplePattern>{}};
        if (parts.size() == 1) return std::move(parts.front());
        return PatternGroup{std::move(parts)};
    }

    PatternGroup parse_union_chain(const rdf::PrefixMap& prefixes) {
        PatternGroup left = parse_group(prefixes);
        while (is_word("UNION")) {
            lexer_.take();
            PatternGroup right = parse_group(prefixes);
            UnionGroup u;
            u.left = std::make_unique<PatternGroup>(std::move(left));
            u.right = std::make_unique<PatternGroup>(std::move(right));
            left = PatternGroup{std::move(u)};
        }
        return left;
    }

    std::vector<TriplePattern> parse_triples(const rdf::PrefixMap& prefixes) {
        std::vector<TriplePattern> patterns;
        while (true) {
            PatternTerm s = parse_term(prefixes, Position::Subject);
            PatternTerm p = parse_term(prefixes, Position::Predicate);
            PatternTerm o = parse_term(prefixes, Position::Object);
            patterns.push_back({std::move(s), std::move(p), std::move(o)});
            if (lexer_.peek().kind != Token::Kind::Dot) break;
            lexer_.take();
            // A trailing dot before '}' or a nested group is allowed.
            Token::Kind next = lexer_.peek().kind;
            if (next == Token::Kind::RBrace || next == Token::Kind::LBrace ||
                next == Token::Kind::End)
                break;
        }
        return patterns;
    }

    enum class Position { Subject, Predicate, Object };

    PatternTerm parse_term(const rdf::PrefixMap& prefixes, Position position) {
        reject_unsupported_word();
        const char* role = position == Position::Subject
                               ? "a subject term"
                               : position == Position::Predicate ? "a predicate term"
                                                                 : "an object term";
        Token t = lexer_.take();
        switch (t.kind) {
            case Token::Kind::Var:
                return Variable{std::move(t.text)};
            case Token::Kind::IriRef:
                return Term(Iri(std::move(t.text)));
            case Token::Kind::PName:
                return Term(prefixes.expand(t.prefix, t.local));
            case Token::Kind::Word:
                if (t.text == "a" && position == Position::Predicate)
                    return Term(rdf::ns::rdf_type());
                throw QuerySyntaxError(t.pos, std::string(role));
            case Token::Kind::String: {
                if (position == Position::Subject)
                    throw QuerySyntaxError(t.pos, "a resource (literals cannot be subjects)");
                if (position == Position::Predicate)
                    throw QuerySyntaxError(t.pos, "an IRI or variable predicate");
                if (lexer_.peek().kind == Token::Kind::HatHat) {
                    lexer_.take();
                    Token dt = lexer_.take();
                    if (dt.kind == Token::Kind::IriRef)
                        return Term(Literal::typed(std::move(t.text), Iri(std::move(dt.text))));
                    if (dt.kind == Token::Kind::PName)
                        return Term(Literal::typed(std::move(t.text),
                                                   prefixes.expand(dt.prefix, dt.local)));
                    throw QuerySyntaxError(dt.pos, "a datatype IRI after '^^'");
                }
                if (lexer_.peek().kind == Token::Kind::LangTag)
                    return Term(Literal::tagged(std::move(t.text), lexer_.take().text));
                return Term(Literal::plain(std::move(t.text)));
            }
            default:
                throw QuerySyntaxError(t.pos, std::string(role));
        }
    }

    Lexer lexer_;
};

void collect_variables(const PatternTerm& t, std::vector<std::string>& out) {
    if (const auto* v = std::get_if<Variable>(&t)) {
        if (std::find(out.begin(), out.end(), v->name) == out.end()) out.push_back(v->name);
    }
}

void collect_variables(const PatternGroup& g, std::vector<std::string>& out) {
    if (g.is_bgp()) {
        for (const TriplePattern& p : g.bgp()) {
            collect_variables(p.subject, out);
            collect_variables(p.predicate, out);
            collect_variables(p.object, out);
        }
    } else if (g.is_union()) {
        collect_variables(*g.union_node().left, out);
        collect_variables(*g.union_node().right, out);
    } else {
        for (const PatternGroup& part : g.sequence()) collect_variables(part, out);
    }
}

} // namespace

QueryAst parse_query(std::string_view text) { return Parser(text).run(); }

std::vector<std::string> header_of(const QueryAst& q) {
    std::vector<std::string> out;
    if (q.select_all) {
        collect_variables(q.where, out);
        return out;
    }
    for (const Variable& v : q.projection) out.push_back(v.name);
    return out;
}

} // namespace pwo::sparql
