#include "pwo/sparql/render.hpp"

#include <algorithm>

#include "json.hpp"

namespace pwo::sparql {

namespace {

using Cell = std::optional<rdf::Term>;

std::string local_name(const std::string& iri) {
    std::size_t cut = iri.find_last_of("#/");
    return cut == std::string::npos || cut + 1 >= iri.size() ? iri : iri.substr(cut + 1);
}

std::string text_cell(const Cell& cell) {
    if (!cell) return "";
    if (cell->is_iri()) return local_name(cell->iri().value());
    if (cell->is_blank()) return "_:" + cell->blank().label();
    return "\"" + cell->literal().lexical() + "\"";
}

std::string render_text(const SolutionTable& t) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back(t.header);
    for (const auto& row : t.rows) {
        std::vector<std::string> line;
        line.reserve(row.size());
        for (const Cell& cell : row) line.push_back(text_cell(cell));
        grid.push_back(std::move(line));
    }
    std::vector<std::size_t> width(t.header.size(), 0);
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i)
            width[i] = std::max(width[i], line[i].size());
    }
    std::string out;
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out += "  ";
            out += line[i];
            if (i + 1 < line.size()) out.append(width[i] - line[i].size(), ' ');
        }
        out += '\n';
    };
    emit(grid.front());
    std::vector<std::string> rule;
    rule.reserve(width.size());
    for (std::size_t w : width) rule.push_back(std::string(w, '-'));
    emit(rule);
    for (std::size_t i = 1; i < grid.size(); ++i) emit(grid[i]);
    return out;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string out = "\"";
    for (char ch : value) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

std::string csv_cell(const Cell& cell) {
    if (!cell) return "";
    if (cell->is_iri()) return cell->iri().value();
    if (cell->is_blank()) return "_:" + cell->blank().label();
    return cell->literal().lexical();
}

std::string render_csv(const SolutionTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) out += ',';
        out += csv_field(t.header[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_field(csv_cell(row[i]));
        }
        out += '\n';
    }
    return out;
}

std::string render_tsv(const SolutionTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) out += '\t';
        out += t.header[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            if (row[i]) out += rdf::to_ntriples(*row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const SolutionTable& t) {
    nlohmann::ordered_json doc;
    doc["head"]["vars"] = t.header;
    nlohmann::ordered_json bindings = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json entry = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!row[i]) continue;
            const rdf::Term& term = *row[i];
            nlohmann::ordered_json cell;
            if (term.is_iri()) {
                cell["type"] = "uri";
                cell["value"] = term.iri().value();
            } else if (term.is_blank()) {
                cell["type"] = "bnode";
                cell["value"] = term.blank().label();
            } else {
                cell["type"] = "literal";
                cell["value"] = term.literal().lexical();
                if (term.literal().datatype())
                    cell["datatype"] = term.literal().datatype()->value();
                if (term.literal().lang()) cell["xml:lang"] = *term.literal().lang();
            }
            entry[t.header[i]] = std::move(cell);
        }
        bindings.push_back(std::move(entry));
    }
    doc["results"]["bindings"] = std::move(bindings);
    return doc.dump(2) + "\n";
}

std::string xml_escape_text(const std::string& in) {
    std::string out;
    for (char ch : in) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string xml_escape_attr(const std::string& in) {
    std::string out;
    for (char ch : in) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string render_xml(const SolutionTable& t) {
    std::string out = "<?xml version=\"1.0\"?>\n";
    out += "<sparql xmlns=\"http://www.w3.org/2005/sparql-results#\">\n";
    out += "  <head>\n";
    for (const std::string& var : t.header)
        out += "    <variable name=\"" + xml_escape_attr(var) + "\"/>\n";
    out += "  </head>\n";
    out += "  <results>\n";
    for (const auto& row : t.rows) {
        out += "    <result>\n";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!row[i]) continue;
            const rdf::Term& term = *row[i];
            out += "      <binding name=\"" + xml_escape_attr(t.header[i]) + "\">";
            if (term.is_iri()) {
                out += "<uri>" + xml_escape_text(term.iri().value()) + "</uri>";
            } else if (term.is_blank()) {
                out += "<bnode>" + xml_escape_text(term.blank().label()) + "</bnode>";
            } else {
                const rdf::Literal& lit = term.literal();
                out += "<literal";
                if (lit.datatype())
                    out += " datatype=\"" + xml_escape_attr(lit.datatype()->value()) + "\"";
                if (lit.lang()) out += " xml:lang=\"" + xml_escape_attr(*lit.lang()) + "\"";
                out += ">" + xml_escape_text(lit.lexical()) + "</literal>";
            }
            out += "</binding>\n";
        }
        out += "    </result>\n";
    }
    out += "  </results>\n";
    out += "</sparql>\n";
    return out;
}

} // namespace

std::optional<ResultFormat> parse_format(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "text") return ResultFormat::Text;
    if (lower == "csv") return ResultFormat::Csv;
    if (lower == "tsv") return ResultFormat::Tsv;
    if (lower == "json") return ResultFormat::Json;
    if (lower == "xml") return ResultFormat::Xml;
    return std::nullopt;
}

std::string render(const SolutionTable& table, ResultFormat format) {
    switch (format) {
        case ResultFormat::Text: return render_text(table);
        case ResultFormat::Csv: return render_csv(table);
        case ResultFormat::Tsv: return render_tsv(table);
        case ResultFormat::Json: return render_json(table);
        case ResultFormat::Xml: return render_xml(table);
    }
    return {};
}

} // namespace pwo::sparql
