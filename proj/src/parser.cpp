#include "unlrdf/parser.hpp"

#include <map>
#include <set>
#include <sstream>

namespace unlrdf {

namespace {

bool ident_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-';
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (at_end())
            return;
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
            advance();
    }

    bool lookahead(std::string_view literal) const {
        return text_.compare(pos_, literal.size(), literal) == 0;
    }

    bool consume(std::string_view literal) {
        if (!lookahead(literal))
            return false;
        for (std::size_t i = 0; i < literal.size(); ++i)
            advance();
        return true;
    }

    void expect(std::string_view literal, const char* context) {
        if (!consume(literal))
            fail(std::string("expected '") + std::string(literal) + "' " + context);
    }

    SourceSpan span(std::size_t length = 1) const { return {line_, column_, length}; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(span(), message);
    }

    // Everything up to (not including) the terminator literal.
    std::string until(std::string_view terminator, const char* context) {
        std::size_t found = text_.find(terminator, pos_);
        if (found == std::string_view::npos)
            fail(std::string("unterminated ") + context + ", expected '" +
                 std::string(terminator) + "'");
        std::string out(text_.substr(pos_, found - pos_));
        while (pos_ < found)
            advance();
        return out;
    }

    std::string ident(const char* context) {
        std::string out;
        while (!at_end() && ident_char(peek())) {
            out.push_back(peek());
            advance();
        }
        if (out.empty())
            fail(std::string("expected ") + context);
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

bool ws_char(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Reads a backslash-escapable component. Stops at any of the stop characters
// (unescaped), at whitespace, and at an unescaped ".@" attribute marker.
std::string component(Cursor& cur, std::string_view stops, const char* context) {
    std::string out;
    while (!cur.at_end()) {
        char c = cur.peek();
        if (c == '\\') {
            cur.advance();
            if (cur.at_end())
                cur.fail("dangling escape");
            out.push_back(cur.peek());
            cur.advance();
            continue;
        }
        if (ws_char(c) || stops.find(c) != std::string_view::npos)
            break;
        if (c == '.' && cur.peek(1) == '@')
            break;
        out.push_back(c);
        cur.advance();
    }
    if (out.empty())
        cur.fail(std::string("empty ") + context);
    return out;
}

// uwExpr := headword restr? (':' instId)? ('.@' attr)*
UwExpression parse_expression(Cursor& cur) {
    UwExpression expr;
    expr.headword = component(cur, "(),:><", "headword");
    if (cur.peek() == '(') {
        SourceSpan open = cur.span();
        cur.advance();
        while (true) {
            cur.skip_ws();
            Restriction r;
            r.relation = component(cur, "(),:><", "restriction relation");
            if (cur.peek() == '>' || cur.peek() == '<') {
                r.direction = cur.peek();
                cur.advance();
            } else {
                cur.fail("expected '>' or '<' after restriction relation");
            }
            r.targets.push_back(component(cur, "(),:><", "restriction target"));
            while (cur.peek() == '>') {
                cur.advance();
                r.targets.push_back(component(cur, "(),:><", "restriction target"));
            }
            expr.restrictions.push_back(std::move(r));
            cur.skip_ws();
            if (cur.peek() == ',') {
                cur.advance();
                continue;
            }
            if (cur.peek() == ')') {
                cur.advance();
                break;
            }
            if (cur.at_end())
                throw ParseError(open, "unbalanced parenthesis in restriction list");
            cur.fail("expected ',' or ')' in restriction list");
        }
    }
    if (cur.peek() == ':') {
        cur.advance();
        expr.instance_id = component(cur, "(),:><", "instance id");
    }
    while (cur.peek() == '.' && cur.peek(1) == '@') {
        cur.advance();
        cur.advance();
        std::string attr = component(cur, "(),:><", "attribute");
        expr.add_attribute(attr);
    }
    return expr;
}

ParsedNode parse_node(Cursor& cur) {
    ParsedNode node;
    cur.skip_ws();
    if (cur.peek() == ':') {
        cur.advance();
        node.is_scope = true;
        node.scope_id = cur.ident("scope id after ':'");
    } else {
        node.expression = parse_expression(cur);
    }
    return node;
}

ParsedRelationLine parse_relation_line_at(Cursor& cur) {
    ParsedRelationLine line;
    cur.skip_ws();
    line.label = cur.ident("relation label");
    if (cur.peek() == ':') {
        cur.advance();
        line.scope = cur.ident("scope qualifier");
    }
    SourceSpan open = cur.span();
    cur.expect("(", "after relation label");
    line.source = parse_node(cur);
    cur.skip_ws();
    if (!cur.consume(","))
        cur.fail("expected ',' between relation nodes");
    line.target = parse_node(cur);
    cur.skip_ws();
    if (!cur.consume(")"))
        throw ParseError(open, "unbalanced parenthesis in relation line");
    return line;
}

class DocumentParser {
public:
    DocumentParser(std::string_view text, const ParseOptions& options)
        : cur_(text), options_(options) {}

    UnlDocument run() {
        UnlDocument doc;
        doc.counter_base = options_.counter_base;
        next_counter_ = options_.counter_base;
        cur_.skip_ws();
        if (cur_.at_end()) {
            doc.next_counter = next_counter_;
            return doc;
        }
        if (cur_.consume("[D]")) {
            doc.explicit_structure = true;
            cur_.skip_ws();
            while (!cur_.consume("[/D]")) {
                if (cur_.at_end())
                    cur_.fail("unterminated [D] block");
                doc.paragraphs.push_back(parse_paragraph());
                cur_.skip_ws();
            }
        } else {
            Paragraph para;
            while (!cur_.at_end()) {
                para.sentences.push_back(parse_sentence());
                cur_.skip_ws();
            }
            doc.paragraphs.push_back(std::move(para));
        }
        cur_.skip_ws();
        if (!cur_.at_end())
            cur_.fail("unexpected trailing content after document");
        doc.next_counter = next_counter_;
        return doc;
    }

private:
    Paragraph parse_paragraph() {
        Paragraph para;
        cur_.expect("[P]", "to open a paragraph");
        cur_.skip_ws();
        while (!cur_.consume("[/P]")) {
            if (cur_.at_end())
                cur_.fail("unterminated [P] block");
            para.sentences.push_back(parse_sentence());
            cur_.skip_ws();
        }
        return para;
    }

    Sentence parse_sentence() {
        Sentence sentence;
        cur_.expect("[S", "to open a sentence");
        if (cur_.consume(":")) {
            sentence.id = cur_.ident("sentence label");
            sentence.explicit_id = true;
        } else {
            sentence.id = "S" + std::to_string(++auto_sentence_ordinal_);
            sentence.explicit_id = false;
        }
        cur_.expect("]", "after sentence header");
        if (!seen_sentence_ids_.insert(sentence.id).second)
            cur_.fail("duplicate sentence id '" + sentence.id + "'");
        cur_.skip_ws();

        if (cur_.consume("{org")) {
            if (cur_.consume(":"))
                sentence.org_tag = cur_.ident("org tag");
            cur_.expect("}", "after org header");
            sentence.original_text = cur_.until("{/org}", "{org} section");
            cur_.expect("{/org}", "to close the org section");
            cur_.skip_ws();
        }

        cur_.expect("{unl}", "to open the unl section");
        cur_.skip_ws();
        std::map<std::string, SourceSpan> node_scope_refs;
        std::set<std::string> qualifier_scopes;
        while (!cur_.consume("{/unl}")) {
            if (cur_.at_end())
                cur_.fail("unterminated {unl} section");
            SourceSpan line_span = cur_.span();
            ParsedRelationLine line = parse_relation_line_at(cur_);

            RelationInstance rel;
            rel.label = line.label;
            rel.scope = line.scope.value_or(sentence.id);
            if (line.scope && *line.scope != sentence.id) {
                sentence.add_scope(*line.scope, next_counter_);
                qualifier_scopes.insert(*line.scope);
            }
            rel.source = resolve_node(sentence, line.source, line_span, node_scope_refs);
            rel.target = resolve_node(sentence, line.target, line_span, node_scope_refs);
            sentence.relations.push_back(std::move(rel));
            cur_.skip_ws();
        }
        for (const auto& [scope_id, span] : node_scope_refs)
            if (qualifier_scopes.count(scope_id) == 0 && scope_id != sentence.id)
                throw ParseError(span, "scope ':" + scope_id +
                                           "' is referenced as a node but no relation line "
                                           "declares it");

        // Scopes are numbered after the occurrences of the sentence.
        for (const auto& scope_id : sentence.scope_order)
            sentence.scope_counters[scope_id] = next_counter_++;

        cur_.skip_ws();
        cur_.expect("[/S]", "to close the sentence");
        return sentence;
    }

    NodeRef resolve_node(Sentence& sentence, const ParsedNode& node, SourceSpan span,
                         std::map<std::string, SourceSpan>& node_scope_refs) {
        if (node.is_scope) {
            if (node.scope_id != sentence.id)
                sentence.add_scope(node.scope_id, next_counter_);
            node_scope_refs.emplace(node.scope_id, span);
            return NodeRef::scope(node.scope_id);
        }
        return NodeRef::occurrence(sentence.add_occurrence(node.expression, next_counter_));
    }

    Cursor cur_;
    ParseOptions options_;
    std::uint64_t next_counter_ = 1;
    std::size_t auto_sentence_ordinal_ = 0;
    std::set<std::string> seen_sentence_ids_;
};

void format_sentence(std::ostream& out, const Sentence& sentence) {
    out << "[S";
    if (sentence.explicit_id)
        out << ":" << sentence.id;
    out << "]\n";
    if (sentence.original_text) {
        out << "{org";
        if (!sentence.org_tag.empty())
            out << ":" << sentence.org_tag;
        out << "}" << *sentence.original_text << "{/org}\n";
    }
    out << "{unl}\n";
    std::set<std::string> attributed;
    auto node_text = [&](const NodeRef& node) {
        if (node.kind == NodeRef::Kind::scope)
            return ":" + node.key;
        const Occurrence* occ = sentence.occurrence(node.key);
        bool with_attrs = attributed.insert(node.key).second;
        return to_text(occ->expression, /*with_instance=*/true, with_attrs);
    };
    for (const auto& rel : sentence.relations) {
        out << rel.label;
        if (rel.scope != sentence.id)
            out << ":" << rel.scope;
        out << "(" << node_text(rel.source) << "," << node_text(rel.target) << ")\n";
    }
    out << "{/unl}\n[/S]\n";
}

} // namespace

UwExpression parse_uw(const std::string& text) {
    Cursor cur(text);
    cur.skip_ws();
    UwExpression expr = parse_expression(cur);
    cur.skip_ws();
    if (!cur.at_end())
        cur.fail("unexpected trailing content after UW expression");
    return expr;
}

ParsedRelationLine parse_relation_line(const std::string& text) {
    Cursor cur(text);
    ParsedRelationLine line = parse_relation_line_at(cur);
    cur.skip_ws();
    if (!cur.at_end())
        cur.fail("unexpected trailing content after relation line");
    return line;
}

UnlDocument parse_unl_document(const std::string& text, const ParseOptions& options) {
    return DocumentParser(text, options).run();
}

std::string format_unl_document(const UnlDocument& doc) {
    std::ostringstream out;
    if (doc.explicit_structure) {
        out << "[D]\n";
        for (const auto& para : doc.paragraphs) {
            out << "[P]\n";
            for (const auto& sentence : para.sentences)
                format_sentence(out, sentence);
            out << "[/P]\n";
        }
        out << "[/D]\n";
    } else {
        for (const auto& para : doc.paragraphs)
            for (const auto& sentence : para.sentences)
                format_sentence(out, sentence);
    }
    return out.str();
}

} // namespace unlrdf
