#include "unlrdf/turtle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace unlrdf {

namespace {

// ---------------------------------------------------------------- emission

bool local_name_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-' || c == '%' || c == '~';
}

// A local name our own reader can tokenize: name characters plus
// paren-balanced '(' ')' ',' and interior dots.
bool emittable_local(std::string_view local) {
    if (local.empty())
        return false;
    int depth = 0;
    for (std::size_t i = 0; i < local.size(); ++i) {
        char c = local[i];
        if (local_name_char(c))
            continue;
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            if (--depth < 0)
                return false;
        } else if (c == ',') {
            if (depth == 0)
                return false;
        } else if (c == '.') {
            if (i + 1 >= local.size())
                return false;
        } else {
            return false;
        }
    }
    if (depth != 0)
        return false;
    char first = local.front();
    return local_name_char(first) || first == '(';
}

class Emitter {
public:
    explicit Emitter(const QuadStore& store) : store_(store) {}

    std::string compress(const std::string& iri) const {
        const std::string* best_prefix = nullptr;
        const std::string* best_ns = nullptr;
        for (const auto& [prefix, space] : store_.prefixes()) {
            if (iri.size() >= space.size() && iri.compare(0, space.size(), space) == 0) {
                if (!best_ns || space.size() > best_ns->size()) {
                    best_prefix = &prefix;
                    best_ns = &space;
                }
            }
        }
        if (best_ns) {
            std::string local = iri.substr(best_ns->size());
            if (emittable_local(local))
                return *best_prefix + ":" + local;
        }
        return "<" + iri + ">";
    }

    static std::string escape_literal(const std::string& text) {
        std::string out;
        for (char c : text) {
            switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
            }
        }
        return out;
    }

    std::string term_text(const Term& term) const {
        switch (term.kind) {
        case Term::Kind::iri:
            return compress(term.value);
        case Term::Kind::literal: {
            if (!term.lang.empty())
                return "\"" + escape_literal(term.value) + "\"@" + term.lang;
            if (term.datatype == ns::xsd_("integer") && is_integer_lexical(term.value))
                return term.value;
            if (term.datatype.empty() || term.datatype == ns::xsd_("string"))
                return "\"" + escape_literal(term.value) + "\"";
            return "\"" + escape_literal(term.value) + "\"^^" + compress(term.datatype);
        }
        case Term::Kind::list: {
            std::string out = "(";
            for (const auto& item : term.items) {
                out.push_back(' ');
                out += term_text(item);
            }
            out += " )";
            if (term.items.empty())
                out = "( )";
            return out;
        }
        }
        return {};
    }

    static bool is_integer_lexical(const std::string& text) {
        if (text.empty())
            return false;
        std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
        if (i >= text.size())
            return false;
        for (; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9')
                return false;
        return true;
    }

    void emit_prefixes(std::ostream& out) const {
        for (const auto& [prefix, space] : store_.prefixes())
            out << "@prefix " << prefix << ": <" << space << "> .\n";
    }

    // Groups and prints all quads of one graph, indented by the given margin.
    void emit_graph(std::ostream& out, const std::string& graph, const std::string& margin) const {
        // subject -> predicate -> objects, with rdf:type hoisted first
        std::map<std::string, std::map<std::string, std::vector<Term>>> grouped;
        for (const auto& quad : store_.quads()) {
            if (quad.graph != graph)
                continue;
            grouped[quad.subject][quad.predicate].push_back(quad.object);
        }
        bool first_subject = true;
        for (const auto& [subject, predicates] : grouped) {
            if (!first_subject)
                out << "\n";
            first_subject = false;
            out << margin << compress(subject) << "\n";
            std::vector<std::pair<std::string, const std::vector<Term>*>> ordered;
            const std::string type_iri = ns::rdf_("type");
            if (auto it = predicates.find(type_iri); it != predicates.end())
                ordered.emplace_back(type_iri, &it->second);
            for (const auto& [predicate, objects] : predicates)
                if (predicate != type_iri)
                    ordered.emplace_back(predicate, &objects);
            for (std::size_t i = 0; i < ordered.size(); ++i) {
                const auto& [predicate, objects] = ordered[i];
                out << margin << "  "
                    << (predicate == type_iri ? "a" : compress(predicate)) << " ";
                auto sorted = *objects;
                std::sort(sorted.begin(), sorted.end());
                for (std::size_t j = 0; j < sorted.size(); ++j) {
                    if (j > 0)
                        out << " , ";
                    out << term_text(sorted[j]);
                }
                out << (i + 1 == ordered.size() ? " ." : " ;") << "\n";
            }
        }
    }

    std::vector<std::string> graph_names() const {
        std::vector<std::string> names;
        for (const auto& quad : store_.quads())
            if (!quad.graph.empty())
                names.push_back(quad.graph);
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        return names;
    }

    bool has_default_triples() const {
        return std::any_of(store_.quads().begin(), store_.quads().end(),
                           [](const Quad& q) { return q.graph.empty(); });
    }

private:
    const QuadStore& store_;
};

// ----------------------------------------------------------------- loading

struct Token {
    enum class Kind {
        iri,       // absolute, already expanded
        string_lit,
        integer_lit,
        lang_tag,
        keyword_a,
        prefix_decl, // "@prefix"
        pname_ns,    // "prefix:" in a @prefix declaration
        dot,
        semicolon,
        comma,
        lparen,
        rparen,
        lbrace,
        rbrace,
        carets, // ^^
        end,
    };
    Kind kind;
    std::string text;
    std::size_t line;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::size_t line() const { return line_; }

    const std::map<std::string, std::string>& prefixes() const { return prefixes_; }
    void declare_prefix(const std::string& prefix, const std::string& iri) {
        prefixes_[prefix] = iri;
    }

    // The token after "@prefix" is always a bare prefix label.
    void expect_prefix_label() { expect_prefix_label_ = true; }

    Token next() {
        skip_trivia();
        if (at_end())
            return {Token::Kind::end, "", line_};
        char c = peek();
        if (c == '<')
            return iri_ref();
        if (c == '"')
            return string_lit();
        if (c == '^' && peek(1) == '^') {
            advance();
            advance();
            return {Token::Kind::carets, "^^", line_};
        }
        if (c == '@')
            return at_token();
        if (c == '.')
            return punct(Token::Kind::dot);
        if (c == ';')
            return punct(Token::Kind::semicolon);
        if (c == ',')
            return punct(Token::Kind::comma);
        if (c == '(')
            return punct(Token::Kind::lparen);
        if (c == ')')
            return punct(Token::Kind::rparen);
        if (c == '{')
            return punct(Token::Kind::lbrace);
        if (c == '}')
            return punct(Token::Kind::rbrace);
        if (c == '[')
            throw UnsupportedConstructError(line_, "anonymous blank node");
        if (c == '_' && peek(1) == ':')
            throw UnsupportedConstructError(line_, "blank node label");
        if (is_digit(c) || ((c == '-' || c == '+') && is_digit(peek(1))))
            return integer_lit();
        return name();
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    void advance() {
        if (at_end())
            return;
        if (text_[pos_] == '\n')
            ++line_;
        ++pos_;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
    static bool name_start(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               c == '_' || c == ':';
    }

    void skip_trivia() {
        while (!at_end()) {
            if (is_ws(peek())) {
                advance();
            } else if (peek() == '#') {
                while (!at_end() && peek() != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    Token punct(Token::Kind kind) {
        std::string text(1, peek());
        advance();
        return {kind, text, line_};
    }

    Token iri_ref() {
        advance(); // '<'
        std::string out;
        while (!at_end() && peek() != '>') {
            out.push_back(peek());
            advance();
        }
        if (at_end())
            throw LoadError(line_, "unterminated IRI reference");
        advance(); // '>'
        return {Token::Kind::iri, out, line_};
    }

    Token string_lit() {
        advance(); // '"'
        std::string out;
        while (!at_end() && peek() != '"') {
            char c = peek();
            if (c == '\\') {
                advance();
                switch (peek()) {
                case 'n': out.push_back('\n'); break;
                case 'r': out.push_back('\r'); break;
                case 't': out.push_back('\t'); break;
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                default:
                    throw LoadError(line_, "unsupported string escape");
                }
                advance();
            } else {
                out.push_back(c);
                advance();
            }
        }
        if (at_end())
            throw LoadError(line_, "unterminated string literal");
        advance(); // closing quote
        return {Token::Kind::string_lit, out, line_};
    }

    Token integer_lit() {
        std::string out;
        if (peek() == '-' || peek() == '+') {
            out.push_back(peek());
            advance();
        }
        while (is_digit(peek())) {
            out.push_back(peek());
            advance();
        }
        if (peek() == '.' && is_digit(peek(1)))
            throw UnsupportedConstructError(line_, "decimal literal");
        return {Token::Kind::integer_lit, out, line_};
    }

    Token at_token() {
        advance(); // '@'
        std::string word;
        while (!at_end() && ((peek() >= 'a' && peek() <= 'z') || (peek() >= 'A' && peek() <= 'Z') ||
                             is_digit(peek()) || peek() == '-')) {
            word.push_back(peek());
            advance();
        }
        if (word == "prefix")
            return {Token::Kind::prefix_decl, word, line_};
        if (word == "base")
            throw UnsupportedConstructError(line_, "@base directive");
        if (word.empty())
            throw LoadError(line_, "stray '@'");
        return {Token::Kind::lang_tag, word, line_};
    }

    // Prefixed name, the 'a' keyword, or a prefix label in a declaration.
    Token name() {
        if (!name_start(peek()))
            throw LoadError(line_, std::string("unexpected character '") + peek() + "'");
        std::string prefix;
        while (!at_end() && peek() != ':' &&
               (local_name_char(peek()) && peek() != '%' && peek() != '~')) {
            prefix.push_back(peek());
            advance();
        }
        if (peek() != ':') {
            if (prefix == "a")
                return {Token::Kind::keyword_a, prefix, line_};
            throw UnsupportedConstructError(line_, "bare word '" + prefix + "'");
        }
        advance(); // ':'
        if (expect_prefix_label_) {
            expect_prefix_label_ = false;
            return {Token::Kind::pname_ns, prefix, line_};
        }
        std::string local = pname_local();
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end())
            throw LoadError(line_, "undeclared prefix '" + prefix + ":'");
        return {Token::Kind::iri, it->second + local, line_};
    }

    std::string pname_local() {
        std::string out;
        int depth = 0;
        while (!at_end()) {
            char c = peek();
            if (local_name_char(c)) {
                out.push_back(c);
                advance();
            } else if (c == '(') {
                ++depth;
                out.push_back(c);
                advance();
            } else if (c == ')') {
                if (depth == 0)
                    break;
                --depth;
                out.push_back(c);
                advance();
            } else if (c == ',') {
                if (depth == 0)
                    break;
                out.push_back(c);
                advance();
            } else if (c == '.') {
                char n = peek(1);
                if (local_name_char(n) || n == '(') {
                    out.push_back(c);
                    advance();
                } else {
                    break;
                }
            } else {
                break;
            }
        }
        if (depth != 0)
            throw LoadError(line_, "unbalanced parentheses in prefixed name");
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    bool expect_prefix_label_ = false;
    std::map<std::string, std::string> prefixes_;
};

class Loader {
public:
    Loader(const std::string& text, bool allow_graphs)
        : lexer_(text), allow_graphs_(allow_graphs) {
        advance();
    }

    QuadStore run() {
        while (token_.kind != Token::Kind::end)
            statement();
        return std::move(store_);
    }

private:
    void advance() { token_ = lexer_.next(); }

    void expect(Token::Kind kind, const char* what) {
        if (token_.kind != kind)
            throw LoadError(token_.line, std::string("expected ") + what);
        advance();
    }

    void statement() {
        if (token_.kind == Token::Kind::prefix_decl) {
            lexer_.expect_prefix_label();
            advance();
            if (token_.kind != Token::Kind::pname_ns)
                throw LoadError(token_.line, "expected prefix label in @prefix");
            std::string prefix = token_.text;
            advance();
            if (token_.kind != Token::Kind::iri)
                throw LoadError(token_.line, "expected IRI in @prefix");
            lexer_.declare_prefix(prefix, token_.text);
            store_.add_prefix(prefix, token_.text);
            advance();
            expect(Token::Kind::dot, "'.' after @prefix");
            return;
        }
        if (token_.kind != Token::Kind::iri)
            throw LoadError(token_.line, "expected subject IRI");
        std::string subject = token_.text;
        advance();
        if (token_.kind == Token::Kind::lbrace) {
            if (!allow_graphs_)
                throw UnsupportedConstructError(token_.line,
                                                "named graph block (use load_trig)");
            advance();
            while (token_.kind != Token::Kind::rbrace) {
                if (token_.kind == Token::Kind::end)
                    throw LoadError(token_.line, "unterminated graph block");
                graph_triples(subject);
            }
            advance(); // '}'
            return;
        }
        predicate_object_list(subject, "");
        expect(Token::Kind::dot, "'.' after triples");
    }

    void graph_triples(const std::string& graph) {
        if (token_.kind != Token::Kind::iri)
            throw LoadError(token_.line, "expected subject IRI in graph block");
        std::string subject = token_.text;
        advance();
        predicate_object_list(subject, graph);
        expect(Token::Kind::dot, "'.' after triples");
    }

    void predicate_object_list(const std::string& subject, const std::string& graph) {
        while (true) {
            std::string predicate;
            if (token_.kind == Token::Kind::keyword_a) {
                predicate = ns::rdf_("type");
                advance();
            } else if (token_.kind == Token::Kind::iri) {
                predicate = token_.text;
                advance();
            } else {
                throw LoadError(token_.line, "expected predicate");
            }
            while (true) {
                Term obj = object();
                store_.insert(subject, predicate, std::move(obj), graph);
                if (token_.kind == Token::Kind::comma) {
                    advance();
                    continue;
                }
                break;
            }
            if (token_.kind == Token::Kind::semicolon) {
                advance();
                if (token_.kind == Token::Kind::dot)
                    break; // tolerate trailing ';'
                continue;
            }
            break;
        }
    }

    Term object() {
        switch (token_.kind) {
        case Token::Kind::iri: {
            Term t = Term::iri(token_.text);
            advance();
            return t;
        }
        case Token::Kind::integer_lit: {
            Term t = Term::typed(token_.text, ns::xsd_("integer"));
            advance();
            return t;
        }
        case Token::Kind::string_lit: {
            std::string lexical = token_.text;
            advance();
            if (token_.kind == Token::Kind::lang_tag) {
                Term t = Term::lang_str(lexical, token_.text);
                advance();
                return t;
            }
            if (token_.kind == Token::Kind::carets) {
                advance();
                if (token_.kind != Token::Kind::iri)
                    throw LoadError(token_.line, "expected datatype IRI after '^^'");
                Term t = Term::typed(lexical, token_.text);
                advance();
                return t;
            }
            return Term::str(lexical);
        }
        case Token::Kind::lparen: {
            advance();
            std::vector<Term> items;
            while (token_.kind != Token::Kind::rparen) {
                if (token_.kind == Token::Kind::end)
                    throw LoadError(token_.line, "unterminated collection");
                items.push_back(object());
            }
            advance();
            return Term::list(std::move(items));
        }
        default:
            throw LoadError(token_.line, "expected object term");
        }
    }

    Lexer lexer_;
    bool allow_graphs_;
    Token token_{Token::Kind::end, "", 0};
    QuadStore store_;
};

} // namespace

std::string emit_turtle(const QuadStore& store) {
    if (store.has_named_graphs())
        throw StoreModeError("emit_turtle on a store with named graphs; use emit_trig");
    Emitter emitter(store);
    std::ostringstream out;
    emitter.emit_prefixes(out);
    if (!store.empty()) {
        out << "\n";
        emitter.emit_graph(out, "", "");
    }
    return out.str();
}

std::string emit_trig(const QuadStore& store) {
    Emitter emitter(store);
    std::ostringstream out;
    emitter.emit_prefixes(out);
    if (emitter.has_default_triples()) {
        out << "\n";
        emitter.emit_graph(out, "", "");
    }
    for (const auto& graph : emitter.graph_names()) {
        out << "\n" << emitter.compress(graph) << " {\n";
        emitter.emit_graph(out, graph, "  ");
        out << "}\n";
    }
    return out.str();
}

QuadStore load_turtle(const std::string& text) {
    return Loader(text, /*allow_graphs=*/false).run();
}

QuadStore load_trig(const std::string& text) {
    return Loader(text, /*allow_graphs=*/true).run();
}

} // namespace unlrdf
