#include "unlrdf/uw.hpp"

namespace unlrdf {

namespace {

bool needs_escape(char c) {
    switch (c) {
    case '(':
    case ')':
    case ',':
    case ':':
    case '>':
    case '<':
    case '\\':
    case ' ':
    case '\t':
    case '\n':
    case '\r':
        return true;
    default:
        return false;
    }
}

void append_escaped(std::string& out, std::string_view raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (needs_escape(c)) {
            out.push_back('\\');
        } else if (c == '.' && i + 1 < raw.size() && raw[i + 1] == '@') {
            // ".@" inside a component would read as an attribute marker.
            out.push_back('\\');
        }
        out.push_back(c);
    }
}

} // namespace

std::string to_text(const UwExpression& expr, bool with_instance, bool with_attributes) {
    std::string out;
    append_escaped(out, expr.headword);
    if (!expr.restrictions.empty()) {
        out.push_back('(');
        bool first = true;
        for (const auto& r : expr.restrictions) {
            if (!first)
                out.push_back(',');
            first = false;
            append_escaped(out, r.relation);
            out.push_back(r.direction);
            bool first_target = true;
            for (const auto& t : r.targets) {
                if (!first_target)
                    out.push_back('>');
                first_target = false;
                append_escaped(out, t);
            }
        }
        out.push_back(')');
    }
    if (with_instance && expr.instance_id) {
        out.push_back(':');
        append_escaped(out, *expr.instance_id);
    }
    if (with_attributes) {
        for (const auto& a : expr.attributes) {
            out.append(".@");
            append_escaped(out, a);
        }
    }
    return out;
}

std::string occurrence_key(const UwExpression& expr) {
    return to_text(expr, /*with_instance=*/true, /*with_attributes=*/false);
}

std::string lexeme_key(const UwExpression& expr) {
    return to_text(expr, /*with_instance=*/false, /*with_attributes=*/false);
}

} // namespace unlrdf
