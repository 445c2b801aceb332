#include "unlrdf/uri_codec.hpp"

#include <cctype>
#include <cstdio>

namespace unlrdf {

namespace {

constexpr char hex_digits[] = "0123456789ABCDEF";

bool plain_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_';
}

void append_component(std::string& out, std::string_view raw) {
    for (unsigned char c : raw) {
        if (plain_char(static_cast<char>(c))) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex_digits[c >> 4]);
            out.push_back(hex_digits[c & 0x0F]);
        }
    }
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the trailing digit run when the name ends in "_" + 8-or-more
// digits (the occurrence counter suffix), 0 otherwise.
std::size_t counter_suffix_digits(std::string_view name) {
    std::size_t digits = 0;
    while (digits < name.size() && is_digit(name[name.size() - 1 - digits]))
        ++digits;
    if (digits < 8 || digits >= name.size())
        return 0;
    if (name[name.size() - 1 - digits] != '_')
        return 0;
    return digits;
}

class LocalNameReader {
public:
    explicit LocalNameReader(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char peek2() const { return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'; }
    void advance() { ++pos_; }

    // Reads percent-escaped component characters until a structural marker.
    std::string component(const char* what) {
        std::string out;
        while (!at_end()) {
            char c = peek();
            if (plain_char(c)) {
                out.push_back(c);
                advance();
            } else if (c == '%') {
                advance();
                int hi = hex_value(take(what));
                int lo = hex_value(take(what));
                out.push_back(static_cast<char>((hi << 4) | lo));
            } else {
                break;
            }
        }
        if (out.empty())
            throw DecodeError(std::string("empty ") + what + " in local name");
        return out;
    }

private:
    char take(const char* what) {
        if (at_end())
            throw DecodeError(std::string("truncated percent escape in ") + what);
        char c = peek();
        advance();
        return c;
    }

    static int hex_value(char c) {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        throw DecodeError("bad hex digit in percent escape");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string encode_uri_local(const UwExpression& expr,
                             std::optional<std::uint64_t> occurrence_counter) {
    std::string out;
    append_component(out, expr.headword);
    if (!expr.restrictions.empty()) {
        out.push_back('(');
        bool first = true;
        for (const auto& r : expr.restrictions) {
            if (!first)
                out.push_back(',');
            first = false;
            append_component(out, r.relation);
            out.append(r.direction == '>' ? "--" : "-.");
            bool first_target = true;
            for (const auto& t : r.targets) {
                if (!first_target)
                    out.append("--");
                first_target = false;
                append_component(out, t);
            }
        }
        out.push_back(')');
    }
    if (expr.instance_id) {
        out.push_back('~');
        append_component(out, *expr.instance_id);
    }
    for (const auto& a : expr.attributes) {
        out.push_back('.');
        append_component(out, a);
    }
    if (occurrence_counter) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%08llu",
                      static_cast<unsigned long long>(*occurrence_counter));
        out.push_back('_');
        out.append(buf);
    } else if (std::size_t digits = counter_suffix_digits(out); digits > 0) {
        // A counterless name must not look like it carries a counter.
        out.replace(out.size() - digits - 1, 1, "%5F");
    }
    return out;
}

DecodedUri decode_uri_local(const std::string& name) {
    DecodedUri result;
    std::string_view rest = name;
    if (std::size_t digits = counter_suffix_digits(rest); digits > 0) {
        try {
            result.counter = std::stoull(std::string(rest.substr(rest.size() - digits)));
        } catch (const std::exception&) {
            throw DecodeError("counter out of range in local name: " + name);
        }
        rest.remove_suffix(digits + 1);
    }
    LocalNameReader reader(rest);
    result.expression.headword = reader.component("headword");
    if (reader.peek() == '(') {
        reader.advance();
        while (true) {
            Restriction r;
            r.relation = reader.component("restriction relation");
            if (reader.peek() == '-' && reader.peek2() == '-') {
                r.direction = '>';
            } else if (reader.peek() == '-' && reader.peek2() == '.') {
                r.direction = '<';
            } else {
                throw DecodeError("expected '--' or '-.' after restriction relation");
            }
            reader.advance();
            reader.advance();
            r.targets.push_back(reader.component("restriction target"));
            while (reader.peek() == '-' && reader.peek2() == '-') {
                reader.advance();
                reader.advance();
                r.targets.push_back(reader.component("restriction target"));
            }
            result.expression.restrictions.push_back(std::move(r));
            if (reader.peek() == ',') {
                reader.advance();
                continue;
            }
            if (reader.peek() == ')') {
                reader.advance();
                break;
            }
            throw DecodeError("unbalanced restriction list in local name");
        }
    }
    if (reader.peek() == '~') {
        reader.advance();
        result.expression.instance_id = reader.component("instance id");
    }
    while (reader.peek() == '.') {
        reader.advance();
        result.expression.attributes.push_back(reader.component("attribute"));
    }
    if (!reader.at_end())
        throw DecodeError("trailing characters in local name: " + name);
    return result;
}

std::string escape_local_component(std::string_view text) {
    std::string out;
    append_component(out, text);
    return out;
}

std::string unescape_local_component(std::string_view text) {
    LocalNameReader reader(text);
    std::string out = reader.component("identifier");
    if (!reader.at_end())
        throw DecodeError("trailing characters in identifier: " + std::string(text));
    return out;
}

} // namespace unlrdf
