#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unlrdf {

struct SourceSpan {
    std::size_t line = 1;   // 1-based
    std::size_t column = 1; // 1-based
    std::size_t length = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, const std::string& message)
        : std::runtime_error(message + " (line " + std::to_string(span.line) + ", column " +
                             std::to_string(span.column) + ")"),
          span_(span) {}

    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

} // namespace unlrdf
