#pragma once

#include <stdexcept>
#include <string>

#include "unlrdf/quad_store.hpp"

namespace unlrdf {

class StoreModeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LoadError : public std::runtime_error {
public:
    LoadError(std::size_t line, const std::string& message)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnsupportedConstructError : public LoadError {
public:
    UnsupportedConstructError(std::size_t line, const std::string& construct)
        : LoadError(line, "unsupported construct: " + construct) {}
};

// Deterministic Turtle: prefixes sorted, subjects sorted, rdf:type first as
// 'a', predicate groups ';'-joined, object groups ','-joined, collections as
// '( ... )'. Throws StoreModeError when the store holds named-graph quads.
std::string emit_turtle(const QuadStore& store);

// Same layout; named-graph quads follow the default graph in "iri { ... }"
// blocks.
std::string emit_trig(const QuadStore& store);

// Readers for the emitted subset. Anything else raises
// UnsupportedConstructError naming the construct.
QuadStore load_turtle(const std::string& text);
QuadStore load_trig(const std::string& text);

} // namespace unlrdf
