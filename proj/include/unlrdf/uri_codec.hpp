#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "unlrdf/uw.hpp"

namespace unlrdf {

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// RDF local name for a UW expression. '>' becomes "--" and '<' becomes "-.";
// '(', ')' and ',' are kept verbatim; an instance id is introduced by '~' and
// attributes by '.'; every other character outside [A-Za-z0-9_] is
// percent-escaped. With a counter, "_" + 8 zero-padded digits is appended
// (the occurrence form, e.g. channel(icl--radiowave)_00000014).
std::string encode_uri_local(const UwExpression& expr,
                             std::optional<std::uint64_t> occurrence_counter = std::nullopt);

struct DecodedUri {
    UwExpression expression;
    std::optional<std::uint64_t> counter;
};

// Inverse of encode_uri_local; throws DecodeError on names it did not produce.
DecodedUri decode_uri_local(const std::string& name);

// Percent-escaping for plain identifiers (sentence ids, scope labels, volume
// names) that must survive as URI local names.
std::string escape_local_component(std::string_view text);
std::string unescape_local_component(std::string_view text);

} // namespace unlrdf
