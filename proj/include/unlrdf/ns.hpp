#pragma once

#include <string>
#include <string_view>

namespace unlrdf::ns {

inline constexpr std::string_view unl = "https://unl.tetras-libre.fr/rdf/schema#";
inline constexpr std::string_view example = "https://unl.tetras-libre.fr/rdf/example#";
inline constexpr std::string_view skolem = "https://unl.tetras-libre.fr/rdf/skolem#";
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view skos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";

inline std::string join(std::string_view space, std::string_view local) {
    std::string out;
    out.reserve(space.size() + local.size());
    out.append(space);
    out.append(local);
    return out;
}

inline std::string unl_(std::string_view local) { return join(unl, local); }
inline std::string rdf_(std::string_view local) { return join(rdf, local); }
inline std::string rdfs_(std::string_view local) { return join(rdfs, local); }
inline std::string owl_(std::string_view local) { return join(owl, local); }
inline std::string skos_(std::string_view local) { return join(skos, local); }
inline std::string xsd_(std::string_view local) { return join(xsd, local); }

} // namespace unlrdf::ns
