#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "stardil/algebroid.hpp"
#include "stardil/ckt.hpp"
#include "stardil/dilation.hpp"
#include "stardil/graph_free.hpp"
#include "stardil/psd_map.hpp"
#include "stardil/sg_core.hpp"

namespace stardil::io {

// Insertion-ordered JSON so that parse-then-emit is byte stable.
using json = nlohmann::ordered_json;

struct ParseError : Error {
    std::string path;  // JSON pointer-ish location of the offense
    ParseError(std::string p, const std::string& what)
        : Error(what + " (at " + p + ")"), path(std::move(p)) {}
};

json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j, const std::string& path);

json sgd_to_json(const SemigroupoidTable& t);
SemigroupoidTable sgd_from_json(const json& j);

json graph_to_json(const DirectedGraph& g);
DirectedGraph graph_from_json(const json& j);

json map_to_json(const CoherentMap& t);
CoherentMap map_from_json(const json& j);

json dilation_to_json(const Dilation& d);
Dilation dilation_from_json(const json& j);

json family_to_json(const CKTFamily& f);
CKTFamily family_from_json(const json& j);

json formal_to_json(const FormalElement& e);
FormalElement formal_from_json(const json& j);

json amplified_to_json(const AmplifiedElement& a);
AmplifiedElement amplified_from_json(const json& j);

// Canonical serialization used for all emitted documents and reports.
std::string canonical_dump(const json& j);

// Parses text, rejecting syntax errors with position info.
json parse_text(const std::string& text);

// FNV-1a digest of raw input bytes, for the report `inputs` field.
std::string digest(const std::string& bytes);

}  // namespace stardil::io
