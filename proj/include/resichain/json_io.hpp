#pragma once

// JSON interchange for chains, maps, spans and pointed chains.

#include <json.hpp>

#include "resichain/amalgamation.hpp"
#include "resichain/chain.hpp"
#include "resichain/morphisms.hpp"
#include "resichain/pointed.hpp"

namespace resichain {

using Json = nlohmann::json;

// {"size": n, "unit": u, "mult": [[...], ...], "labels": [...]}
Json to_json(const FiniteChain& chain);
// Accepts the object form or a constructor string such as "com:1,1".
// Throws ParseError or InvalidChain.
FiniteChain chain_from_json(const Json& j);

// {"domain": sig, "codomain": sig, "image": [...]}
Json to_json(const ChainMap& map);
ChainMap map_from_json(const Json& j, const FiniteChain& domain, const FiniteChain& codomain);

// {"A": ..., "B": ..., "C": ..., "iB": [...], "iC": [...]}
Json to_json(const Span& span);
Span span_from_json(const Json& j);

Json to_json(const AmalgamResult& result);

// Chain object plus "f".
Json to_json(const PointedChain& chain);
PointedChain pointed_from_json(const Json& j);

// An array of chains, or {"generators": [...]}.
std::vector<FiniteChain> chains_from_json(const Json& j);

}  // namespace resichain
