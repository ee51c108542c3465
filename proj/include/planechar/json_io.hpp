#pragma once

// JSON forms of the public value types. These are the canonical machine
// formats of the command line tool.

#include <json.hpp>

#include <string_view>
#include <vector>

#include "planechar/betti.hpp"
#include "planechar/character.hpp"
#include "planechar/hilburch.hpp"
#include "planechar/resolve.hpp"

namespace planechar::json_io {

using Json = nlohmann::ordered_json;

// ParseError on malformed text.
Json parse(std::string_view text);

Json to_json(const charcore::NumericalCharacter& chi);
// Array of integers; validation errors propagate from NumericalCharacter.
charcore::NumericalCharacter character_from_json(const Json& j);

Json to_json(const charcore::HilbertTable& table);
Json to_json(const std::vector<charcore::Piece>& pieces);

Json to_json(const betti::BettiSequence& seq);
// {"a":[...],"b":[...]}
betti::BettiSequence betti_from_json(const Json& j);

Json to_json(const betti::Verdict& v);
Json to_json(const betti::SauerResult& r);
Json to_json(const betti::RemarkReport& r);

Json to_json(const hilburch::GradedMatrix& m);
Json to_json(const hilburch::ProbeReport& r);
Json generators_to_json(const std::vector<poly::HomogPoly>& gens);

Json to_json(const resolve::ResolutionReport& r);

// Array of polynomial strings.
std::vector<poly::HomogPoly> generators_from_json(const Json& j);

}  // namespace planechar::json_io
