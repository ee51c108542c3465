#include "planechar/json_io.hpp"

namespace planechar::json_io {

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

namespace {

std::vector<Int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a JSON array");
  std::vector<Int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw Error(ErrorCode::ParseError, std::string(what) + " must contain integers");
    }
    out.push_back(e.get<Int>());
  }
  return out;
}

Json optional_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const charcore::NumericalCharacter& chi) {
  return Json(std::vector<Int>(chi.entries().begin(), chi.entries().end()));
}

charcore::NumericalCharacter character_from_json(const Json& j) {
  return charcore::NumericalCharacter::make(int_array(j, "character"));
}

Json to_json(const charcore::HilbertTable& t) {
  Json j;
  j["deg"] = t.degree;
  j["H"] = t.hilbert;
  j["delta"] = t.delta;
  j["h0"] = t.h0;
  j["h1"] = t.h1;
  return j;
}

Json to_json(const std::vector<charcore::Piece>& pieces) {
  Json out = Json::array();
  for (const auto& p : pieces) {
    Json j;
    j["shift"] = p.shift;
    j["piece"] = to_json(p.character);
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const betti::BettiSequence& seq) {
  Json j;
  j["a"] = std::vector<Int>(seq.a().begin(), seq.a().end());
  j["b"] = std::vector<Int>(seq.b().begin(), seq.b().end());
  return j;
}

betti::BettiSequence betti_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw Error(ErrorCode::ParseError, "Betti sequence must be an object with \"a\" and \"b\"");
  }
  return betti::BettiSequence::make(int_array(j["a"], "a"), int_array(j["b"], "b"));
}

Json to_json(const betti::Verdict& v) {
  Json j;
  j["connected"] = v.connected;
  j["sauer"] = v.sauer_ok;
  j["smoothable"] = v.smoothable;
  j["witness"] = optional_int(v.witness);
  return j;
}

Json to_json(const betti::SauerResult& r) {
  Json j;
  j["ok"] = r.ok;
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  j["equalities"] = r.equalities;
  return j;
}

Json to_json(const betti::RemarkReport& r) {
  Json out = Json::array();
  for (const auto& c : r.clauses) {
    Json j;
    j["clause"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const hilburch::GradedMatrix& gm) {
  const auto& m = gm.matrix();
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["row_degrees"] = std::vector<Int>(m.row_degrees().begin(), m.row_degrees().end());
  j["col_degrees"] = std::vector<Int>(m.col_degrees().begin(), m.col_degrees().end());
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t jj = 0; jj < m.cols(); ++jj) {
      row.push_back(m.is_zero_at(i, jj) ? std::string("0") : m.at(i, jj)->to_string());
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const hilburch::ProbeReport& r) {
  Json j;
  j["field"] = r.field;
  j["seed"] = r.seed;
  j["trials"] = r.samples.size();
  j["expected_rank"] = r.expected_rank;
  j["rank_at_support"] = r.rank_at_support;
  j["passed"] = true;
  return j;
}

Json generators_to_json(const std::vector<poly::HomogPoly>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(g.to_string());
  return out;
}

Json to_json(const resolve::ResolutionReport& r) {
  Json j;
  j["field"] = r.field;
  j["top_degree"] = r.top_degree;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["generators"] = generators_to_json(r.generators);
  j["betti"] = r.betti ? to_json(*r.betti) : Json(nullptr);
  j["hilbert"] = to_json(r.hilbert);
  const auto chi = resolve::character_of(r);
  j["character"] = chi ? to_json(*chi) : Json(nullptr);
  return j;
}

std::vector<poly::HomogPoly> generators_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "generators must be a JSON array of strings");
  std::vector<poly::HomogPoly> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorCode::ParseError, "generators must be polynomial strings");
    out.push_back(poly::HomogPoly::parse(e.get<std::string>()));
  }
  return out;
}

}  // namespace planechar::json_io
