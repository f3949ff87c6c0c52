#pragma once

// JSON exchange format for polynomials:
//   {"alphabet": "edge",   "N": 4, "terms": [[[1,2],[3,4]], [[1,3],[2,4]]]}
//   {"alphabet": "paired", "N": 2, "terms": [["x1","y2"], ["x2","y1"]]}
// Each term lists its variables; edges may be written in either order.
// Readers reject repeated variables, duplicate terms, and indices outside 1..N.

#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "skewchain/ring.hpp"

namespace skewchain::io {

using nlohmann::json;

/// Malformed input; location() is a JSON-pointer-like path into the document.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

inline json variable_to_json(const Edge& e) { return json::array({e.u(), e.v()}); }
inline json variable_to_json(const PairedGenerator& g) { return g.to_string(); }

template <class Alphabet>
json monomial_to_json(const Monomial<Alphabet>& m) {
  json vars = json::array();
  for (const auto& v : m.variables()) vars.push_back(variable_to_json(v));
  return vars;
}

template <class Alphabet>
json to_json(const Polynomial<Alphabet>& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) terms.push_back(monomial_to_json(t));
  return json{{"alphabet", std::string(Alphabet::name)}, {"N", f.universe()}, {"terms", terms}};
}

namespace detail {

inline int read_index(const json& j, const std::string& where, int universe) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer vertex index");
  const auto v = j.get<long long>();
  if (v < 1 || v > universe) throw ParseError(where, "index " + std::to_string(v) + " outside 1.." + std::to_string(universe));
  return static_cast<int>(v);
}

inline Edge read_variable(const json& j, const std::string& where, int universe, EdgeAlphabet) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where, "an edge is a pair [u, v]");
  const int u = read_index(j[0], where + "/0", universe);
  const int v = read_index(j[1], where + "/1", universe);
  if (u == v) throw ParseError(where, "edge is a loop");
  return Edge(u, v);
}

inline PairedGenerator read_variable(const json& j, const std::string& where, int universe, PairedAlphabet) {
  if (!j.is_string()) throw ParseError(where, "a paired generator is a string like \"x3\"");
  PairedGenerator g;
  try {
    g = PairedGenerator::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
  if (g.index() > universe) throw ParseError(where, "index outside 1.." + std::to_string(universe));
  return g;
}

}  // namespace detail

template <class Alphabet>
Polynomial<Alphabet> polynomial_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("", "polynomial document must be an object");
  if (!doc.contains("alphabet") || !doc["alphabet"].is_string()) throw ParseError("/alphabet", "missing alphabet");
  if (doc["alphabet"].get<std::string>() != Alphabet::name) {
    throw ParseError("/alphabet", "expected alphabet \"" + std::string(Alphabet::name) + "\"");
  }
  if (!doc.contains("N") || !doc["N"].is_number_integer() || doc["N"].get<long long>() < 1) {
    throw ParseError("/N", "N must be a positive integer");
  }
  const int universe = doc["N"].get<int>();
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw ParseError("/terms", "terms must be an array");
  std::vector<Monomial<Alphabet>> terms;
  const auto& list = doc["terms"];
  for (std::size_t t = 0; t < list.size(); ++t) {
    const std::string where = "/terms/" + std::to_string(t);
    if (!list[t].is_array()) throw ParseError(where, "a term is an array of variables");
    std::vector<typename Alphabet::Variable> vars;
    for (std::size_t k = 0; k < list[t].size(); ++k) {
      vars.push_back(detail::read_variable(list[t][k], where + "/" + std::to_string(k), universe, Alphabet{}));
    }
    try {
      terms.emplace_back(std::move(vars));
    } catch (const std::invalid_argument& e) {
      throw ParseError(where, e.what());
    }
  }
  auto sorted = terms;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    const auto idx = static_cast<std::size_t>(std::find(terms.begin(), terms.end(), *dup) - terms.begin());
    throw ParseError("/terms/" + std::to_string(idx), "duplicate term " + dup->to_string());
  }
  return Polynomial<Alphabet>(universe, std::move(terms));
}

using AnyPolynomial = std::variant<EdgePolynomial, PairedPolynomial>;

inline AnyPolynomial any_polynomial_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("alphabet") && doc["alphabet"] == "paired") {
    return polynomial_from_json<PairedAlphabet>(doc);
  }
  return polynomial_from_json<EdgeAlphabet>(doc);
}

/// Parses text; JSON syntax errors are reported with their byte offset.
inline json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "invalid JSON");
  }
}

}  // namespace skewchain::io
