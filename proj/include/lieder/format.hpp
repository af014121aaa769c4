#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "lieder/derivations.hpp"
#include "lieder/tpa.hpp"

namespace lieder {

using Json = nlohmann::json;

namespace detail {

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte ? e.byte - 1 : 0);
    throw FormatError("parse error at line " + std::to_string(line) +
                      ", column " + std::to_string(col) + ": " + e.what());
  }
}

inline const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

inline Rational coeff_of(const Json& j) {
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw FormatError("coefficient must be an integer or a rational string");
}

inline std::vector<std::pair<std::string, Rational>> value_list(const Json& j) {
  if (!j.is_array()) throw FormatError("'value' must be a list");
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& term : j) {
    if (!term.is_object()) throw FormatError("value terms must be objects");
    out.emplace_back(field(term, "basis").get<std::string>(),
                     coeff_of(field(term, "coeff")));
  }
  return out;
}

inline Json value_json(const LieAlgebra& L, const SparseVec& v) {
  Json arr = Json::array();
  for (const auto& [k, c] : v)
    arr.push_back({{"basis", L.label(k)}, {"coeff", to_string(c)}});
  return arr;
}

}  // namespace detail

// ---- algebra description documents ----

inline AlgebraDescription parse_algebra_description(const std::string& text) {
  Json j = detail::parse_json(text);
  if (!j.is_object()) throw FormatError("algebra document must be an object");
  for (const auto& [key, val] : j.items())
    if (key != "name" && key != "basis" && key != "brackets")
      throw FormatError("unknown field '" + key + "'");
  AlgebraDescription desc;
  desc.name = detail::field(j, "name").get<std::string>();
  const Json& basis = detail::field(j, "basis");
  if (!basis.is_array() || basis.empty())
    throw FormatError("'basis' must be a nonempty list");
  for (const auto& b : basis) {
    BasisSymbol sym;
    sym.label = detail::field(b, "label").get<std::string>();
    if (!valid_label(sym.label))
      throw FormatError("invalid label '" + sym.label + "'");
    sym.parity = b.value("parity", 0);
    sym.grading = b.value("grading", 0);
    desc.basis.push_back(std::move(sym));
  }
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw FormatError("'brackets' must be a list");
    for (const auto& e : j["brackets"]) {
      BracketEntry entry;
      entry.x = detail::field(e, "x").get<std::string>();
      entry.y = detail::field(e, "y").get<std::string>();
      entry.value = detail::value_list(detail::field(e, "value"));
      desc.brackets.push_back(std::move(entry));
    }
  }
  return desc;
}

inline std::string print_algebra_description(const AlgebraDescription& desc) {
  Json j;
  j["name"] = desc.name;
  j["basis"] = Json::array();
  for (const auto& b : desc.basis) {
    Json sym{{"label", b.label}};
    if (b.parity != 0) sym["parity"] = b.parity;
    if (b.grading != 0) sym["grading"] = b.grading;
    j["basis"].push_back(std::move(sym));
  }
  j["brackets"] = Json::array();
  for (const auto& e : desc.brackets) {
    Json entry{{"x", e.x}, {"y", e.y}};
    Json value = Json::array();
    for (const auto& [lbl, c] : e.value)
      value.push_back({{"basis", lbl}, {"coeff", to_string(c)}});
    entry["value"] = std::move(value);
    j["brackets"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

inline LieAlgebra load_algebra(const std::string& text) {
  return LieAlgebra::build(parse_algebra_description(text));
}

// ---- linear map documents ----

inline std::string serialize_linear_map(const LieAlgebra& L,
                                        const LinearMap& m) {
  Json j;
  j["algebra"] = L.name();
  Json basis = Json::array();
  for (const auto& b : L.basis()) basis.push_back(b.label);
  j["basis"] = std::move(basis);
  j["parity"] = m.parity;
  Json rows = Json::array();
  for (int r = 0; r < L.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < L.dim(); ++c) row.push_back(to_string(m.matrix.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

inline LinearMap parse_linear_map(const LieAlgebra& L, const std::string& text) {
  Json j = detail::parse_json(text);
  if (detail::field(j, "algebra").get<std::string>() != L.name())
    throw FormatError("map document targets algebra '" +
                      j["algebra"].get<std::string>() + "', expected '" +
                      L.name() + "'");
  const Json& basis = detail::field(j, "basis");
  if (static_cast<int>(basis.size()) != L.dim())
    throw FormatError("map document basis size does not match");
  for (int i = 0; i < L.dim(); ++i)
    if (basis[i].get<std::string>() != L.label(i))
      throw FormatError("map document basis order differs at position " +
                        std::to_string(i));
  LinearMap m{Matrix(L.dim(), L.dim()), j.value("parity", 0)};
  const Json& rows = detail::field(j, "rows");
  if (static_cast<int>(rows.size()) != L.dim())
    throw FormatError("map document needs one row per basis element");
  for (int r = 0; r < L.dim(); ++r) {
    if (static_cast<int>(rows[r].size()) != L.dim())
      throw FormatError("map row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < L.dim(); ++c)
      m.matrix.set(r, c, detail::coeff_of(rows[r][c]));
  }
  return m;
}

// ---- commutative product documents ----

inline std::string serialize_product(const LieAlgebra& L,
                                     const CommProduct& p) {
  Json j;
  j["algebra"] = L.name();
  Json basis = Json::array();
  for (const auto& b : L.basis()) basis.push_back(b.label);
  j["basis"] = std::move(basis);
  Json products = Json::array();
  for (const auto& [ij, v] : p.entries()) {
    Json entry{{"x", L.label(ij.first)}, {"y", L.label(ij.second)}};
    entry["value"] = detail::value_json(L, v);
    products.push_back(std::move(entry));
  }
  j["products"] = std::move(products);
  return j.dump(2) + "\n";
}

inline CommProduct parse_product(const LieAlgebra& L, const std::string& text) {
  Json j = detail::parse_json(text);
  if (detail::field(j, "algebra").get<std::string>() != L.name())
    throw FormatError("product document targets algebra '" +
                      j["algebra"].get<std::string>() + "', expected '" +
                      L.name() + "'");
  CommProduct p(L.dim());
  const Json& products = detail::field(j, "products");
  if (!products.is_array()) throw FormatError("'products' must be a list");
  for (const auto& e : products) {
    auto xi = L.index_of(detail::field(e, "x").get<std::string>());
    auto yi = L.index_of(detail::field(e, "y").get<std::string>());
    if (!xi || !yi) throw FormatError("unknown label in product entry");
    SparseVec v;
    for (const auto& [lbl, c] : detail::value_list(detail::field(e, "value"))) {
      auto k = L.index_of(lbl);
      if (!k) throw FormatError("unknown label '" + lbl + "' in product value");
      vec_set(v, *k, vec_get(v, *k) + c);
    }
    p.set(*xi, *yi, std::move(v));
  }
  return p;
}

}  // namespace lieder
