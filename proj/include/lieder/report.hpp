#pragma once

#include <sstream>
#include <string>

#include "lieder/format.hpp"
#include "lieder/graded.hpp"
#include "lieder/zoo.hpp"

namespace lieder {

// Machine-readable analysis documents. These are plain JSON objects printed
// with the library's canonical dumper, so parse(print(report)) == report.

inline Json algebra_json(const LieAlgebra& L) {
  Json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["super"] = L.is_super();
  return j;
}

inline Json jacobi_json(const LieAlgebra& L, const JacobiReport& r) {
  Json j;
  j["pass"] = r.pass;
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    Json w{{"x", L.label(viol.i)}, {"y", L.label(viol.j)}, {"z", L.label(viol.k)}};
    w["residual"] = detail::value_json(L, viol.residual);
    v.push_back(std::move(w));
  }
  j["violations"] = std::move(v);
  return j;
}

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json derivation_space_json(const DerivationSpace& D, bool with_basis) {
  Json j;
  j["delta"] = to_string(D.delta);
  j["parity"] = to_string(D.mode);
  j["dim"] = D.dim();
  j["trivial"] = is_trivial_space(D);
  if (with_basis) {
    Json basis = Json::array();
    for (const auto& b : D.basis) basis.push_back(matrix_json(b.matrix));
    j["basis"] = std::move(basis);
  }
  return j;
}

inline Json shift_solve_json(const ShiftSolveResult& r, bool with_basis) {
  Json j;
  j["shift_bound"] = r.K;
  j["window"] = r.N;
  j["parity"] = to_string(r.mode);
  j["dim"] = r.dim();
  j["trivial"] = solution_is_trivial(r);
  if (!r.caveat.empty()) j["caveat"] = r.caveat;
  if (with_basis) {
    Json basis = Json::array();
    for (const auto& sol : r.basis) {
      Json s;
      Json shifts = Json::array();
      for (const auto& [key, c] : sol.shift_coeffs) {
        auto [src, tgt, j2] = key;
        shifts.push_back({{"from", r.classes[src].display},
                          {"to", r.classes[tgt].display},
                          {"shift2", j2},
                          {"coeff", to_string(c)}});
      }
      s["shifts"] = std::move(shifts);
      Json centrals = Json::array();
      for (const auto& [key, c] : sol.central_rows)
        centrals.push_back({{"source_family", key.first.family},
                            {"source_deg2", key.first.deg2},
                            {"central", r.central_names[key.second]},
                            {"coeff", to_string(c)}});
      s["central_rows"] = std::move(centrals);
      Json images = Json::array();
      for (const auto& [key, c] : sol.central_to_class)
        images.push_back({{"central", r.central_names[key.first]},
                          {"to", r.classes[key.second].display + "_0"},
                          {"coeff", to_string(c)}});
      for (const auto& [key, c] : sol.central_to_central)
        images.push_back({{"central", r.central_names[key.first]},
                          {"to", r.central_names[key.second]},
                          {"coeff", to_string(c)}});
      s["central_images"] = std::move(images);
      basis.push_back(std::move(s));
    }
    j["basis"] = std::move(basis);
  }
  return j;
}

inline Json verify_report_json(const LieAlgebra& L, const VerifyReport& r) {
  Json j;
  j["pass"] = r.pass;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json e{{"x", L.label(w.a)}, {"y", L.label(w.b)}, {"z", L.label(w.c)}};
    e["lhs"] = detail::value_json(L, w.lhs);
    e["rhs"] = detail::value_json(L, w.rhs);
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

inline Json tp_structure_json(const LieAlgebra& L, const TPStructure& tp) {
  Json j;
  j["algebra"] = tp.algebra_name;
  j["verified"] = tp.verified == TPVerified::Verified;
  j["nontrivial"] = tp.nontrivial();
  Json products = Json::array();
  for (const auto& [ij, v] : tp.product.entries()) {
    Json e{{"x", L.label(ij.first)}, {"y", L.label(ij.second)}};
    e["value"] = detail::value_json(L, v);
    products.push_back(std::move(e));
  }
  j["products"] = std::move(products);
  return j;
}

// ---- pretty printers ----

inline std::string pretty_value(const LieAlgebra& L, const SparseVec& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) out << " + ";
    first = false;
    if (c == 1)
      out << L.label(k);
    else
      out << to_string(c) << "*" << L.label(k);
  }
  return out.str();
}

inline std::string pretty_matrix(const Matrix& m, const std::string& indent) {
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ", ";
      out << to_string(m.at(r, c));
    }
    out << "]\n";
  }
  return out.str();
}

inline int report_verbosity() {
  const char* env = std::getenv("LIEDER_VERBOSITY");
  if (!env) return 1;
  try {
    return std::stoi(env);
  } catch (...) {
    return 1;
  }
}

}  // namespace lieder
