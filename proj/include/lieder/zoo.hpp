#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lieder/algebra.hpp"
#include "lieder/graded.hpp"

namespace lieder {

using Params = std::map<std::string, Rational>;

struct ZooEntry {
  std::string name;
  std::string kind;  // "finite" | "graded"
  std::string params_doc;
  std::string description;
};

inline const std::vector<ZooEntry>& zoo_entries() {
  static const std::vector<ZooEntry> entries = {
      {"gal", "finite", "d: integer >= 3",
       "Galilean algebra: rotations J_i_j, boosts C_i, momenta P_i, time H"},
      {"so", "finite", "n: integer >= 2", "orthogonal algebra on J_i_j"},
      {"sl2", "finite", "", "simple 3-dimensional algebra e, f, h"},
      {"aff1", "finite", "", "affine line: [h,x] = x"},
      {"heisenberg", "finite", "n: odd integer >= 3",
       "Heisenberg algebra with [p_i, q_i] = z"},
      {"heis3", "finite", "", "alias for heisenberg with n = 3"},
      {"r3", "finite", "lambda: rational",
       "solvable [e1,e2] = e2, [e1,e3] = lambda e3"},
      {"t", "finite", "n: integer >= 2", "upper-triangular n x n matrices"},
      {"oscillator", "finite", "",
       "[h,p] = p, [h,q] = -q, [p,q] = z, z central"},
      {"abelian", "finite", "n: integer >= 1", "abelian algebra of dimension n"},
      {"gtilde", "finite", "l: half-odd rational > 0",
       "conformal centrally extended Galilei algebra sl2 + p_0..p_2l + z"},
      {"witt", "graded", "", "[L_m, L_n] = (m-n) L_{m+n}"},
      {"virasoro", "graded", "", "Witt algebra with central charge c"},
      {"galext", "graded", "d: integer >= 1, l: half-odd rational",
       "infinite extension of the Galilean algebra (families L, J, P)"},
      {"gca", "graded", "l: rational with 2l a nonnegative integer",
       "super Galilean conformal algebra (families L, P, G, H; centrals)"},
  };
  return entries;
}

namespace zoo_detail {

inline Rational param(const Params& p, const std::string& key,
                      const Rational& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

inline long param_int(const Params& p, const std::string& key, long fallback,
                      const std::string& constraint) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  if (!is_integer(it->second))
    throw ParameterError("parameter " + key + " must be an integer (" +
                         constraint + ")");
  return it->second.get_num().get_si();
}

using ValueMap = std::map<std::string, Rational>;

inline void acc(ValueMap& m, const std::string& label, const Rational& c) {
  if (c == 0) return;
  auto it = m.find(label);
  if (it == m.end())
    m.emplace(label, c);
  else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

inline std::string jlabel(int a, int b) {
  return "J_" + std::to_string(a) + "_" + std::to_string(b);
}

// J_{a,b} is antisymmetric bookkeeping: J_{a,a} = 0, J_{b,a} = -J_{a,b};
// the Kronecker-delta formulas freely produce non-canonical symbols.
inline void acc_j(ValueMap& m, int a, int b, const Rational& c) {
  if (a == b) return;
  if (a < b)
    acc(m, jlabel(a, b), c);
  else
    acc(m, jlabel(b, a), -c);
}

inline void push_bracket(AlgebraDescription& d, const std::string& x,
                         const std::string& y, const ValueMap& v) {
  if (v.empty()) return;
  BracketEntry e;
  e.x = x;
  e.y = y;
  for (const auto& [lbl, c] : v) e.value.emplace_back(lbl, c);
  d.brackets.push_back(std::move(e));
}

inline ValueMap jj_bracket(int i, int j, int p, int q) {
  ValueMap v;
  if (i == p) acc_j(v, j, q, 1);
  if (i == q) acc_j(v, j, p, -1);
  if (j == p) acc_j(v, i, q, -1);
  if (j == q) acc_j(v, i, p, 1);
  return v;
}

inline LieAlgebra build_gal(long d) {
  if (d < 3)
    throw ParameterError("gal requires an integer d >= 3");
  AlgebraDescription desc;
  desc.name = "gal(" + std::to_string(d) + ")";
  std::vector<std::pair<int, int>> jpairs;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) jpairs.emplace_back(i, j);
  for (auto [i, j] : jpairs) desc.basis.push_back({jlabel(i, j), 0, 0});
  for (int k = 1; k <= d; ++k)
    desc.basis.push_back({"P_" + std::to_string(k), 0, 1});
  for (int k = 1; k <= d; ++k)
    desc.basis.push_back({"C_" + std::to_string(k), 0, 1});
  desc.basis.push_back({"H", 0, 0});

  for (std::size_t a = 0; a < jpairs.size(); ++a)
    for (std::size_t b = a + 1; b < jpairs.size(); ++b) {
      auto [i, j] = jpairs[a];
      auto [p, q] = jpairs[b];
      push_bracket(desc, jlabel(i, j), jlabel(p, q), jj_bracket(i, j, p, q));
    }
  for (auto [i, j] : jpairs)
    for (int k = 1; k <= d; ++k) {
      ValueMap vp, vc;
      if (i == k) acc(vp, "P_" + std::to_string(j), 1);
      if (j == k) acc(vp, "P_" + std::to_string(i), -1);
      if (i == k) acc(vc, "C_" + std::to_string(j), 1);
      if (j == k) acc(vc, "C_" + std::to_string(i), -1);
      push_bracket(desc, jlabel(i, j), "P_" + std::to_string(k), vp);
      push_bracket(desc, jlabel(i, j), "C_" + std::to_string(k), vc);
    }
  for (int i = 1; i <= d; ++i) {
    ValueMap v;
    acc(v, "P_" + std::to_string(i), 1);
    push_bracket(desc, "C_" + std::to_string(i), "H", v);
  }
  return LieAlgebra::build(desc);
}

inline LieAlgebra build_so(long n) {
  if (n < 2) throw ParameterError("so requires an integer n >= 2");
  AlgebraDescription desc;
  desc.name = "so(" + std::to_string(n) + ")";
  std::vector<std::pair<int, int>> jpairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) jpairs.emplace_back(i, j);
  for (auto [i, j] : jpairs) desc.basis.push_back({jlabel(i, j), 0, 0});
  for (std::size_t a = 0; a < jpairs.size(); ++a)
    for (std::size_t b = a + 1; b < jpairs.size(); ++b) {
      auto [i, j] = jpairs[a];
      auto [p, q] = jpairs[b];
      push_bracket(desc, jlabel(i, j), jlabel(p, q), jj_bracket(i, j, p, q));
    }
  return LieAlgebra::build(desc);
}

inline LieAlgebra build_sl2() {
  AlgebraDescription d;
  d.name = "sl2";
  d.basis = {{"e"}, {"f"}, {"h"}};
  d.brackets = {{"h", "e", {{"e", rat(2)}}},
                {"h", "f", {{"f", rat(-2)}}},
                {"e", "f", {{"h", rat(1)}}}};
  return LieAlgebra::build(d);
}

inline LieAlgebra build_aff1() {
  AlgebraDescription d;
  d.name = "aff(1)";
  d.basis = {{"h"}, {"x"}};
  d.brackets = {{"h", "x", {{"x", rat(1)}}}};
  return LieAlgebra::build(d);
}

inline LieAlgebra build_heisenberg(long n) {
  if (n < 3 || n % 2 == 0)
    throw ParameterError("heisenberg requires an odd integer n >= 3");
  long k = (n - 1) / 2;
  AlgebraDescription d;
  d.name = "heisenberg(" + std::to_string(n) + ")";
  for (long i = 1; i <= k; ++i) d.basis.push_back({"p_" + std::to_string(i)});
  for (long i = 1; i <= k; ++i) d.basis.push_back({"q_" + std::to_string(i)});
  d.basis.push_back({"z"});
  for (long i = 1; i <= k; ++i)
    d.brackets.push_back(
        {"p_" + std::to_string(i), "q_" + std::to_string(i), {{"z", rat(1)}}});
  return LieAlgebra::build(d);
}

inline LieAlgebra build_r3(const Rational& lambda) {
  AlgebraDescription d;
  d.name = "r3(" + to_string(lambda) + ")";
  d.basis = {{"e1"}, {"e2"}, {"e3"}};
  d.brackets = {{"e1", "e2", {{"e2", rat(1)}}}};
  if (lambda != 0) d.brackets.push_back({"e1", "e3", {{"e3", lambda}}});
  return LieAlgebra::build(d);
}

inline LieAlgebra build_t(long n) {
  if (n < 2) throw ParameterError("t requires an integer n >= 2");
  AlgebraDescription d;
  d.name = "t(" + std::to_string(n) + ")";
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) cells.emplace_back(i, j);
  auto lbl = [](std::pair<int, int> c) {
    return "E_" + std::to_string(c.first) + "_" + std::to_string(c.second);
  };
  for (auto c : cells) d.basis.push_back({lbl(c)});
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      auto [i, j] = cells[a];
      auto [k, l] = cells[b];
      ValueMap v;
      if (j == k) acc(v, lbl({i, l}), 1);
      if (l == i) acc(v, lbl({k, j}), -1);
      push_bracket(d, lbl(cells[a]), lbl(cells[b]), v);
    }
  return LieAlgebra::build(d);
}

inline LieAlgebra build_oscillator() {
  AlgebraDescription d;
  d.name = "oscillator";
  d.basis = {{"h"}, {"p"}, {"q"}, {"z"}};
  d.brackets = {{"h", "p", {{"p", rat(1)}}},
                {"h", "q", {{"q", rat(-1)}}},
                {"p", "q", {{"z", rat(1)}}}};
  return LieAlgebra::build(d);
}

inline LieAlgebra build_abelian(long n) {
  if (n < 1) throw ParameterError("abelian requires an integer n >= 1");
  AlgebraDescription d;
  d.name = "abelian(" + std::to_string(n) + ")";
  for (long i = 1; i <= n; ++i) d.basis.push_back({"a_" + std::to_string(i)});
  return LieAlgebra::build(d);
}

inline LieAlgebra build_gtilde(const Rational& l) {
  // l ranges over positive half-odd integers so the sign exponent
  // k + l + 1/2 below is an integer.
  Rational two_l = l * 2;
  if (!is_integer(two_l) || two_l <= 0 || two_l.get_num() % 2 == 0)
    throw ParameterError("gtilde requires l with 2l an odd positive integer");
  long tl = two_l.get_num().get_si();
  AlgebraDescription d;
  d.name = "gtilde(" + to_string(l) + ")";
  d.basis = {{"e", 0, 0}, {"f", 0, 0}, {"h", 0, 0}, {"z", 0, 0}};
  auto p = [](long k) { return "p_" + std::to_string(k); };
  for (long k = 0; k <= tl; ++k) d.basis.push_back({p(k), 0, 1});

  d.brackets = {{"h", "e", {{"e", rat(2)}}},
                {"h", "f", {{"f", rat(-2)}}},
                {"e", "f", {{"h", rat(1)}}}};
  for (long k = 0; k <= tl; ++k) {
    // [h, p_k] = 2(l - k) p_k
    d.brackets.push_back({"h", p(k), {{p(k), Rational(tl - 2 * k)}}});
    if (k >= 1) d.brackets.push_back({"e", p(k), {{p(k - 1), Rational(k)}}});
    if (k < tl) d.brackets.push_back({"f", p(k), {{p(k + 1), Rational(tl - k)}}});
  }
  for (long k = 0; 2 * k < tl; ++k) {
    // [p_k, p_{2l-k}] = (-1)^{k + l + 1/2} k! (2l - k)! z
    long exponent = k + (tl + 1) / 2;
    Integer coeff = factorial(static_cast<unsigned long>(k)) *
                    factorial(static_cast<unsigned long>(tl - k));
    if (exponent % 2 != 0) coeff = -coeff;
    d.brackets.push_back({p(k), p(tl - k), {{"z", Rational(coeff)}}});
  }
  return LieAlgebra::build(d);
}

// ---- graded builders ----

inline GradedAlgebra build_witt() {
  GradedAlgebra G;
  G.name = "witt";
  G.families = {{"L", 0, 0}};
  G.table = [](const GradedSymbol& a, const GradedSymbol& b) {
    GradedElem out;
    out.add({0, {}, a.deg2 + b.deg2}, Rational(a.deg2 - b.deg2) / 2);
    return out;
  };
  return G;
}

inline GradedAlgebra build_virasoro() {
  GradedAlgebra G;
  G.name = "virasoro";
  G.families = {{"L", 0, 0}};
  G.centrals = {{"c", 0}};
  G.table = [](const GradedSymbol& a, const GradedSymbol& b) {
    GradedElem out;
    out.add({0, {}, a.deg2 + b.deg2}, Rational(a.deg2 - b.deg2) / 2);
    if (a.deg2 + b.deg2 == 0) {
      long m = a.deg2 / 2;
      out.add_central(0, Rational(m * m * m - m));
    }
    return out;
  };
  return G;
}

inline const char* kAnsatzCaveat =
    "caveat: solutions are sought within the shift-ansatz class only "
    "(degree-independent shift coefficients plus windowed central terms); "
    "for this algebra that class is not proven exhaustive, so a trivial "
    "result is a consistency check within the class, not a classification "
    "of all 1/2-derivations";

inline GradedAlgebra build_galext(long d, const Rational& l) {
  if (d < 1) throw ParameterError("galext requires an integer d >= 1");
  Rational two_l = l * 2;
  if (!is_integer(two_l) || two_l.get_num() % 2 == 0)
    throw ParameterError("galext requires l with 2l an odd integer");
  long l2 = two_l.get_num().get_si();
  GradedAlgebra G;
  G.name = "galext(" + std::to_string(d) + "," + to_string(l) + ")";
  G.ansatz_caveat = kAnsatzCaveat;
  FamilySpec L{"L", 0, 0, {{}}};
  FamilySpec J{"J", 0, 0, {}};
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) J.tag_values.push_back({i, j});
  FamilySpec P{"P", 1, 1, {}};
  for (int i = 1; i <= d; ++i) P.tag_values.push_back({i});
  G.families = {L, J, P};

  G.table = [l2](const GradedSymbol& a, const GradedSymbol& b) {
    GradedElem out;
    auto add_j = [&out](long deg2, int u, int v, const Rational& c) {
      if (u == v || c == 0) return;
      if (u < v)
        out.add({1, {u, v}, deg2}, c);
      else
        out.add({1, {v, u}, deg2}, -c);
    };
    long sum = a.deg2 + b.deg2;
    if (a.family == 0 && b.family == 0) {
      out.add({0, {}, sum}, Rational(a.deg2 - b.deg2) / 2);
    } else if (a.family == 0 && b.family == 1) {
      // [L^m, J^n] = -n J^{n+m}
      add_j(sum, b.tags[0], b.tags[1], Rational(-b.deg2) / 2);
    } else if (a.family == 0 && b.family == 2) {
      // [L^m, P_i^k] = (l m - k) P_i^{m+k}
      out.add({2, b.tags, sum}, rat(l2 * a.deg2 - 2 * b.deg2, 4));
    } else if (a.family == 1 && b.family == 1) {
      int i = a.tags[0], j = a.tags[1], p = b.tags[0], q = b.tags[1];
      if (i == p) add_j(sum, j, q, 1);
      if (i == q) add_j(sum, j, p, -1);
      if (j == p) add_j(sum, i, q, -1);
      if (j == q) add_j(sum, i, p, 1);
    } else if (a.family == 1 && b.family == 2) {
      int i = a.tags[0], j = a.tags[1], t = b.tags[0];
      if (i == t) out.add({2, {j}, sum}, 1);
      if (j == t) out.add({2, {i}, sum}, -1);
    }
    return out;
  };
  return G;
}

inline GradedAlgebra build_gca(const Rational& l) {
  Rational two_l = l * 2;
  if (!is_integer(two_l) || two_l < 0)
    throw ParameterError("gca requires l with 2l a nonnegative integer");
  long l2 = two_l.get_num().get_si();
  int lat = static_cast<int>(l2 % 2);
  bool has_c2 = (l2 == 2);
  GradedAlgebra G;
  G.name = "gca(" + to_string(l) + ")";
  G.super = true;
  G.ansatz_caveat = kAnsatzCaveat;
  G.families = {{"L", 0, 0},
                {"P", 0, lat},
                {"G", 1, 0},
                {"H", 1, lat}};
  G.centrals = {{"c1", 0}};
  if (has_c2) G.centrals.push_back({"c2", 0});

  G.table = [l2, has_c2](const GradedSymbol& a, const GradedSymbol& b) {
    GradedElem out;
    long sum = a.deg2 + b.deg2;
    int fa = a.family, fb = b.family;
    if (fa == 0 && fb == 0) {
      long m = a.deg2 / 2;
      out.add({0, {}, sum}, Rational(a.deg2 - b.deg2) / 2);
      if (sum == 0) out.add_central(0, Rational(m * m * m - m));
    } else if (fa == 0 && fb == 1) {
      long m = a.deg2 / 2;
      out.add({1, {}, sum}, rat(l2 * a.deg2 - 2 * b.deg2, 4));
      if (has_c2 && sum == 0) out.add_central(1, Rational(m * m * m - m));
    } else if (fa == 0 && fb == 2) {
      out.add({2, {}, sum}, rat(a.deg2 - 2 * b.deg2, 4));
    } else if (fa == 0 && fb == 3) {
      out.add({3, {}, sum}, rat((l2 - 1) * a.deg2 - 2 * b.deg2, 4));
    } else if (fa == 1 && fb == 2) {
      // [P_k, G_m] = (k/2 - l m) H_{k+m}
      out.add({3, {}, sum}, rat(a.deg2 - l2 * b.deg2, 4));
    } else if (fa == 2 && fb == 2) {
      long m = a.deg2 / 2;
      out.add({0, {}, sum}, rat(2));
      if (sum == 0) out.add_central(0, Rational(4 * m * m - 1));
    } else if (fa == 2 && fb == 3) {
      long m = a.deg2 / 2;
      out.add({1, {}, sum}, rat(2));
      if (has_c2 && sum == 0) out.add_central(1, Rational(4 * m * m - 1));
    }
    // [P,P], [P,H], [H,H] vanish
    return out;
  };
  return G;
}

}  // namespace zoo_detail

inline bool zoo_is_graded(const std::string& name) {
  return name == "witt" || name == "virasoro" || name == "galext" ||
         name == "gca";
}

inline bool zoo_has(const std::string& name) {
  for (const auto& e : zoo_entries())
    if (e.name == name) return true;
  return false;
}

inline LieAlgebra zoo_build_finite(const std::string& name, const Params& p = {}) {
  using namespace zoo_detail;
  if (name == "gal") return build_gal(param_int(p, "d", 3, "d >= 3"));
  if (name == "so") return build_so(param_int(p, "n", 3, "n >= 2"));
  if (name == "sl2") return build_sl2();
  if (name == "aff1") return build_aff1();
  if (name == "heisenberg")
    return build_heisenberg(param_int(p, "n", 3, "odd n >= 3"));
  if (name == "heis3") return build_heisenberg(3);
  if (name == "r3") return build_r3(param(p, "lambda", rat(1)));
  if (name == "t") return build_t(param_int(p, "n", 3, "n >= 2"));
  if (name == "oscillator") return build_oscillator();
  if (name == "abelian") return build_abelian(param_int(p, "n", 1, "n >= 1"));
  if (name == "gtilde") return build_gtilde(param(p, "l", rat(1, 2)));
  if (zoo_is_graded(name))
    throw ParameterError("zoo entry '" + name +
                         "' is graded; use the graded interface");
  throw ParameterError("unknown zoo entry '" + name + "'");
}

inline GradedAlgebra zoo_build_graded(const std::string& name,
                                      const Params& p = {}) {
  using namespace zoo_detail;
  if (name == "witt") return build_witt();
  if (name == "virasoro") return build_virasoro();
  if (name == "galext")
    return build_galext(param_int(p, "d", 3, "d >= 1"),
                        param(p, "l", rat(1, 2)));
  if (name == "gca") return build_gca(param(p, "l", rat(1, 2)));
  if (zoo_has(name))
    throw ParameterError("zoo entry '" + name + "' is finite, not graded");
  throw ParameterError("unknown zoo entry '" + name + "'");
}

inline std::variant<LieAlgebra, GradedAlgebra> zoo_build(
    const std::string& name, const Params& p = {}) {
  if (zoo_is_graded(name)) return zoo_build_graded(name, p);
  return zoo_build_finite(name, p);
}

}  // namespace lieder
