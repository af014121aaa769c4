#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lieder/linalg.hpp"
#include "lieder/parity.hpp"

namespace lieder {

// Basis symbol of a graded algebra: a family name, a finite tag tuple
// (e.g. the spatial pair of a rotation generator) and a degree. Degrees live
// on Z or Z+1/2; they are stored doubled so all index arithmetic is integral.
struct GradedSymbol {
  int family = 0;
  std::vector<int> tags;
  long deg2 = 0;

  auto key() const { return std::tie(family, tags, deg2); }
  bool operator==(const GradedSymbol& o) const { return key() == o.key(); }
  bool operator<(const GradedSymbol& o) const { return key() < o.key(); }
};

struct FamilySpec {
  std::string name;
  int parity = 0;    // super degree if the algebra is super, Z2 tag otherwise
  int lattice2 = 0;  // deg2 parity: 0 for Z, 1 for Z + 1/2
  std::vector<std::vector<int>> tag_values = {{}};
};

struct CentralSpec {
  std::string name;
  int parity = 0;
};

// Finite linear combination of graded symbols and central elements.
struct GradedElem {
  std::map<GradedSymbol, Rational> terms;
  std::map<int, Rational> centrals;

  bool empty() const { return terms.empty() && centrals.empty(); }
  bool operator==(const GradedElem&) const = default;

  void add(const GradedSymbol& s, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(s);
    if (it == terms.end())
      terms.emplace(s, c);
    else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  void add_central(int idx, const Rational& c) {
    if (c == 0) return;
    auto it = centrals.find(idx);
    if (it == centrals.end())
      centrals.emplace(idx, c);
    else {
      it->second += c;
      if (it->second == 0) centrals.erase(it);
    }
  }
  void add_scaled(const GradedElem& o, const Rational& c) {
    for (const auto& [s, x] : o.terms) add(s, c * x);
    for (const auto& [i, x] : o.centrals) add_central(i, c * x);
  }
};

// Infinite-dimensional graded algebra driven by a closed-form structure
// function. The table is consulted with the family indices in nondecreasing
// order; reversed arguments are derived through super antisymmetry, so the
// table only has to be written once per family pair.
struct GradedAlgebra {
  std::string name;
  bool super = false;
  std::vector<FamilySpec> families;
  std::vector<CentralSpec> centrals;
  std::function<GradedElem(const GradedSymbol&, const GradedSymbol&)> table;
  // Nonempty when the shift-ansatz class is not known to exhaust all
  // half-derivations of this algebra; propagated verbatim into reports.
  std::string ansatz_caveat;

  int parity_of(const GradedSymbol& s) const { return families[s.family].parity; }
  int super_degree(const GradedSymbol& s) const {
    return super ? families[s.family].parity : 0;
  }

  GradedElem bracket(const GradedSymbol& a, const GradedSymbol& b) const {
    if (a.family <= b.family) return table(a, b);
    GradedElem r = table(b, a);
    Rational sign =
        (super && parity_of(a) == 1 && parity_of(b) == 1) ? 1 : -1;
    GradedElem out;
    out.add_scaled(r, sign);
    return out;
  }

  GradedElem bracket(const GradedElem& x, const GradedSymbol& b) const {
    GradedElem out;
    for (const auto& [s, c] : x.terms) out.add_scaled(bracket(s, b), c);
    return out;  // centrals bracket to zero
  }

  GradedElem bracket(const GradedSymbol& a, const GradedElem& y) const {
    GradedElem out;
    for (const auto& [s, c] : y.terms) out.add_scaled(bracket(a, s), c);
    return out;
  }

  // All family symbols with |degree| <= N, in canonical order.
  std::vector<GradedSymbol> window_symbols(long N) const {
    std::vector<GradedSymbol> out;
    for (int f = 0; f < static_cast<int>(families.size()); ++f) {
      const FamilySpec& fam = families[f];
      for (const auto& tags : fam.tag_values) {
        long start = -2 * N;
        if (((start % 2) + 2) % 2 != fam.lattice2) ++start;
        for (long d2 = start; d2 <= 2 * N; d2 += 2)
          out.push_back({f, tags, d2});
      }
    }
    return out;
  }
};

struct GradedJacobiViolation {
  GradedSymbol x, y, z;
  GradedElem residual;
};

struct GradedJacobiReport {
  bool pass = true;
  long window = 0;
  std::vector<GradedJacobiViolation> violations;
};

// Exhaustive super Jacobi check over all symbol triples with degrees in
// [-N, N]; bracket values may leave the window, the closed forms stay exact.
inline GradedJacobiReport validate_graded_jacobi(const GradedAlgebra& G,
                                                 long N,
                                                 std::size_t max_reported = 10) {
  if (N < 2) throw ParameterError("jacobi window must satisfy N >= 2");
  GradedJacobiReport report;
  report.window = N;
  std::vector<GradedSymbol> syms = G.window_symbols(N);
  auto sgn = [&](const GradedSymbol& a, const GradedSymbol& b) -> Rational {
    return (G.super && G.super_degree(a) == 1 && G.super_degree(b) == 1) ? -1
                                                                         : 1;
  };
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i; j < syms.size(); ++j)
      for (std::size_t k = j; k < syms.size(); ++k) {
        const GradedSymbol &x = syms[i], &y = syms[j], &z = syms[k];
        GradedElem res;
        res.add_scaled(G.bracket(G.bracket(x, y), z), sgn(x, z));
        res.add_scaled(G.bracket(G.bracket(y, z), x), sgn(y, x));
        res.add_scaled(G.bracket(G.bracket(z, x), y), sgn(z, y));
        if (!res.empty()) {
          report.pass = false;
          if (report.violations.size() < max_reported)
            report.violations.push_back({x, y, z, std::move(res)});
        }
      }
  return report;
}

// Spot check of super antisymmetry of the structure function on all window
// pairs of the same family (cross-family reversal is derived, not stored).
inline bool check_graded_antisymmetry(const GradedAlgebra& G, long N) {
  std::vector<GradedSymbol> syms = G.window_symbols(N);
  for (const auto& a : syms)
    for (const auto& b : syms) {
      if (a.family != b.family) continue;
      GradedElem lhs = G.bracket(a, b);
      GradedElem rhs;
      Rational sign =
          (G.super && G.parity_of(a) == 1 && G.parity_of(b) == 1) ? 1 : -1;
      rhs.add_scaled(G.bracket(b, a), sign);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

// A map in the shift-ansatz class: on the family part it acts by
// degree-independent shift coefficients phi(X_i) = sum_j a_j Y_{i+j} with
// |j| <= K, plus central coefficients for window sources, plus images of the
// central elements.
struct ShiftAnsatzSolution {
  std::map<std::tuple<int, int, long>, Rational> shift_coeffs;
  std::map<std::pair<GradedSymbol, int>, Rational> central_rows;
  std::map<std::pair<int, int>, Rational> central_to_class;
  std::map<std::pair<int, int>, Rational> central_to_central;
};

struct ShiftClassInfo {
  int family = 0;
  std::vector<int> tags;
  std::string display;
};

struct ShiftSolveResult {
  long K = 0;
  long N = 0;
  ParityMode mode = ParityMode::Even;
  std::vector<ShiftAnsatzSolution> basis;
  std::vector<ShiftClassInfo> classes;
  std::vector<std::string> central_names;
  std::string caveat;

  int dim() const { return static_cast<int>(basis.size()); }
};

namespace detail {

struct ShiftUnknowns {
  // alpha: (src class, tgt class, j2); beta: (window symbol, central);
  // gamma: (central, tgt class); rho: (central, central)
  std::vector<std::tuple<int, int, long>> alphas;
  std::vector<std::pair<GradedSymbol, int>> betas;
  std::vector<std::pair<int, int>> gammas;
  std::vector<std::pair<int, int>> rhos;
  std::map<std::tuple<int, int, long>, int> alpha_idx;
  std::map<std::pair<GradedSymbol, int>, int> beta_idx;
  std::map<std::pair<int, int>, int> gamma_idx;
  std::map<std::pair<int, int>, int> rho_idx;
  int total = 0;
};

struct EquationCoord {
  int central = -1;  // >= 0 marks a central coordinate
  GradedSymbol sym;

  auto key() const { return std::tie(central, sym); }
  bool operator<(const EquationCoord& o) const { return key() < o.key(); }
};

}  // namespace detail

// Exact solution space of the half-derivation identity restricted to the
// shift-ansatz class. Equations come from all bracket pairs with degrees in
// [-N, N]; the ansatz defines the map on every symbol, so the equations are
// exact and enlarging the window only adds constraints.
class ShiftAnsatzSolver {
 public:
  ShiftAnsatzSolver(const GradedAlgebra& G, long K, long N)
      : G_(G), K_(K), N_(N) {
    if (K < 0) throw ParameterError("shift bound must satisfy K >= 0");
    if (N < 2 * K + 2)
      throw ParameterError("window must satisfy N >= 2K + 2");
    for (int f = 0; f < static_cast<int>(G.families.size()); ++f)
      for (const auto& tags : G.families[f].tag_values) {
        ShiftClassInfo info;
        info.family = f;
        info.tags = tags;
        info.display = G.families[f].name;
        for (std::size_t t = 0; t < tags.size(); ++t)
          info.display += (t == 0 ? "_" : "_") + std::to_string(tags[t]);
        class_of_[{f, tags}] = static_cast<int>(classes_.size());
        classes_.push_back(std::move(info));
      }
  }

  ShiftSolveResult solve(ParityMode mode) const {
    if (mode == ParityMode::Full && G_.super) {
      ShiftSolveResult even = solve_homogeneous(ParityMode::Even);
      ShiftSolveResult odd = solve_homogeneous(ParityMode::Odd);
      even.mode = ParityMode::Full;
      even.basis.insert(even.basis.end(), odd.basis.begin(), odd.basis.end());
      return even;
    }
    return solve_homogeneous(mode);
  }

 private:
  const GradedAlgebra& G_;
  long K_, N_;
  std::vector<ShiftClassInfo> classes_;
  std::map<std::pair<int, std::vector<int>>, int> class_of_;

  int class_index(const GradedSymbol& s) const {
    return class_of_.at({s.family, s.tags});
  }
  int class_parity(int c) const {
    return G_.families[classes_[c].family].parity;
  }

  // mode Even keeps the grading, Odd flips it; Full (non-super) allows both.
  bool target_allowed(ParityMode mode, int src_parity, int tgt_parity) const {
    if (mode == ParityMode::Full) return true;
    if (mode == ParityMode::Even) return src_parity == tgt_parity;
    return src_parity != tgt_parity;
  }

  detail::ShiftUnknowns enumerate_unknowns(ParityMode mode) const {
    detail::ShiftUnknowns u;
    int nc = static_cast<int>(classes_.size());
    for (int s = 0; s < nc; ++s)
      for (int t = 0; t < nc; ++t) {
        if (!target_allowed(mode, class_parity(s), class_parity(t))) continue;
        int ls = G_.families[classes_[s].family].lattice2;
        int lt = G_.families[classes_[t].family].lattice2;
        int need = ((lt - ls) % 2 + 2) % 2;
        for (long j2 = -2 * K_; j2 <= 2 * K_; ++j2) {
          if (((j2 % 2) + 2) % 2 != need) continue;
          u.alpha_idx[{s, t, j2}] = u.total++;
          u.alphas.emplace_back(s, t, j2);
        }
      }
    for (const auto& sym : G_.window_symbols(N_))
      for (int c = 0; c < static_cast<int>(G_.centrals.size()); ++c) {
        if (!target_allowed(mode, G_.parity_of(sym), G_.centrals[c].parity))
          continue;
        u.beta_idx[{sym, c}] = u.total++;
        u.betas.emplace_back(sym, c);
      }
    for (int c = 0; c < static_cast<int>(G_.centrals.size()); ++c) {
      for (int t = 0; t < nc; ++t) {
        if (G_.families[classes_[t].family].lattice2 != 0) continue;
        if (!target_allowed(mode, G_.centrals[c].parity, class_parity(t)))
          continue;
        u.gamma_idx[{c, t}] = u.total++;
        u.gammas.emplace_back(c, t);
      }
      for (int c2 = 0; c2 < static_cast<int>(G_.centrals.size()); ++c2) {
        if (!target_allowed(mode, G_.centrals[c].parity,
                            G_.centrals[c2].parity))
          continue;
        u.rho_idx[{c, c2}] = u.total++;
        u.rhos.emplace_back(c, c2);
      }
    }
    return u;
  }

  using Rows = std::map<detail::EquationCoord, SparseVec>;

  static void bump(Rows& rows, const detail::EquationCoord& coord, int unknown,
                   const Rational& c) {
    if (c == 0) return;
    SparseVec& row = rows[coord];
    auto it = row.find(unknown);
    if (it == row.end())
      row.emplace(unknown, c);
    else {
      it->second += c;
      if (it->second == 0) row.erase(it);
    }
  }

  GradedSymbol class_symbol(int cls, long deg2) const {
    return {classes_[cls].family, classes_[cls].tags, deg2};
  }

  // phi applied to a family symbol, scaled; emits alpha and beta unknowns.
  void add_phi_symbol(const detail::ShiftUnknowns& u, const GradedSymbol& Z,
                      const Rational& scale, Rows& rows) const {
    int s = class_index(Z);
    for (const auto& [key, idx] : u.alpha_idx) {
      const auto& [src, tgt, j2] = key;
      if (src != s) continue;
      bump(rows, {-1, class_symbol(tgt, Z.deg2 + j2)}, idx, scale);
    }
    if (Z.deg2 >= -2 * N_ && Z.deg2 <= 2 * N_)
      for (int c = 0; c < static_cast<int>(G_.centrals.size()); ++c) {
        auto it = u.beta_idx.find({Z, c});
        if (it != u.beta_idx.end()) bump(rows, {c, {}}, it->second, scale);
      }
  }

  void add_phi_central(const detail::ShiftUnknowns& u, int c,
                       const Rational& scale, Rows& rows) const {
    for (const auto& [key, idx] : u.gamma_idx) {
      if (key.first != c) continue;
      bump(rows, {-1, class_symbol(key.second, 0)}, idx, scale);
    }
    for (const auto& [key, idx] : u.rho_idx) {
      if (key.first != c) continue;
      bump(rows, {key.second, {}}, idx, scale);
    }
  }

  void add_phi_elem(const detail::ShiftUnknowns& u, const GradedElem& w,
                    const Rational& scale, Rows& rows) const {
    for (const auto& [Z, cz] : w.terms) add_phi_symbol(u, Z, scale * cz, rows);
    for (const auto& [c, cc] : w.centrals) add_phi_central(u, c, scale * cc, rows);
  }

  static void add_elem_rows(Rows& rows, const GradedElem& e, int unknown,
                            const Rational& scale) {
    for (const auto& [sym, c] : e.terms) bump(rows, {-1, sym}, unknown, scale * c);
    for (const auto& [cen, c] : e.centrals) bump(rows, {cen, {}}, unknown, scale * c);
  }

  // [phi(a), b] (left = true) or [a, phi(b)] (left = false), scaled.
  void add_bracket_with_phi(const detail::ShiftUnknowns& u,
                            const GradedSymbol& a, const GradedSymbol& b,
                            bool left, const Rational& scale, Rows& rows) const {
    const GradedSymbol& src = left ? a : b;
    int s = class_index(src);
    for (const auto& [key, idx] : u.alpha_idx) {
      const auto& [ksrc, tgt, j2] = key;
      if (ksrc != s) continue;
      GradedSymbol T = class_symbol(tgt, src.deg2 + j2);
      GradedElem br = left ? G_.bracket(T, b) : G_.bracket(a, T);
      add_elem_rows(rows, br, idx, scale);
    }
    // central part of phi(src) brackets to zero
  }

  ShiftSolveResult solve_homogeneous(ParityMode mode) const {
    detail::ShiftUnknowns u = enumerate_unknowns(mode);
    int phi_parity = (mode == ParityMode::Odd) ? 1 : 0;
    const Rational half = rat(1, 2);
    std::vector<GradedSymbol> syms = G_.window_symbols(N_);

    RrefEngine eng(u.total);
    auto flush = [&](Rows& rows) {
      for (auto& [coord, row] : rows) eng.add_row(std::move(row));
    };

    for (std::size_t i = 0; i < syms.size(); ++i)
      for (std::size_t j = i; j < syms.size(); ++j) {
        const GradedSymbol &a = syms[i], &b = syms[j];
        if (i == j && !(G_.super && G_.super_degree(a) == 1)) continue;
        Rows rows;
        add_phi_elem(u, G_.bracket(a, b), 1, rows);
        add_bracket_with_phi(u, a, b, true, -half, rows);
        Rational sign =
            (G_.super && G_.super_degree(a) == 1 && phi_parity == 1) ? -1 : 1;
        add_bracket_with_phi(u, a, b, false, -half * sign, rows);
        flush(rows);
      }
    // pairs (central, b): 0 = [phi(central), b]
    for (int c = 0; c < static_cast<int>(G_.centrals.size()); ++c)
      for (const auto& b : syms) {
        Rows rows;
        for (const auto& [key, idx] : u.gamma_idx) {
          if (key.first != c) continue;
          GradedElem br = G_.bracket(class_symbol(key.second, 0), b);
          add_elem_rows(rows, br, idx, 1);
        }
        flush(rows);
      }

    Subspace ker = kernel_of_rows_engine(u.total, eng);

    ShiftSolveResult out;
    out.K = K_;
    out.N = N_;
    out.mode = mode;
    out.classes = classes_;
    for (const auto& c : G_.centrals) out.central_names.push_back(c.name);
    out.caveat = G_.ansatz_caveat;
    for (const auto& vec : ker.basis()) {
      ShiftAnsatzSolution sol;
      for (const auto& [idx, coeff] : vec) {
        if (idx < static_cast<int>(u.alphas.size())) {
          sol.shift_coeffs[u.alphas[idx]] = coeff;
          continue;
        }
        int k = idx - static_cast<int>(u.alphas.size());
        if (k < static_cast<int>(u.betas.size())) {
          sol.central_rows[u.betas[k]] = coeff;
          continue;
        }
        k -= static_cast<int>(u.betas.size());
        if (k < static_cast<int>(u.gammas.size())) {
          sol.central_to_class[u.gammas[k]] = coeff;
          continue;
        }
        k -= static_cast<int>(u.gammas.size());
        sol.central_to_central[u.rhos[k]] = coeff;
      }
      out.basis.push_back(std::move(sol));
    }
    return out;
  }

  static Subspace kernel_of_rows_engine(int cols, const RrefEngine& eng) {
    std::vector<bool> is_pivot(cols, false);
    for (int c : eng.pivot_cols()) is_pivot[c] = true;
    std::vector<SparseVec> vecs;
    for (int f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      SparseVec v;
      v[f] = 1;
      for (const auto& [pc, row] : eng.pivot_rows()) {
        auto it = row.find(f);
        if (it != row.end()) v[pc] = -it->second;
      }
      vecs.push_back(std::move(v));
    }
    return Subspace(cols, vecs);
  }
};

inline ShiftSolveResult shift_ansatz_solve(const GradedAlgebra& G, long K,
                                           long N, ParityMode mode) {
  return ShiftAnsatzSolver(G, K, N).solve(mode);
}

// A solution space is trivial when it is exactly the line of scalar maps:
// one basis element acting as the identity on every family and every central.
inline bool solution_is_trivial(const ShiftSolveResult& r) {
  if (r.dim() != 1) return false;
  const ShiftAnsatzSolution& s = r.basis[0];
  if (!s.central_rows.empty() || !s.central_to_class.empty()) return false;
  int nc = static_cast<int>(r.classes.size());
  if (static_cast<int>(s.shift_coeffs.size()) != nc) return false;
  for (int c = 0; c < nc; ++c) {
    auto it = s.shift_coeffs.find({c, c, 0});
    if (it == s.shift_coeffs.end() || it->second != 1) return false;
  }
  int ncen = static_cast<int>(r.central_names.size());
  if (static_cast<int>(s.central_to_central.size()) != ncen) return false;
  for (int c = 0; c < ncen; ++c) {
    auto it = s.central_to_central.find({c, c});
    if (it == s.central_to_central.end() || it->second != 1) return false;
  }
  return true;
}

}  // namespace lieder
