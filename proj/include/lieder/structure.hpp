#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieder/algebra.hpp"

namespace lieder {

// Annihilator Ann_V(W) = {x in V : [x, w] = 0 for all w in W}.
inline Subspace ann(const LieAlgebra& L, const Subspace& V, const Subspace& W) {
  int n = L.dim();
  if (V.ambient() != n || W.ambient() != n)
    throw DimensionMismatch("annihilator arguments live in a different space");
  if (V.dim() == 0) return Subspace(n);
  // unknowns u with x = sum_a u_a v_a; one row per (w basis, coordinate)
  std::vector<SparseVec> rows;
  for (const auto& w : W.basis()) {
    std::map<int, SparseVec> coord_rows;  // coordinate -> row over u
    for (int a = 0; a < V.dim(); ++a)
      for (const auto& [k, c] : L.bracket(V.basis()[a], w))
        vec_set(coord_rows[k], a, c);
    for (auto& [k, row] : coord_rows) rows.push_back(std::move(row));
  }
  Subspace ker = kernel_of_rows(V.dim(), rows);
  std::vector<SparseVec> spanning;
  for (const auto& u : ker.basis()) {
    SparseVec x;
    for (const auto& [a, c] : u) vec_axpy(x, c, V.basis()[a]);
    spanning.push_back(std::move(x));
  }
  return Subspace(n, spanning);
}

inline Subspace center(const LieAlgebra& L) {
  Subspace full = Subspace::full(L.dim());
  return ann(L, full, full);
}

// span{[a, b] : a in A, b in B}
inline Subspace span_of_brackets(const LieAlgebra& L, const Subspace& A,
                                 const Subspace& B) {
  std::vector<SparseVec> spanning;
  for (const auto& a : A.basis())
    for (const auto& b : B.basis()) {
      SparseVec v = L.bracket(a, b);
      if (!v.empty()) spanning.push_back(std::move(v));
    }
  return Subspace(L.dim(), spanning);
}

inline Subspace derived_subalgebra(const LieAlgebra& L) {
  Subspace full = Subspace::full(L.dim());
  return span_of_brackets(L, full, full);
}

struct SeriesReport {
  std::vector<Subspace> terms;  // strictly decreasing until stabilization
  bool reaches_zero = false;
};

inline SeriesReport derived_series(const LieAlgebra& L) {
  SeriesReport r;
  r.terms.push_back(Subspace::full(L.dim()));
  while (true) {
    const Subspace& last = r.terms.back();
    Subspace next = span_of_brackets(L, last, last);
    if (next.dim() == last.dim()) break;
    r.terms.push_back(std::move(next));
    if (r.terms.back().dim() == 0) break;
  }
  r.reaches_zero = r.terms.back().dim() == 0;
  return r;
}

inline SeriesReport lower_central_series(const LieAlgebra& L) {
  SeriesReport r;
  Subspace full = Subspace::full(L.dim());
  r.terms.push_back(full);
  while (true) {
    const Subspace& last = r.terms.back();
    Subspace next = span_of_brackets(L, full, last);
    if (next.dim() == last.dim()) break;
    r.terms.push_back(std::move(next));
    if (r.terms.back().dim() == 0) break;
  }
  r.reaches_zero = r.terms.back().dim() == 0;
  return r;
}

inline bool is_solvable(const LieAlgebra& L) { return derived_series(L).reaches_zero; }
inline bool is_nilpotent(const LieAlgebra& L) {
  return lower_central_series(L).reaches_zero;
}
inline bool is_abelian(const LieAlgebra& L) {
  return L.constants().empty() && L.odd_diagonal().empty();
}

struct IdealWitness {
  int basis_index;   // x = e_i
  SparseVec member;  // v in the candidate subspace
  SparseVec escape;  // [x, v], not contained
};

inline bool is_ideal(const LieAlgebra& L, const Subspace& S,
                     IdealWitness* witness = nullptr) {
  for (int i = 0; i < L.dim(); ++i) {
    SparseVec ei{{i, rat(1)}};
    for (const auto& v : S.basis()) {
      SparseVec br = L.bracket(ei, v);
      if (!S.contains(br)) {
        if (witness) *witness = {i, v, br};
        return false;
      }
    }
  }
  return true;
}

// Matrix of w -> [x, w] on an ad_x-invariant subspace, in its RREF basis.
inline Matrix adjoint_map(const LieAlgebra& L, const SparseVec& x,
                          const Subspace& S) {
  Matrix m(S.dim(), S.dim());
  for (int b = 0; b < S.dim(); ++b) {
    SparseVec img = L.bracket(x, S.basis()[b]);
    auto coords = S.coordinates(img);
    if (!coords)
      throw NotInvariant(
          "subspace is not invariant: the image of a basis vector escapes");
    for (int a = 0; a < S.dim(); ++a) m.set(a, b, (*coords)[a]);
  }
  return m;
}

struct CommonEigenvector {
  SparseVec vector;                 // w0
  std::map<int, Rational> weights;  // basis index -> lambda with [e_i, w0] = lambda w0
};

namespace detail {

struct EigenSearch {
  const LieAlgebra& L;
  std::vector<std::vector<EigenPair>> candidates;  // per basis element
  std::string deepest_label;
  int deepest = -1;

  // Depth-first over eigenvalue choices, eigenvalues in (numerator,
  // denominator) order; the first full assignment wins, so results are
  // reproducible.
  std::optional<std::vector<Rational>> run(int i, Subspace current,
                                           std::vector<Rational>& chosen,
                                           Subspace& final_space) {
    if (current.dim() == 0) return std::nullopt;
    if (i == L.dim()) {
      final_space = current;
      return chosen;
    }
    bool any = false;
    for (const auto& [lam, espace] : candidates[i]) {
      Subspace next = intersect(current, espace);
      if (next.dim() == 0) continue;
      any = true;
      chosen.push_back(lam);
      auto res = run(i + 1, std::move(next), chosen, final_space);
      if (res) return res;
      chosen.pop_back();
    }
    if (!any && i > deepest) {
      deepest = i;
      deepest_label = L.label(i);
    }
    return std::nullopt;
  }
};

}  // namespace detail

// Joint rational eigenvector of all adjoint maps inside W. Requires W
// invariant under every ad_{e_i} and L solvable; over the rationals the
// search can fail where it would succeed over an algebraically closed
// field, in which case FieldExtensionRequired is raised.
inline CommonEigenvector common_eigenvector(const LieAlgebra& L,
                                            const Subspace& W) {
  if (W.dim() == 0)
    throw DimensionMismatch("common eigenvector of the zero subspace");
  if (!is_solvable(L)) throw NotSolvable("algebra is not solvable");
  for (int i = 0; i < L.dim(); ++i) {
    SparseVec ei{{i, rat(1)}};
    for (const auto& v : W.basis())
      if (!W.contains(L.bracket(ei, v)))
        throw NotInvariant("W is not invariant under ad_" + L.label(i));
  }
  detail::EigenSearch search{L, {}, "", -1};
  for (int i = 0; i < L.dim(); ++i)
    search.candidates.push_back(rational_eigen_pairs(L.adjoint_basis(i)));
  std::vector<Rational> chosen;
  Subspace final_space(L.dim());
  auto weights = search.run(0, W, chosen, final_space);
  if (!weights)
    throw FieldExtensionRequired(
        "no rational joint eigenvector exists in the given subspace "
        "(blocked at ad_" +
        (search.deepest >= 0 ? search.deepest_label : std::string("?")) + ")");
  CommonEigenvector out;
  out.vector = final_space.basis()[0];
  for (int i = 0; i < L.dim(); ++i) {
    out.weights[i] = (*weights)[i];
    // postcondition re-check: [e_i, w0] = lambda_i w0 exactly
    SparseVec ei{{i, rat(1)}};
    SparseVec lhs = L.bracket(ei, out.vector);
    SparseVec rhs = vec_scaled(out.vector, (*weights)[i]);
    if (!(lhs == rhs))
      throw Error("internal: joint eigenvector postcondition failed");
  }
  return out;
}

}  // namespace lieder
