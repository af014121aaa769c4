#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lieder/parity.hpp"
#include "lieder/structure.hpp"

namespace lieder {

// Candidate (super)derivation: a square matrix on the algebra basis with the
// convention phi(e_t) = sum_k M(k,t) e_k. The parity drives Koszul signs on
// superalgebras; ordinary algebras ignore it in the identity.
struct LinearMap {
  Matrix matrix;
  int parity = 0;

  SparseVec apply(const SparseVec& v) const { return matrix.apply(v); }
  int dim() const { return matrix.rows(); }
  bool operator==(const LinearMap&) const = default;
};

inline LinearMap identity_map(int n) { return {Matrix::identity(n), 0}; }

// A parity-p map must send tag-q basis vectors into the tag-(q+p) span.
inline bool parity_pattern_ok(const LieAlgebra& L, const LinearMap& m) {
  for (int k = 0; k < L.dim(); ++k)
    for (const auto& [t, c] : m.matrix.row(k))
      if ((L.solver_tag(t) + m.parity) % 2 != L.solver_tag(k)) return false;
  return true;
}

// Checks phi[a,b] = delta ([phi a, b] + (-1)^{deg a deg phi} [a, phi b]) on
// every basis pair (i < j plus odd diagonals).
inline bool check_delta_derivation(const LieAlgebra& L, const LinearMap& phi,
                                   const Rational& delta) {
  if (phi.matrix.rows() != L.dim() || phi.matrix.cols() != L.dim())
    throw DimensionMismatch("map does not match the algebra dimension");
  auto holds = [&](int i, int j) {
    SparseVec lhs = phi.apply(L.bracket_basis(i, j));
    SparseVec ei{{i, rat(1)}}, ej{{j, rat(1)}};
    SparseVec rhs = L.bracket(phi.apply(ei), ej);
    Rational sign =
        (L.is_super() && L.parity(i) == 1 && phi.parity == 1) ? -1 : 1;
    vec_axpy(rhs, sign, L.bracket(ei, phi.apply(ej)));
    vec_scale(rhs, delta);
    return lhs == rhs;
  };
  for (int i = 0; i < L.dim(); ++i) {
    if (L.is_super() && L.parity(i) == 1 && !holds(i, i)) return false;
    for (int j = i + 1; j < L.dim(); ++j)
      if (!holds(i, j)) return false;
  }
  return true;
}

// Space of delta-(super)derivations: the kernel of the linear system imposed
// by the identity on all basis pairs. Basis maps are canonical (reduced row
// echelon form of the row-major vectorizations).
struct DerivationSpace {
  Rational delta;
  ParityMode mode = ParityMode::Full;
  std::vector<LinearMap> basis;
  std::string algebra_name;
  int algebra_dim = 0;

  int dim() const { return static_cast<int>(basis.size()); }

  Subspace to_subspace() const {
    std::vector<SparseVec> rows;
    for (const auto& m : basis) {
      SparseVec v;
      for (int r = 0; r < algebra_dim; ++r)
        for (const auto& [c, x] : m.matrix.row(r))
          v[r * algebra_dim + c] = x;
      rows.push_back(std::move(v));
    }
    return Subspace(algebra_dim * algebra_dim, rows);
  }

  bool contains(const LinearMap& m) const {
    SparseVec v;
    for (int r = 0; r < algebra_dim; ++r)
      for (const auto& [c, x] : m.matrix.row(r)) v[r * algebra_dim + c] = x;
    return to_subspace().contains(v);
  }
};

namespace detail {

// Homogeneous solve: unknowns are the matrix cells allowed by the parity
// constraint; one equation row per (basis pair, output coordinate).
inline std::vector<LinearMap> solve_delta_system(const LieAlgebra& L,
                                                 const Rational& delta,
                                                 int phi_parity,
                                                 bool constrain) {
  int n = L.dim();
  std::vector<int> cell_of;
  std::vector<int> unknown_of(n * n, -1);
  for (int k = 0; k < n; ++k)
    for (int t = 0; t < n; ++t) {
      if (constrain && (L.solver_tag(t) + phi_parity) % 2 != L.solver_tag(k))
        continue;
      unknown_of[k * n + t] = static_cast<int>(cell_of.size());
      cell_of.push_back(k * n + t);
    }
  int unknowns = static_cast<int>(cell_of.size());

  RrefEngine eng(unknowns);
  auto add_pair = [&](int i, int j) {
    SparseVec w = L.bracket_basis(i, j);
    Rational sign =
        (L.is_super() && L.parity(i) == 1 && phi_parity == 1) ? -1 : 1;
    // per output coordinate k: rows over cell unknowns, from
    //   sum_t w_t phi(k,t) - delta sum_u phi(u,i) [e_u,e_j]_k
    //                      - delta sign sum_u phi(u,j) [e_i,e_u]_k = 0
    std::vector<SparseVec> rows(n);
    auto bump = [&](int k, int cell, const Rational& c) {
      int u = unknown_of[cell];
      if (u < 0 || c == 0) return;
      auto it = rows[k].find(u);
      if (it == rows[k].end())
        rows[k].emplace(u, c);
      else {
        it->second += c;
        if (it->second == 0) rows[k].erase(it);
      }
    };
    for (int k = 0; k < n; ++k)
      for (const auto& [t, c] : w) bump(k, k * n + t, c);
    for (int u = 0; u < n; ++u) {
      for (const auto& [k, c] : L.bracket_basis(u, j))
        bump(k, u * n + i, -delta * c);
      for (const auto& [k, c] : L.bracket_basis(i, u))
        bump(k, u * n + j, -delta * sign * c);
    }
    for (auto& row : rows)
      if (!row.empty()) eng.add_row(std::move(row));
  };
  for (int i = 0; i < n; ++i) {
    if (L.is_super() && L.parity(i) == 1) add_pair(i, i);
    for (int j = i + 1; j < n; ++j) add_pair(i, j);
  }

  std::vector<bool> is_pivot(unknowns, false);
  for (int c : eng.pivot_cols()) is_pivot[c] = true;
  // kernel vectors, then canonicalize over the embedded n^2 coordinates
  RrefEngine canon(n * n);
  for (int f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    SparseVec full;
    full[cell_of[f]] = 1;
    for (const auto& [pc, prow] : eng.pivot_rows()) {
      auto it = prow.find(f);
      if (it != prow.end()) full[cell_of[pc]] = -it->second;
    }
    canon.add_row(std::move(full));
  }
  std::vector<LinearMap> maps;
  for (const auto& [lead, rowvec] : canon.pivot_rows()) {
    LinearMap m{Matrix(n, n), phi_parity};
    for (const auto& [cell, c] : rowvec) m.matrix.set(cell / n, cell % n, c);
    maps.push_back(std::move(m));
  }
  return maps;
}

}  // namespace detail

inline DerivationSpace delta_derivations(const LieAlgebra& L,
                                         const Rational& delta,
                                         ParityMode mode = ParityMode::Full) {
  DerivationSpace space;
  space.delta = delta;
  space.mode = mode;
  space.algebra_name = L.name();
  space.algebra_dim = L.dim();
  if (mode == ParityMode::Even || mode == ParityMode::Odd) {
    space.basis = detail::solve_delta_system(L, delta,
                                             mode == ParityMode::Odd ? 1 : 0,
                                             true);
    return space;
  }
  if (!L.is_super()) {
    // no signs in the identity, one unconstrained solve covers everything
    space.basis = detail::solve_delta_system(L, delta, 0, false);
    return space;
  }
  // super full mode: the identity depends on deg(phi); solve per parity and
  // merge (cell supports are disjoint, so the union stays canonical)
  std::vector<LinearMap> even = detail::solve_delta_system(L, delta, 0, true);
  std::vector<LinearMap> odd = detail::solve_delta_system(L, delta, 1, true);
  auto lead_cell = [&](const LinearMap& m) {
    for (int r = 0; r < L.dim(); ++r)
      if (!m.matrix.row(r).empty())
        return r * L.dim() + m.matrix.row(r).begin()->first;
    return L.dim() * L.dim();
  };
  std::size_t a = 0, b = 0;
  while (a < even.size() || b < odd.size()) {
    if (b == odd.size() ||
        (a < even.size() && lead_cell(even[a]) < lead_cell(odd[b])))
      space.basis.push_back(std::move(even[a++]));
    else
      space.basis.push_back(std::move(odd[b++]));
  }
  return space;
}

// Trivial means exactly the scalar line: dimension 1 spanned by the identity.
inline bool is_trivial_space(const DerivationSpace& D) {
  return D.dim() == 1 && D.basis[0].matrix == Matrix::identity(D.algebra_dim);
}

// (Super)commutator; composing delta_1- and delta_2-derivations this way
// yields a delta_1 delta_2-derivation.
inline LinearMap commutator_map(const LinearMap& a, const LinearMap& b,
                                bool super = false) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("commutator of maps of different sizes");
  Matrix ab = a.matrix.multiply(b.matrix);
  Matrix ba = b.matrix.multiply(a.matrix);
  Rational sign = (super && a.parity == 1 && b.parity == 1) ? 1 : -1;
  return {ab.plus(ba, sign), (a.parity + b.parity) % 2};
}

// Cyclic identity [phi(x),[y,z]] + [phi(y),[z,x]] + [phi(z),[x,y]] = 0.
// The form is alternating, so distinct basis triples suffice.
inline bool hom_lie_check(const LieAlgebra& L, const LinearMap& phi) {
  if (L.is_super())
    throw Error("Hom-Lie structures are checked on ordinary Lie algebras only");
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j)
      for (int k = j + 1; k < L.dim(); ++k) {
        SparseVec ei{{i, rat(1)}}, ej{{j, rat(1)}}, ek{{k, rat(1)}};
        SparseVec acc = L.bracket(phi.apply(ei), L.bracket_basis(j, k));
        vec_axpy(acc, 1, L.bracket(phi.apply(ej), L.bracket_basis(k, i)));
        vec_axpy(acc, 1, L.bracket(phi.apply(ek), L.bracket_basis(i, j)));
        if (!acc.empty()) return false;
      }
  return true;
}

// Centroid membership: phi[x,y] = [phi x, y] = [x, phi y] on all pairs.
inline bool centroid_check(const LieAlgebra& L, const LinearMap& phi) {
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i; j < L.dim(); ++j) {
      if (i == j && L.parity(i) == 0) continue;
      SparseVec ei{{i, rat(1)}}, ej{{j, rat(1)}};
      SparseVec mid = phi.apply(L.bracket_basis(i, j));
      if (!(L.bracket(phi.apply(ei), ej) == mid)) return false;
      if (!(L.bracket(ei, phi.apply(ej)) == mid)) return false;
    }
  return true;
}

inline bool is_scalar_of_identity(const LinearMap& m) {
  int n = m.matrix.rows();
  if (n == 0) return true;
  Rational c = m.matrix.at(0, 0);
  return m.matrix == Matrix::identity(n).scaled(c);
}

// Builds a half-derivation that is provably not a scalar map, for any
// solvable algebra of dimension > 1. Branches:
//   (a) nonzero center meeting [L,L] trivially: the projection onto the
//       center along V + [L,L];
//   (b) nonzero center meeting [L,L]: kill [L,L], send a complement basis to
//       a fixed central commutator x1;
//   (c) centerless: ad_{w0} for a joint eigenvector w0 of all adjoint maps
//       inside Ann_{[L,L]}([L,L]).
inline LinearMap construct_half_derivation_solvable(const LieAlgebra& L) {
  if (!is_solvable(L)) throw NotSolvable("algebra is not solvable");
  if (L.dim() <= 1) throw DimensionOne("needs dimension > 1");
  if (is_abelian(L))
    throw AbelianInput("every map is a half-derivation of an abelian algebra");
  int n = L.dim();
  Subspace c = center(L);
  Subspace der = derived_subalgebra(L);
  LinearMap out{Matrix(n, n), 0};
  if (c.dim() > 0) {
    Subspace meet = intersect(der, c);
    if (meet.dim() == 0) {
      // columns of B: a basis of [L,L], the standard vectors spanning a
      // complement V of [L,L] + center, then a basis of the center; the
      // projection reads off the center coordinates of B^{-1} e_i
      Subspace rest = subspace_sum(der, c);
      std::vector<SparseVec> columns = der.basis();
      std::vector<bool> pivot_cols(n, false);
      for (const auto& row : rest.basis()) pivot_cols[row.begin()->first] = true;
      for (int i = 0; i < n; ++i)
        if (!pivot_cols[i]) columns.push_back(SparseVec{{i, rat(1)}});
      int center_start = static_cast<int>(columns.size());
      for (const auto& v : c.basis()) columns.push_back(v);
      Matrix B(n, n);
      for (int col = 0; col < n; ++col)
        for (const auto& [r, x] : columns[col]) B.set(r, col, x);
      Matrix Binv = invert(B);
      for (int i = 0; i < n; ++i)
        for (int t = center_start; t < n; ++t) {
          Rational y = Binv.at(t, i);
          if (y != 0)
            for (const auto& [k, x] : columns[t]) {
              Rational cur = out.matrix.at(k, i);
              out.matrix.set(k, i, cur + y * x);
            }
        }
    } else {
      // phi(x) = (sum of complement coordinates of x) x1; the complement of
      // [L,L] is spanned by the standard vectors at its free columns, and
      // der.reduce computes exactly that component.
      SparseVec x1 = meet.basis()[0];
      for (int i = 0; i < n; ++i) {
        SparseVec res = der.reduce(SparseVec{{i, rat(1)}});
        Rational total = 0;
        for (const auto& [f, coeff] : res) total += coeff;
        if (total != 0)
          for (const auto& [k, coeff] : x1) out.matrix.set(k, i, coeff * total);
      }
    }
  } else {
    Subspace W = ann(L, der, der);
    CommonEigenvector ce = common_eigenvector(L, W);
    out.matrix = L.adjoint(ce.vector);
  }
  if (!check_delta_derivation(L, out, rat(1, 2)))
    throw Error("internal: constructed map is not a half-derivation");
  if (is_scalar_of_identity(out))
    throw Error("internal: constructed map is scalar");
  return out;
}

}  // namespace lieder
