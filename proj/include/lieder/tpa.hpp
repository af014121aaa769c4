#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieder/derivations.hpp"

namespace lieder {

// Commutative product on the algebra's coordinate space, stored on pairs
// i <= j; symmetry is a storage convention rather than a checked property.
class CommProduct {
 public:
  CommProduct() = default;
  explicit CommProduct(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool is_zero() const { return entries_.empty(); }
  const std::map<std::pair<int, int>, SparseVec>& entries() const {
    return entries_;
  }

  void set(int i, int j, SparseVec value) {
    if (i > j) std::swap(i, j);
    if (value.empty())
      entries_.erase({i, j});
    else
      entries_[{i, j}] = std::move(value);
  }

  SparseVec prod_basis(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? SparseVec{} : it->second;
  }

  SparseVec prod(const SparseVec& v, const SparseVec& w) const {
    SparseVec out;
    for (const auto& [i, a] : v)
      for (const auto& [j, b] : w) vec_axpy(out, a * b, prod_basis(i, j));
    return out;
  }

 private:
  int dim_ = 0;
  std::map<std::pair<int, int>, SparseVec> entries_;
};

struct TripleWitness {
  int a, b, c;
  SparseVec lhs, rhs;
};

struct VerifyReport {
  bool pass = true;
  std::vector<TripleWitness> witnesses;
};

// Associativity scan over all basis triples (commutativity holds by
// storage); witnesses record both sides of the first failures.
inline VerifyReport verify_comm_assoc(const LieAlgebra& L,
                                      const CommProduct& p,
                                      std::size_t max_witnesses = 10) {
  VerifyReport report;
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SparseVec ek{{k, rat(1)}}, ei{{i, rat(1)}};
        SparseVec lhs = p.prod(p.prod_basis(i, j), ek);
        SparseVec rhs = p.prod(ei, p.prod_basis(j, k));
        if (!(lhs == rhs)) {
          report.pass = false;
          if (report.witnesses.size() < max_witnesses)
            report.witnesses.push_back({i, j, k, std::move(lhs), std::move(rhs)});
        }
      }
  return report;
}

// Compatibility 2 z (x y) = [z x, y] + [x, z y] on all basis triples
// (z, x, y); trilinearity makes basis coverage sufficient.
inline VerifyReport verify_tp_compat(const LieAlgebra& L, const CommProduct& p,
                                     std::size_t max_witnesses = 10) {
  VerifyReport report;
  int n = L.dim();
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        SparseVec ez{{z, rat(1)}}, ex{{x, rat(1)}}, ey{{y, rat(1)}};
        SparseVec lhs = vec_scaled(p.prod(ez, L.bracket_basis(x, y)), 2);
        SparseVec rhs = L.bracket(p.prod_basis(z, x), ey);
        vec_axpy(rhs, 1, L.bracket(ex, p.prod_basis(z, y)));
        if (!(lhs == rhs)) {
          report.pass = false;
          if (report.witnesses.size() < max_witnesses)
            report.witnesses.push_back({z, x, y, std::move(lhs), std::move(rhs)});
        }
      }
  return report;
}

enum class TPVerified { Unverified, Verified, Failed };

struct TPStructure {
  std::string algebra_name;
  CommProduct product;
  TPVerified verified = TPVerified::Unverified;
  VerifyReport assoc_report;
  VerifyReport compat_report;

  bool nontrivial() const { return !product.is_zero(); }
};

inline TPStructure verify_tp_structure(const LieAlgebra& L, CommProduct p) {
  TPStructure out;
  out.algebra_name = L.name();
  out.product = std::move(p);
  out.assoc_report = verify_comm_assoc(L, out.product);
  out.compat_report = verify_tp_compat(L, out.product);
  out.verified = (out.assoc_report.pass && out.compat_report.pass)
                     ? TPVerified::Verified
                     : TPVerified::Failed;
  return out;
}

// Right multiplication v -> v z; on a verified transposed Poisson structure
// this is always a half-derivation of the bracket.
inline LinearMap right_mult_map(const LieAlgebra& L, const CommProduct& p,
                                const SparseVec& z) {
  int n = L.dim();
  LinearMap out{Matrix(n, n), 0};
  for (int t = 0; t < n; ++t) {
    SparseVec et{{t, rat(1)}};
    for (const auto& [k, c] : p.prod(et, z)) out.matrix.set(k, t, c);
  }
  return out;
}

// Nontrivial transposed Poisson product on any solvable algebra:
//   (iii) abelian: rank-one product on the first coordinate functional;
//   (i) nonzero center: rank-one product f(v) f(w) c with f vanishing on
//       [L,L] and c central, associative and compatible by construction;
//   (ii) centerless: x y = [[w0, x], y] for a joint eigenvector w0 of the
//       adjoint action on Ann_{[L,L]}([L,L]).
inline TPStructure tp_construct_solvable(const LieAlgebra& L) {
  if (!is_solvable(L)) throw NotSolvable("algebra is not solvable");
  int n = L.dim();
  CommProduct p(n);
  if (is_abelian(L)) {
    SparseVec e0{{0, rat(1)}};
    p.set(0, 0, e0);
  } else {
    Subspace c = center(L);
    Subspace der = derived_subalgebra(L);
    if (c.dim() > 0) {
      SparseVec target = c.basis()[0];
      // f = coefficient at the first free column of [L,L]'s echelon form
      std::vector<bool> pivot_cols(n, false);
      for (const auto& row : der.basis()) pivot_cols[row.begin()->first] = true;
      int f0 = 0;
      while (f0 < n && pivot_cols[f0]) ++f0;
      std::vector<Rational> f(n, Rational(0));
      for (int i = 0; i < n; ++i) {
        SparseVec res = der.reduce(SparseVec{{i, rat(1)}});
        f[i] = vec_get(res, f0);
      }
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Rational coeff = f[i] * f[j];
          if (coeff != 0) p.set(i, j, vec_scaled(target, coeff));
        }
    } else {
      Subspace W = ann(L, der, der);
      CommonEigenvector ce = common_eigenvector(L, W);
      for (int i = 0; i < n; ++i) {
        SparseVec ei{{i, rat(1)}};
        SparseVec wi = L.bracket(ce.vector, ei);
        for (int j = i; j < n; ++j) {
          SparseVec ej{{j, rat(1)}};
          SparseVec val = L.bracket(wi, ej);
          if (!val.empty()) p.set(i, j, std::move(val));
        }
      }
    }
  }
  TPStructure out = verify_tp_structure(L, std::move(p));
  if (out.verified != TPVerified::Verified)
    throw Error("internal: constructed product failed verification");
  if (!out.nontrivial())
    throw Error("internal: constructed product is zero");
  return out;
}

struct NonexistenceReport {
  bool certified = false;
  DerivationSpace half_derivations;
  std::string statement;
};

// Dichotomy used for certification: on a Lie algebra of dimension > 1 whose
// half-derivations are exactly the scalar maps, right multiplications of any
// transposed Poisson product are scalars, which forces the product to zero.
inline NonexistenceReport tp_nonexistence_report(const LieAlgebra& L) {
  if (L.dim() <= 1)
    throw DimensionOne("certification needs dimension > 1");
  NonexistenceReport out;
  out.half_derivations = delta_derivations(L, rat(1, 2), ParityMode::Full);
  out.certified = is_trivial_space(out.half_derivations);
  if (out.certified) {
    out.statement =
        "CERTIFICATE: every transposed Poisson structure on " + L.name() +
        " is trivial (the product is identically zero). Reason: dim " +
        L.name() + " = " + std::to_string(L.dim()) +
        " > 1 and the space of 1/2-derivations of the bracket is "
        "1-dimensional, consisting of the scalar maps only; right "
        "multiplications of a transposed Poisson product are "
        "1/2-derivations, and scalar right multiplications force the "
        "product to vanish on an algebra of dimension > 1.";
  } else {
    out.statement =
        "INCONCLUSIVE: " + L.name() + " carries a " +
        std::to_string(out.half_derivations.dim()) +
        "-dimensional space of 1/2-derivations (non-scalar maps exist), so "
        "triviality of transposed Poisson structures cannot be certified "
        "this way.";
  }
  return out;
}

}  // namespace lieder
