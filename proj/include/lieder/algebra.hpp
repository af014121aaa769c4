#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieder/linalg.hpp"

namespace lieder {

// One basis element. `parity` is the superalgebra degree and drives Koszul
// signs; `grading` is a plain Z2 bookkeeping tag on ordinary Lie algebras
// (it constrains even/odd solver modes but never produces signs).
struct BasisSymbol {
  std::string label;
  int parity = 0;
  int grading = 0;

  bool operator==(const BasisSymbol&) const = default;
};

struct BracketEntry {
  std::string x, y;
  std::vector<std::pair<std::string, Rational>> value;
};

struct AlgebraDescription {
  std::string name;
  std::vector<BasisSymbol> basis;
  std::vector<BracketEntry> brackets;
};

struct JacobiViolation {
  int i, j, k;
  SparseVec residual;
};

struct JacobiReport {
  bool pass = true;
  std::vector<JacobiViolation> violations;
};

inline bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto tail = [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9') || c == '_';
  };
  if (!alpha(s[0])) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!tail(s[i])) return false;
  return true;
}

// Finite-dimensional Lie (super)algebra given by structure constants.
// Only pairs i < j are stored, plus [e_i, e_i] for odd e_i; the reversed
// bracket is derived with the super sign, so antisymmetry cannot be broken
// by construction.
class LieAlgebra {
 public:
  static LieAlgebra build(const AlgebraDescription& desc) {
    LieAlgebra L;
    L.name_ = desc.name;
    L.basis_ = desc.basis;
    for (int i = 0; i < L.dim(); ++i) {
      const auto& sym = L.basis_[i];
      if (!valid_label(sym.label))
        throw BuildError("invalid basis label '" + sym.label + "'");
      if (sym.parity != 0 && sym.parity != 1)
        throw BuildError("parity of '" + sym.label + "' must be 0 or 1");
      if (sym.grading != 0 && sym.grading != 1)
        throw BuildError("grading of '" + sym.label + "' must be 0 or 1");
      if (!L.index_.emplace(sym.label, i).second)
        throw BuildError("duplicate basis label '" + sym.label + "'");
      if (sym.parity == 1) L.super_ = true;
    }
    for (const auto& entry : desc.brackets) L.add_bracket(entry);
    return L;
  }

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_super() const { return super_; }
  const std::vector<BasisSymbol>& basis() const { return basis_; }
  int parity(int i) const { return basis_[i].parity; }
  int grading(int i) const { return basis_[i].grading; }
  const std::string& label(int i) const { return basis_[i].label; }

  std::optional<int> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Z2 tag used by parity-constrained solver modes: the super degree for
  // superalgebras, the bookkeeping grading otherwise.
  int solver_tag(int i) const { return super_ ? parity(i) : grading(i); }

  const std::map<std::pair<int, int>, SparseVec>& constants() const {
    return constants_;
  }
  const std::map<int, SparseVec>& odd_diagonal() const { return diagonal_; }

  SparseVec bracket_basis(int i, int j) const {
    if (i == j) {
      if (parity(i) == 0) return {};
      auto it = diagonal_.find(i);
      return it == diagonal_.end() ? SparseVec{} : it->second;
    }
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = constants_.find({i, j});
    SparseVec v = it == constants_.end() ? SparseVec{} : it->second;
    if (flip) {
      Rational sign = (super_ && parity(i) == 1 && parity(j) == 1) ? 1 : -1;
      vec_scale(v, sign);
    }
    return v;
  }

  SparseVec bracket(const SparseVec& v, const SparseVec& w) const {
    SparseVec out;
    for (const auto& [i, a] : v)
      for (const auto& [j, b] : w) vec_axpy(out, a * b, bracket_basis(i, j));
    return out;
  }

  // Matrix of ad_{e_i} : e_j -> [e_i, e_j].
  Matrix adjoint_basis(int i) const {
    Matrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j)
      for (const auto& [k, c] : bracket_basis(i, j)) m.set(k, j, c);
    return m;
  }

  Matrix adjoint(const SparseVec& x) const {
    Matrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
      SparseVec ej{{j, rat(1)}};
      for (const auto& [k, c] : bracket(x, ej)) m.set(k, j, c);
    }
    return m;
  }

  // Exhaustive super Jacobi check over basis triples i <= j <= k:
  //   (-1)^{|x||z|}[[x,y],z] + (-1)^{|y||x|}[[y,z],x] + (-1)^{|z||y|}[[z,x],y]
  JacobiReport validate_jacobi() const {
    JacobiReport report;
    for (int i = 0; i < dim(); ++i)
      for (int j = i; j < dim(); ++j)
        for (int k = j; k < dim(); ++k) {
          SparseVec res = jacobiator(i, j, k);
          if (!res.empty()) {
            report.pass = false;
            report.violations.push_back({i, j, k, std::move(res)});
          }
        }
    return report;
  }

  SparseVec jacobiator(int i, int j, int k) const {
    auto sgn = [&](int a, int b) -> Rational {
      return (super_ && parity(a) == 1 && parity(b) == 1) ? -1 : 1;
    };
    SparseVec ei{{i, rat(1)}}, ej{{j, rat(1)}}, ek{{k, rat(1)}};
    SparseVec res;
    vec_axpy(res, sgn(i, k), bracket(bracket_basis(i, j), ek));
    vec_axpy(res, sgn(j, i), bracket(bracket_basis(j, k), ei));
    vec_axpy(res, sgn(k, j), bracket(bracket_basis(k, i), ej));
    return res;
  }

  // Quotient by an ideal, returned together with the canonical projection
  // onto the complement coordinates (rows index the quotient basis).
  std::pair<LieAlgebra, Matrix> quotient(const Subspace& ideal) const {
    if (ideal.ambient() != dim())
      throw DimensionMismatch("ideal lives in a different ambient space");
    for (int i = 0; i < dim(); ++i)
      for (const auto& v : ideal.basis()) {
        SparseVec ei{{i, rat(1)}};
        if (!ideal.contains(bracket(ei, v)))
          throw NotAnIdeal("bracket of basis element '" + label(i) +
                           "' with an ideal vector leaves the subspace");
      }
    std::vector<bool> is_pivot(dim(), false);
    for (const auto& row : ideal.basis()) is_pivot[row.begin()->first] = true;
    std::vector<int> free_cols;
    for (int i = 0; i < dim(); ++i)
      if (!is_pivot[i]) free_cols.push_back(i);

    AlgebraDescription desc;
    desc.name = name_ + "/ideal";
    for (int f : free_cols) desc.basis.push_back(basis_[f]);
    int q = static_cast<int>(free_cols.size());
    // reduce(v) is supported on free columns only, so the projection of e_i
    // is the free part of reduce(e_i).
    Matrix proj(q, dim());
    for (int i = 0; i < dim(); ++i) {
      SparseVec ei{{i, rat(1)}};
      SparseVec red = ideal.reduce(ei);
      for (int a = 0; a < q; ++a) proj.set(a, i, vec_get(red, free_cols[a]));
    }
    for (int a = 0; a < q; ++a)
      for (int b = a; b < q; ++b) {
        if (a == b && parity(free_cols[a]) == 0) continue;
        SparseVec w = ideal.reduce(bracket_basis(free_cols[a], free_cols[b]));
        if (w.empty()) continue;
        BracketEntry entry;
        entry.x = label(free_cols[a]);
        entry.y = label(free_cols[b]);
        for (int c = 0; c < q; ++c) {
          Rational coeff = vec_get(w, free_cols[c]);
          if (coeff != 0) entry.value.emplace_back(label(free_cols[c]), coeff);
        }
        desc.brackets.push_back(std::move(entry));
      }
    return {build(desc), proj};
  }

  static LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    AlgebraDescription desc;
    desc.name = a.name_ + "+" + b.name_;
    std::set<std::string> used;
    for (const auto& s : a.basis_) {
      desc.basis.push_back(s);
      used.insert(s.label);
    }
    std::vector<std::string> renamed(b.dim());
    for (int i = 0; i < b.dim(); ++i) {
      std::string lbl = b.basis_[i].label;
      int suffix = 2;
      while (used.count(lbl)) lbl = b.basis_[i].label + "_" + std::to_string(suffix++);
      used.insert(lbl);
      renamed[i] = lbl;
      BasisSymbol s = b.basis_[i];
      s.label = lbl;
      desc.basis.push_back(std::move(s));
    }
    auto emit = [&](const LieAlgebra& src, auto name_of) {
      for (const auto& [ij, v] : src.constants_) {
        BracketEntry e;
        e.x = name_of(ij.first);
        e.y = name_of(ij.second);
        for (const auto& [k, c] : v) e.value.emplace_back(name_of(k), c);
        desc.brackets.push_back(std::move(e));
      }
      for (const auto& [i, v] : src.diagonal_) {
        BracketEntry e;
        e.x = name_of(i);
        e.y = name_of(i);
        for (const auto& [k, c] : v) e.value.emplace_back(name_of(k), c);
        desc.brackets.push_back(std::move(e));
      }
    };
    emit(a, [&](int i) { return a.label(i); });
    emit(b, [&](int i) { return renamed[i]; });
    return build(desc);
  }

  AlgebraDescription description() const {
    AlgebraDescription desc;
    desc.name = name_;
    desc.basis = basis_;
    auto emit = [&](int i, int j, const SparseVec& v) {
      BracketEntry e;
      e.x = label(i);
      e.y = label(j);
      for (const auto& [k, c] : v) e.value.emplace_back(label(k), c);
      desc.brackets.push_back(std::move(e));
    };
    for (const auto& [ij, v] : constants_) emit(ij.first, ij.second, v);
    for (const auto& [i, v] : diagonal_) emit(i, i, v);
    return desc;
  }

 private:
  void add_bracket(const BracketEntry& entry) {
    auto xi = index_of(entry.x);
    if (!xi) throw BuildError("unknown label '" + entry.x + "' in bracket");
    auto yi = index_of(entry.y);
    if (!yi) throw BuildError("unknown label '" + entry.y + "' in bracket");
    SparseVec v;
    int want_parity = (parity(*xi) + parity(*yi)) % 2;
    for (const auto& [lbl, coeff] : entry.value) {
      auto k = index_of(lbl);
      if (!k) throw BuildError("unknown label '" + lbl + "' in bracket value");
      if (coeff == 0) continue;
      if (parity(*k) != want_parity)
        throw BuildError("bracket [" + entry.x + "," + entry.y +
                         "] is not parity-homogeneous at '" + lbl + "'");
      auto it = v.find(*k);
      if (it == v.end())
        v.emplace(*k, coeff);
      else {
        it->second += coeff;
        if (it->second == 0) v.erase(it);
      }
    }
    int i = *xi, j = *yi;
    if (i == j) {
      if (parity(i) == 0) {
        if (!v.empty())
          throw BuildError("[x,x] must vanish for even '" + entry.x + "'");
        return;
      }
      if (v.empty()) return;
      if (!diagonal_.emplace(i, std::move(v)).second)
        throw BuildError("duplicate bracket [" + entry.x + "," + entry.y + "]");
      return;
    }
    if (i > j) {
      std::swap(i, j);
      Rational sign = (super_ && parity(i) == 1 && parity(j) == 1) ? 1 : -1;
      vec_scale(v, sign);
    }
    if (v.empty()) return;
    if (!constants_.emplace(std::make_pair(i, j), std::move(v)).second)
      throw BuildError("duplicate bracket [" + entry.x + "," + entry.y + "]");
  }

  std::string name_;
  std::vector<BasisSymbol> basis_;
  std::map<std::string, int> index_;
  bool super_ = false;
  std::map<std::pair<int, int>, SparseVec> constants_;  // i < j
  std::map<int, SparseVec> diagonal_;                   // odd i only
};

}  // namespace lieder
