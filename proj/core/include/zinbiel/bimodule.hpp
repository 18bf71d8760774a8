#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/report.hpp"

namespace zinbiel {

/// Two linear families l, r : A -> gl(V), given on the basis of A. Values
/// at arbitrary vectors come from linear extension. Matrices act on column
/// vectors and compose as functions: (M N) v = M (N v).
class Bimodule {
 public:
  Bimodule(AlgebraTable base, std::size_t v_dim, std::vector<Matrix> l, std::vector<Matrix> r);

  const AlgebraTable& base() const { return base_; }
  std::size_t v_dim() const { return v_dim_; }
  const std::vector<Matrix>& l() const { return l_; }
  const std::vector<Matrix>& r() const { return r_; }

  Matrix l_at(const Vector& x) const;
  Matrix r_at(const Vector& x) const;

  friend bool operator==(const Bimodule&, const Bimodule&) = default;

 private:
  AlgebraTable base_;
  std::size_t v_dim_;
  std::vector<Matrix> l_;
  std::vector<Matrix> r_;
};

/// sum_i x_i maps[i]
Matrix linear_extension(const std::vector<Matrix>& maps, const Vector& x, std::size_t rows,
                        std::size_t cols);

/// V = A, l_x = left multiplication, r_y = right multiplication.
Bimodule regular_bimodule(const AlgebraTable& a);
Bimodule zero_bimodule(const AlgebraTable& a, std::size_t v_dim);

/// One failing basis pair for one axiom, with both sides as matrices.
struct AxiomViolation {
  std::string axiom;
  std::size_t x = 0;
  std::size_t y = 0;
  Matrix lhs;
  Matrix rhs;
};

/// Checks, for every basis pair (x, y):
///   bimodule_l:  l_x l_y = l_{x.y} + l_{y.x}
///   bimodule_lr: l_x r_y = r_{x.y}
///   bimodule_r:  r_{x.y} = r_y r_x + r_y l_x
/// Empty exactly when (l, r, V) is a bimodule.
std::vector<AxiomViolation> check_bimodule(const Bimodule& b);

/// The same three axioms as verdicts with (x, y, v) witnesses.
std::vector<Verdict> bimodule_axiom_verdicts(const Bimodule& b);

/// Relations l_{xy} = r_y l_x (under both composition orders) and
/// r_x r_y = r_y r_x. Premises are the bimodule axioms.
AuditReport check_derived_relations(const Bimodule& b, const std::string& subject = "bimodule");

struct SubadjacentResult {
  /// x -> l_x - r_x on the basis.
  std::vector<Matrix> family;
  /// rho_{[x,y]} = rho_x rho_y - rho_y rho_x with [x,y] = x.y - y.x
  Verdict representation;
};

SubadjacentResult induced_subadjacent_map(const Bimodule& b);

/// Product on A + V: (x+u)*(y+v) = x.y + l_x v + r_y u. A-basis first.
AlgebraTable semidirect_sum(const Bimodule& b);

/// Axioms, derived relations, the sub-adjacent representation and the
/// semidirect-sum criterion in one report.
AuditReport audit_bimodule(const Bimodule& b, const std::string& subject = "bimodule",
                           unsigned workers = 1);

// Shared by the matched-pair and bialgebra checks.

/// Witnesses (tuple..., v) for every column where lhs and rhs differ.
void collect_matrix_witnesses(const std::vector<std::size_t>& prefix, const Matrix& lhs,
                              const Matrix& rhs, std::vector<Witness>& out);

}  // namespace zinbiel
