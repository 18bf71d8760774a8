#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/tensor_map.hpp"

namespace zinbiel {

/// Coproduct by coefficients: delta(e_k) = sum_{i,j} d[k][i][j] e_i (x) e_j.
class CoalgebraTable {
 public:
  CoalgebraTable() = default;
  CoalgebraTable(std::size_t dim, Tensor3 coproduct);

  static CoalgebraTable zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Tensor3& coproduct() const { return d_; }

  struct Term {
    std::size_t i;
    std::size_t j;
    Scalar coefficient;
  };
  /// Nonzero terms of delta(e_k) in (i, j) order.
  const std::vector<Term>& coproduct_of(std::size_t k) const { return terms_[k]; }

  friend bool operator==(const CoalgebraTable& a, const CoalgebraTable& b) {
    return a.dim_ == b.dim_ && a.d_ == b.d_;
  }

 private:
  std::size_t dim_ = 0;
  Tensor3 d_;
  std::vector<std::vector<Term>> terms_;
};

/// d[k][i][j] = c[i][j][k]
CoalgebraTable dualize(const AlgebraTable& a);
/// c[i][j][k] = d[k][i][j]
AlgebraTable dualize_co(const CoalgebraTable& c);

/// d'[k][i][j] = d[k][j][i]
CoalgebraTable opposite_coproduct(const CoalgebraTable& c);
/// d + swapped d
CoalgebraTable sym_coproduct(const CoalgebraTable& c);
/// d - swapped d
CoalgebraTable antisym_coproduct(const CoalgebraTable& c);

/// Element of a k-fold tensor power, keyed by basis tuples.
using LegTensor = std::map<std::vector<std::size_t>, Scalar>;

/// Evaluates a tensor-map expression built from id, tau, mu and delta.
/// Either structure may be absent when the equation does not use it.
class MapEvaluator {
 public:
  MapEvaluator(const AlgebraTable* product, const CoalgebraTable* coproduct);

  std::size_t dim() const { return dim_; }
  LegTensor apply(const MapChain& chain, const LegTensor& input) const;
  LegTensor apply(const std::vector<MapTerm>& terms, const LegTensor& input) const;

 private:
  LegTensor apply_factor(const MapFactor& f, const std::vector<std::size_t>& legs) const;

  const AlgebraTable* product_;
  const CoalgebraTable* coproduct_;
  std::size_t dim_ = 0;
};

/// Checks a map equation on every basis input. A witness tuple is the
/// input followed by all output legs but the last; lhs and rhs are vectors
/// over the last leg.
Verdict check_map_equation(const MapEvaluator& ev, const MapEquation& eq, std::string name,
                           std::string statement, unsigned workers = 1);

/// Coalgebra laws by name, as map equations in the tensor-map DSL:
/// co_right, co_left, cocommutative, coassociative, co_antisymmetric,
/// co_jacobi, eq33a, eq33b, eq34a, eq34b, eq35, eq36, eq37.
const std::map<std::string, std::string>& coalgebra_laws();

Verdict check_coalgebra_law(const CoalgebraTable& c, const std::string& law,
                            unsigned workers = 1);

/// (id x delta) delta = (delta x id) delta + ((tau delta) x id) delta
Verdict check_co_right(const CoalgebraTable& c, unsigned workers = 1);
/// (delta x id) delta = (id x delta) delta + (id x (tau delta)) delta
Verdict check_co_left(const CoalgebraTable& c, unsigned workers = 1);
/// delta = tau delta and coassociativity, as one verdict.
Verdict check_cocomm_coassoc(const CoalgebraTable& c, unsigned workers = 1);
/// delta = -tau delta and the co-Jacobi identity, as one verdict.
Verdict check_lie_coalgebra(const CoalgebraTable& c, unsigned workers = 1);

/// eq33a..eq37 evaluated on C and on its opposite coalgebra. Premise is
/// the right law on C; the left law is reported alongside.
AuditReport check_aux_coalgebra_identities(const CoalgebraTable& c,
                                           const std::string& subject = "coalgebra",
                                           unsigned workers = 1);

/// The auxiliary identities plus the opposite, symmetrized and
/// antisymmetrized statements.
AuditReport audit_coalgebra(const CoalgebraTable& c, const std::string& subject = "coalgebra",
                            unsigned workers = 1);

}  // namespace zinbiel
