#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/matched_pair.hpp"
#include "zinbiel/report.hpp"

namespace zinbiel {

/// B(e_i, e_j) = g[i][j]
class BilinearFormTable {
 public:
  BilinearFormTable() = default;
  explicit BilinearFormTable(Matrix g);

  std::size_t dim() const { return g_.rows(); }
  const Matrix& gram() const { return g_; }
  Scalar operator()(const Vector& x, const Vector& y) const;

 private:
  Matrix g_;
};

struct FormCheck {
  bool symmetric = false;
  bool invariant = false;
  bool nondegenerate = false;
  std::size_t rank = 0;
  /// form_symmetric, form_invariant, form_nondegenerate
  std::vector<Verdict> verdicts;
};

/// Symmetry, invariance B(x.y, z) = B(x, y.z) and nondegeneracy.
/// Symmetry witnesses are (i) with row vs column; invariance witnesses are
/// (x, y) with the covectors z -> B(x.y, z) and z -> B(x, y.z).
FormCheck check_form(const AlgebraTable& a, const BilinearFormTable& form);

/// [[0, I], [I, 0]] on A + A*.
BilinearFormTable standard_pairing(std::size_t n);

/// An algebra A and a product on its dual space.
struct BialgebraCandidate {
  AlgebraTable A;
  AlgebraTable Astar;

  void validate() const;
  friend bool operator==(const BialgebraCandidate&, const BialgebraCandidate&) = default;
};

/// Transposes against the natural pairing:
///   lA(x) = R(x)^T, rA(x) = L(x)^T on A*;  lB(a) = R*(a)^T, rB(a) = L*(a)^T on A.
MatchedPairData dual_reps(const BialgebraCandidate& bc);

/// On D = double_algebra(dual_reps(bc)) with the standard pairing:
/// premises form_symmetric and form_nondegenerate; claims
///   manin_a_subalgebras, manin_b_isotropic, manin_c_right_zinbiel,
///   manin_d_invariant.
AuditReport check_manin_triple(const BialgebraCandidate& bc, unsigned workers = 1);

/// Four conditions evaluated independently:
///   condition_1_manin_triple       every verdict of check_manin_triple
///   condition_2_lie_matched_pair   commutator(A), commutator(A*) with -ad^T
///   condition_3_zinbiel_matched_pair  check_matched_pair(dual_reps(bc))
///   condition_4_bialgebra          right law of the coproduct dualize(A*)
///                                  plus condition 3 rebuilt from it
/// Disagreement between the four is reported as a finding.
AuditReport equivalence_audit(const BialgebraCandidate& bc, unsigned workers = 1);

/// The four booleans of an equivalence report, in order.
std::array<bool, 4> equivalence_booleans(const AuditReport& report);

}  // namespace zinbiel
