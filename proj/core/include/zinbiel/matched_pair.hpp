#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/bimodule.hpp"
#include "zinbiel/report.hpp"

namespace zinbiel {

/// Two algebras acting on each other. lA, rA are indexed by the basis of A
/// and act on B (p x p); lB, rB are indexed by the basis of B and act on A
/// (n x n).
struct MatchedPairData {
  AlgebraTable A;
  AlgebraTable B;
  std::vector<Matrix> lA, rA, lB, rB;

  /// Throws DimensionError on any shape mismatch.
  void validate() const;

  friend bool operator==(const MatchedPairData&, const MatchedPairData&) = default;
};

/// All maps zero.
MatchedPairData trivial_matched_pair(const AlgebraTable& a, const AlgebraTable& b);

/// (lA, rA, B) as a bimodule of A and (lB, rB, A) as a bimodule of B.
Bimodule bimodule_on_B(const MatchedPairData& mp);
Bimodule bimodule_on_A(const MatchedPairData& mp);

/// Reads a matched pair off an algebra D whose basis splits into two
/// subalgebras: `a_indices` span A (in the given order), the remaining
/// basis vectors span B. Throws InputError if either span is not closed.
MatchedPairData split_algebra(const AlgebraTable& d, const std::vector<std::size_t>& a_indices);

/// A acting on its bimodule V; V carries the zero product and does not act back.
MatchedPairData from_bimodule(const Bimodule& b);

/// One violated condition at one basis tuple.
struct ConditionViolation {
  std::string condition;
  Witness witness;
};

/// Every condition as a verdict, in a fixed order:
///   A_right_zinbiel, B_right_zinbiel, the three bimodule axioms for each
///   of the two actions (prefixed "A_on_B." and "B_on_A."), then
///   eq26, eq27, eq28a, eq28b, eq29a, eq29b.
/// Tuples use e for A-basis and f for B-basis slots.
std::vector<Verdict> matched_pair_verdicts(const MatchedPairData& mp);

/// Empty exactly when every condition above holds.
std::vector<ConditionViolation> check_matched_pair(const MatchedPairData& mp);

/// Product on A + B (A-basis first):
///   (x+a)*(y+b) = (x.y + lB(a)y + rB(b)x) + (a o b + lA(x)b + rA(y)a)
AlgebraTable double_algebra(const MatchedPairData& mp);

/// Two algebras G (dim n) and H (dim p) with on_H indexed by G acting on H
/// and on_G indexed by H acting on G.
struct ActionPair {
  AlgebraTable G;
  AlgebraTable H;
  std::vector<Matrix> on_H;
  std::vector<Matrix> on_G;
};

/// Commutative associative matched pair: G, H commutative and associative
/// (premises), both actions representations (m(x.y) = m(x)m(y)), and
///   on_H(x)(a o b) = (on_H(x)a) o b + on_H(on_G(a)x) b
///   on_G(a)(x . y) = (on_G(a)x) . y + on_G(on_H(x)a) y
AuditReport check_commassoc_matched_pair(const ActionPair& p, const std::string& subject);

/// Lie matched pair: Jacobi on G and H (premises), both actions Lie
/// representations, and
///   on_H(x)[a,b] - [on_H(x)a,b] - [a,on_H(x)b] + on_H(on_G(a)x)b - on_H(on_G(b)x)a = 0
///   on_G(a)[x,y] - [on_G(a)x,y] - [x,on_G(a)y] + on_G(on_H(x)a)y - on_G(on_H(y)a)x = 0
AuditReport check_lie_matched_pair(const ActionPair& p, const std::string& subject);

/// symmetrize(A), symmetrize(B) with lA+rA and lB+rB.
AuditReport induced_commassoc_pair(const MatchedPairData& mp);
/// commutator(A), commutator(B) with lA-rA and lB-rB.
AuditReport induced_lie_pair(const MatchedPairData& mp);

/// True when every premise and claim of the report holds.
bool all_hold(const AuditReport& report);

/// Conditions, the double criterion and both induced pairs in one report.
AuditReport audit_matched_pair(const MatchedPairData& mp, const std::string& subject = "matched pair",
                               unsigned workers = 1);

}  // namespace zinbiel
